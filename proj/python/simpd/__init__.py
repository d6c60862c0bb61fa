"""Exact contiguity and cover distances between simplicial maps.

The heavy lifting lives in the compiled extension; this package re-exports
it and adds a couple of convenience helpers.
"""

try:
    from ._simpd import *  # noqa: F401,F403  (installed wheel layout)
    from ._simpd import __doc__ as _core_doc
except ImportError:  # build-tree layout: extension next to the package dir
    from _simpd import *  # noqa: F401,F403
    from _simpd import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
__version__ = "0.1.0"


def complex_from_simplices(simplices):
    """Build an OrderedComplex from an iterable of vertex lists."""
    from . import OrderedComplex  # type: ignore[attr-defined]

    return OrderedComplex([list(s) for s in simplices])


def circle(n=3):
    """The n-gon triangulation of the circle (n >= 3)."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return complex_from_simplices(
        sorted(sorted((i, (i + 1) % n)) for i in range(n))
    )
