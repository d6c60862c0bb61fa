#pragma once

#include <vector>

#include "simpd/complex.hpp"
#include "simpd/maps.hpp"
#include "simpd/options.hpp"

namespace simpd {

/// A barycentric subdivision together with its provenance. Vertex w of
/// `complex` is the barycenter of `barycenters[w]`, a simplex of `previous`.
/// Ids are assigned in (dimension, lex) order of the subdivided simplices,
/// so the integer order is chain-compatible with inclusion.
struct SubdividedComplex {
    OrderedComplex complex;
    OrderedComplex previous; // empty at level 0
    int level = 0;
    std::vector<Simplex> barycenters; // empty at level 0
};

/// One barycentric subdivision step. Simplices of the result are the strict
/// inclusion chains of simplices of k; an n-simplex contributes (n+1)!
/// maximal chains. Refuses (BudgetExceeded) past opts.max_simplices.
SubdividedComplex subdivide(const OrderedComplex& k, const SearchOptions& opts = {});

/// b-fold subdivision; b = 0 wraps k unchanged at level 0.
SubdividedComplex subdivide_iter(const OrderedComplex& k, int b,
                                 const SearchOptions& opts = {});

enum class ApproximationRule {
    LastVertex,  // barycenter of s -> max(s); the canonical choice
    FirstVertex, // barycenter of s -> min(s); used for independence probes
};

/// The canonical simplicial approximation of the identity
/// Sd(previous) -> previous: each barycenter goes to the last vertex of the
/// simplex it subdivides.
SimplicialMap last_vertex_approximation(const SubdividedComplex& sd);

/// The first-vertex variant; also satisfies the star condition.
SimplicialMap first_vertex_approximation(const SubdividedComplex& sd);

/// Iterated composite Sd^from_b(k) -> Sd^to_b(k) of per-level approximation
/// steps; from_b == to_b gives the identity map.
SimplicialMap iterate_approximation(const OrderedComplex& k, int from_b, int to_b,
                                    ApproximationRule rule = ApproximationRule::LastVertex,
                                    const SearchOptions& opts = {});

/// Star condition: candidate sends each barycenter of s into s. Maps with
/// this property are exactly the simplicial approximations of the identity.
bool is_approximation_of_identity(const SimplicialMap& candidate,
                                  const SubdividedComplex& sd);

/// Every vertex map satisfying the star condition, in lex order. Such maps
/// are automatically simplicial; useful for approximation-independence
/// checks on small complexes.
std::vector<SimplicialMap> all_identity_approximations(const SubdividedComplex& sd,
                                                       std::size_t limit = 4096);

} // namespace simpd
