#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "simpd/complex.hpp"
#include "simpd/distance_value.hpp"
#include "simpd/options.hpp"

namespace simpd {

/// A vertex map carrying every simplex of the domain to a simplex of the
/// codomain. Construction validates on maximal simplices; faces inherit.
class SimplicialMap {
public:
    SimplicialMap() = default;

    const OrderedComplex& domain() const { return domain_; }
    const OrderedComplex& codomain() const { return codomain_; }

    /// Images in dense domain-vertex order (codomain vertex ids).
    const std::vector<Vertex>& images() const { return images_; }

    Vertex apply(Vertex v) const;
    Simplex image(const Simplex& s) const; // canonical image vertex set

    bool same_assignment(const SimplicialMap& o) const {
        return images_ == o.images_;
    }
    bool operator==(const SimplicialMap& o) const {
        return domain_ == o.domain_ && codomain_ == o.codomain_ &&
               images_ == o.images_;
    }
    bool operator!=(const SimplicialMap& o) const { return !(*this == o); }

    /// Trusted constructor for maps that are simplicial by construction
    /// (compositions, restrictions, search states).
    static SimplicialMap unchecked(OrderedComplex domain, OrderedComplex codomain,
                                   std::vector<Vertex> dense_images);

private:
    OrderedComplex domain_;
    OrderedComplex codomain_;
    std::vector<Vertex> images_;
};

/// Validates a vertex assignment as a simplicial map.
/// Throws UnmappedVertex or NotSimplicial naming a violating maximal simplex.
SimplicialMap check_simplicial(const OrderedComplex& domain,
                               const OrderedComplex& codomain,
                               const std::vector<std::pair<Vertex, Vertex>>& assignment);

SimplicialMap identity_map(const OrderedComplex& k);
SimplicialMap constant_map(const OrderedComplex& domain,
                           const OrderedComplex& codomain, Vertex value);

/// Projection of an ordered product onto factor 1 or 2.
SimplicialMap projection(const ProductComplex& p, int factor_index);

/// Contiguity of a pair: f(s) ∪ g(s) is a simplex for every maximal s.
bool contiguous_pair(const SimplicialMap& f, const SimplicialMap& g);

/// Composition g ∘ f; simplicial by construction.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Restriction of f to a subcomplex j of its domain.
SimplicialMap restrict_map(const SimplicialMap& f, const OrderedComplex& j);

/// H_0, ..., H_c with consecutive pairs contiguous; length() == c.
struct ContiguityChain {
    std::vector<SimplicialMap> steps;
    int length() const { return static_cast<int>(steps.size()) - 1; }
};

/// Throws unless the chain is valid and runs from `from` to `to`.
void validate_chain(const ContiguityChain& chain, const SimplicialMap& from,
                    const SimplicialMap& to);

struct ContiguityResult {
    DistanceValue value;
    std::optional<ContiguityChain> chain; // present iff value is Finite
};

/// Least c <= max_c with f ~_c g, by breadth-first search over the graph of
/// all simplicial maps domain -> codomain with contiguous pairs as edges.
/// Infinite is returned only when the whole reachable component was
/// exhausted; a max_c truncation yields Unknown. The witness chain is the
/// lexicographically least one (maps compared by their image vectors).
ContiguityResult contiguity_distance(const SimplicialMap& f, const SimplicialMap& g,
                                     int max_c, const SearchOptions& opts = {});

/// Decides f ~_c g and returns the least chain, without exploring past
/// depth c. Used by the cover predicate; same search core as above.
std::optional<ContiguityChain> bounded_contiguity(const SimplicialMap& f,
                                                  const SimplicialMap& g, int c,
                                                  const SearchOptions& opts = {});

} // namespace simpd
