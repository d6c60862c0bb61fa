#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "simpd/error.hpp"
#include "simpd/options.hpp"

namespace simpd {

using Vertex = int;

/// A simplex in canonical form: non-empty, strictly increasing vertex ids.
using Simplex = std::vector<Vertex>;

Simplex canonical_simplex(Simplex s);
bool is_canonical(const Simplex& s);
bool is_subset(const Simplex& a, const Simplex& b); // both canonical
std::string simplex_to_string(const Simplex& s);    // "[0 1 2]"

/// Finite abstract simplicial complex with the integer order on vertex ids.
/// Only maximal simplices are stored; faces are implied. Instances are
/// immutable after validate(); all operations return new values.
class OrderedComplex {
public:
    OrderedComplex() = default;

    /// Raw constructor: accepts possibly ill-formed data so validate() can
    /// report it. Use create() for the validating path.
    explicit OrderedComplex(std::vector<Simplex> maximal,
                            std::vector<Vertex> extra_vertices = {});

    static OrderedComplex create(std::vector<Simplex> maximal,
                                 std::vector<Vertex> extra_vertices = {});

    /// Checks all invariants; idempotent. Throws DuplicateVertexInSimplex,
    /// RedundantMaximalSimplex or OrphanVertex naming the offending element.
    void validate() const;

    bool empty() const { return maximal_.empty() && vertices_.empty(); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int maximal_count() const { return static_cast<int>(maximal_.size()); }
    int dim() const;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }

    /// Downward closure, sorted by (dimension, lex vertex list).
    std::vector<Simplex> all_simplices() const;

    bool has_vertex(Vertex v) const;
    int dense_index(Vertex v) const; // position in vertices(), -1 if absent
    Vertex vertex_at(int dense) const { return vertices_[dense]; }

    bool operator==(const OrderedComplex& o) const {
        return vertices_ == o.vertices_ && maximal_ == o.maximal_;
    }
    bool operator!=(const OrderedComplex& o) const { return !(*this == o); }

    // Dense acceleration structures (valid once the content is canonical).
    const std::vector<std::vector<int>>& maximal_dense() const { return maximal_dense_; }
    const std::vector<std::vector<int>>& vertex_star() const { return star_; }
    int mask_words() const { return mask_words_; }
    const std::vector<std::vector<std::uint64_t>>& maximal_masks() const { return masks_; }

    /// True iff the dense-index mask is a subset of some maximal simplex.
    bool mask_is_simplex(const std::uint64_t* words) const;

private:
    void build_dense();

    std::vector<Vertex> vertices_;  // sorted, distinct
    std::vector<Simplex> maximal_;  // sorted lex
    std::vector<Vertex> extras_;    // explicitly declared vertices

    std::vector<std::vector<int>> maximal_dense_;
    std::vector<std::vector<std::uint64_t>> masks_;
    std::vector<std::vector<int>> star_;
    int mask_words_ = 0;
    mutable bool validated_ = false;
};

/// Membership test: true iff s (canonical) is a face of some maximal simplex.
bool has_simplex(const OrderedComplex& k, const Simplex& s);

/// Downward-closed subcomplex generated by the given simplices of `k`,
/// with the maximal set recomputed. Vertex ids are kept.
OrderedComplex full_subcomplex(const OrderedComplex& k,
                               const std::vector<Simplex>& generators);

/// Ordered product K x L together with its vertex encoding table.
/// Product vertex ids are the lexicographic ranks of (left, right) pairs;
/// the table is required by the projection maps.
struct ProductComplex {
    OrderedComplex complex;
    OrderedComplex left;
    OrderedComplex right;
    std::vector<std::pair<Vertex, Vertex>> pairs; // product id -> (left, right)
};

/// Simplices of the product are the chains under the componentwise order
/// whose two projections are simplices of the factors.
ProductComplex ordered_product(const OrderedComplex& k, const OrderedComplex& l);

} // namespace simpd
