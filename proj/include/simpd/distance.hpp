#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simpd/complex.hpp"
#include "simpd/distance_value.hpp"
#include "simpd/maps.hpp"
#include "simpd/options.hpp"
#include "simpd/subdivision.hpp"

namespace simpd {

/// Inputs of one distance computation: two parallel maps K -> L, the
/// subdivision level b, the chain budget c, and the approximation rule
/// used for the composite through Sd^b(K).
struct SimpDistQuery {
    SimplicialMap phi;
    SimplicialMap psi;
    int b = 0;
    int c = 0;
    ApproximationRule rule = ApproximationRule::LastVertex;
};

/// The composite f ∘ iota : Sd^b(domain of f) -> codomain of f.
SimplicialMap subdivided_composite(const SimplicialMap& f, int b,
                                   ApproximationRule rule = ApproximationRule::LastVertex,
                                   const SearchOptions& opts = {});

/// Witness for a Finite value: subcomplex pieces whose maximal simplices
/// cover those of Sd^b(K), with one contiguity chain per piece between the
/// restricted composites of phi and psi.
struct CoverCertificate {
    std::vector<OrderedComplex> pieces;
    std::vector<ContiguityChain> chains;
    int k = 0;
};

struct SimpDistResult {
    DistanceValue value;
    std::optional<CoverCertificate> certificate;  // Finite only
    std::optional<Simplex> infeasible_witness;    // Infinite only: a maximal
                                                  // simplex of Sd^b(K) whose
                                                  // singleton piece fails
};

/// True iff the composites of phi and psi through Sd^b restrict to
/// c-contiguous maps on the subcomplex j of Sd^b(K). Always decided;
/// budget violations throw.
bool piece_predicate(const SimpDistQuery& q, const OrderedComplex& j,
                     const SearchOptions& opts = {});

/// Exact minimum k admitting k+1 piece-predicate subcomplexes that cover
/// Sd^b(K), by branch-and-bound over assignments of maximal simplices to
/// groups with memoized predicate calls and first-unused-group symmetry
/// breaking. Returns Infinite (with witness) as soon as one maximal
/// simplex alone fails the predicate.
SimpDistResult simpdist_bc(const SimpDistQuery& q, const SearchOptions& opts = {});

SimpDistQuery make_sc_query(const OrderedComplex& k, int b, int c);
SimpDistQuery make_scat_query(const OrderedComplex& k, Vertex base, int b, int c);

/// Distance between the two projections of k x k.
SimpDistResult sc_bc(const OrderedComplex& k, int b, int c,
                     const SearchOptions& opts = {});

/// Distance between the identity of k and the constant map at base.
SimpDistResult scat_bc(const OrderedComplex& k, Vertex base, int b, int c,
                       const SearchOptions& opts = {});

/// Value table over a (b, c) grid. Cells whose search ran out of budget
/// are Unknown; the table is horizon evidence, never a proved limit.
struct ProbeTable {
    int b_max = 0;
    int c_max = 0;
    std::vector<std::vector<DistanceValue>> cell; // [b][c]

    struct RowNote {
        bool stable_at_horizon = false;
        DistanceValue value;
    };
    std::vector<RowNote> rows;

    std::vector<std::string> monotone_violations; // decided cells, along c
    std::vector<std::string> descent_violations;  // (b,c) -> (b+1,c+2)
};

ProbeTable stabilization_probe(const SimplicialMap& phi, const SimplicialMap& psi,
                               int b_max, int c_max,
                               ApproximationRule rule = ApproximationRule::LastVertex,
                               const SearchOptions& opts = {});

/// Self-contained, re-checkable witness of one computed value.
struct Certificate {
    SimpDistQuery query;
    DistanceValue value;
    std::optional<CoverCertificate> cover;
    std::optional<Simplex> witness;
};

Certificate make_certificate(const SimpDistQuery& q, const SimpDistResult& r);

struct VerifyOutcome {
    bool ok = false;
    std::string reason; // empty when ok
};

/// Re-validates a certificate without re-running the cover search: the
/// query maps, the subdivision, the cover, every chain link, endpoints and
/// lengths. An Infinite witness is re-decided by one bounded search on the
/// witness piece.
VerifyOutcome verify_certificate(const Certificate& cert,
                                 const SearchOptions& opts = {});

} // namespace simpd
