#pragma once

#include <cstdint>

#include "simpd/distance.hpp"
#include "simpd/distance_value.hpp"
#include "simpd/maps.hpp"

namespace simpd {

/// Size limits for the brute-force reference paths. The vertex caps bound
/// the enumeration space; max_maps additionally bounds the number of
/// simplicial maps whose pairwise contiguity graph is materialized.
struct OracleCaps {
    int max_codomain_vertices = 6;
    int max_domain_vertices = 9;
    int max_sd_maximal = 8;          // oracle_simpdist: maximal simplices of Sd^b(K)
    std::int64_t max_maps = 20000;   // bound on the materialized graph
};

/// Reference contiguity distance: enumerates every simplicial map
/// domain -> codomain, materializes the full contiguity graph, and returns
/// the exact graph distance or Infinite. Shares no search code with the
/// fast path.
DistanceValue oracle_contiguity_distance(const SimplicialMap& f, const SimplicialMap& g,
                                         const OracleCaps& caps = {});

/// Reference cover minimum: enumerates set partitions of the maximal
/// simplices of Sd^b(K) in increasing block count, deciding each block with
/// oracle_contiguity_distance.
DistanceValue oracle_simpdist(const SimpDistQuery& q, const OracleCaps& caps = {});

} // namespace simpd
