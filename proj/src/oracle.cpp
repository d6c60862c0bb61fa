#include "simpd/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace simpd {

// The oracle deliberately re-derives everything from the definitions:
// explicit map enumeration, an adjacency-matrix contiguity graph, and plain
// partition enumeration. It shares no search machinery with the fast path.

namespace {

struct OracleGraph {
    std::vector<std::vector<int>> states; // dense images (codomain ids)
    std::vector<std::uint64_t> adjacency; // N rows of N bits
    int n = 0;

    bool edge(int i, int j) const {
        return adjacency[static_cast<std::size_t>(i) * words + j / 64] &
               (std::uint64_t(1) << (j % 64));
    }
    std::size_t words = 0;
};

// All simplicial maps dom -> cod plus their pairwise contiguity relation.
OracleGraph build_graph(const OrderedComplex& dom, const OrderedComplex& cod,
                        const OracleCaps& caps) {
    dom.validate();
    cod.validate();
    if (cod.vertex_count() > caps.max_codomain_vertices)
        throw Error(ErrorCode::OracleCapExceeded,
                    "codomain has " + std::to_string(cod.vertex_count()) +
                        " vertices, cap is " + std::to_string(caps.max_codomain_vertices));
    if (dom.vertex_count() > caps.max_domain_vertices)
        throw Error(ErrorCode::OracleCapExceeded,
                    "domain has " + std::to_string(dom.vertex_count()) +
                        " vertices, cap is " + std::to_string(caps.max_domain_vertices));

    const int n = dom.vertex_count();
    const int m = cod.vertex_count();
    if (m > 30)
        throw Error(ErrorCode::OracleCapExceeded, "codomain too large for mask table");

    // Subset-of-a-maximal lookup over all codomain vertex subsets.
    std::vector<char> simplex_mask(std::size_t(1) << m, 0);
    for (const Simplex& mx : cod.maximal_simplices()) {
        std::uint32_t bits = 0;
        for (Vertex v : mx) bits |= std::uint32_t(1) << cod.dense_index(v);
        // mark every subset of bits
        for (std::uint32_t s = bits;; s = (s - 1) & bits) {
            simplex_mask[s] = 1;
            if (s == 0) break;
        }
    }

    // Images of each maximal domain simplex as a codomain mask, per state.
    const auto& dmax = dom.maximal_dense();
    OracleGraph g;
    g.n = n;
    std::vector<std::vector<std::uint32_t>> state_masks;
    std::vector<int> odo(n, 0);
    while (true) {
        std::vector<std::uint32_t> masks(dmax.size(), 0);
        bool simplicial = true;
        for (std::size_t i = 0; i < dmax.size() && simplicial; ++i) {
            for (int v : dmax[i]) masks[i] |= std::uint32_t(1) << odo[v];
            simplicial = simplex_mask[masks[i]] != 0;
        }
        if (simplicial && n > 0) {
            std::vector<int> images(n);
            for (int v = 0; v < n; ++v) images[v] = cod.vertex_at(odo[v]);
            g.states.push_back(std::move(images));
            state_masks.push_back(std::move(masks));
            if (static_cast<std::int64_t>(g.states.size()) > caps.max_maps)
                throw Error(ErrorCode::OracleCapExceeded,
                            "more than " + std::to_string(caps.max_maps) +
                                " simplicial maps");
        }
        int i = n - 1;
        while (i >= 0 && odo[i] == m - 1) odo[i--] = 0;
        if (i < 0) break;
        ++odo[i];
    }

    const std::size_t N = g.states.size();
    g.words = (N + 63) / 64;
    g.adjacency.assign(N * g.words, 0);
    auto set_edge = [&](std::size_t i, std::size_t j) {
        g.adjacency[i * g.words + j / 64] |= std::uint64_t(1) << (j % 64);
        g.adjacency[j * g.words + i / 64] |= std::uint64_t(1) << (i % 64);
    };
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            bool contiguous = true;
            for (std::size_t s = 0; s < dmax.size(); ++s)
                if (!simplex_mask[state_masks[i][s] | state_masks[j][s]]) {
                    contiguous = false;
                    break;
                }
            if (contiguous) set_edge(i, j);
        }
    }
    return g;
}

int find_state(const OracleGraph& g, const SimplicialMap& f) {
    std::vector<int> images(f.images().begin(), f.images().end());
    for (std::size_t i = 0; i < g.states.size(); ++i)
        if (g.states[i] == images) return static_cast<int>(i);
    throw Error(ErrorCode::InvalidArgument, "map not found among simplicial maps");
}

} // namespace

DistanceValue oracle_contiguity_distance(const SimplicialMap& f, const SimplicialMap& g,
                                         const OracleCaps& caps) {
    if (f.domain() != g.domain())
        throw Error(ErrorCode::DomainMismatch, "contiguity needs a shared domain");
    if (f.codomain() != g.codomain())
        throw Error(ErrorCode::CodomainMismatch, "contiguity needs a shared codomain");
    if (f.codomain().vertex_count() > caps.max_codomain_vertices)
        throw Error(ErrorCode::OracleCapExceeded,
                    "codomain has " + std::to_string(f.codomain().vertex_count()) +
                        " vertices, cap is " + std::to_string(caps.max_codomain_vertices));
    if (f.domain().vertex_count() > caps.max_domain_vertices)
        throw Error(ErrorCode::OracleCapExceeded,
                    "domain has " + std::to_string(f.domain().vertex_count()) +
                        " vertices, cap is " + std::to_string(caps.max_domain_vertices));
    if (f.same_assignment(g)) return DistanceValue::finite(0);

    OracleGraph graph = build_graph(f.domain(), f.codomain(), caps);
    const int src = find_state(graph, f);
    const int dst = find_state(graph, g);
    std::vector<int> dist(graph.states.size(), -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop();
        for (std::size_t j = 0; j < graph.states.size(); ++j) {
            if (dist[j] >= 0 || !graph.edge(cur, static_cast<int>(j))) continue;
            dist[j] = dist[cur] + 1;
            if (static_cast<int>(j) == dst) return DistanceValue::finite(dist[j]);
            queue.push(static_cast<int>(j));
        }
    }
    return DistanceValue::infinite();
}

DistanceValue oracle_simpdist(const SimpDistQuery& q, const OracleCaps& caps) {
    if (q.phi.domain() != q.psi.domain())
        throw Error(ErrorCode::DomainMismatch, "maps must share their domain");
    if (q.phi.codomain() != q.psi.codomain())
        throw Error(ErrorCode::CodomainMismatch, "maps must share their codomain");
    if (q.b < 0 || q.c < 0)
        throw Error(ErrorCode::InvalidArgument, "b and c must be non-negative");

    OrderedComplex sdk = subdivide_iter(q.phi.domain(), q.b).complex;
    SimplicialMap gphi = subdivided_composite(q.phi, q.b, q.rule);
    SimplicialMap gpsi = subdivided_composite(q.psi, q.b, q.rule);
    const std::vector<Simplex>& maximal = sdk.maximal_simplices();
    const int M = static_cast<int>(maximal.size());
    if (M == 0)
        throw Error(ErrorCode::InvalidArgument, "distance of maps on the empty complex");
    if (M > caps.max_sd_maximal)
        throw Error(ErrorCode::OracleCapExceeded,
                    "subdivision has " + std::to_string(M) + " maximal simplices, cap is " +
                        std::to_string(caps.max_sd_maximal));

    std::map<std::uint32_t, bool> memo;
    auto block_feasible = [&](std::uint32_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<Simplex> gens;
        for (int i = 0; i < M; ++i)
            if (mask & (std::uint32_t(1) << i)) gens.push_back(maximal[i]);
        OrderedComplex piece = full_subcomplex(sdk, gens);
        SimplicialMap f = restrict_map(gphi, piece);
        SimplicialMap g = restrict_map(gpsi, piece);
        bool ok;
        if (f.same_assignment(g)) {
            ok = true;
        } else {
            DistanceValue d = oracle_contiguity_distance(f, g, caps);
            ok = d.is_finite() && d.value <= q.c;
        }
        memo.emplace(mask, ok);
        return ok;
    };

    // Every set partition of the maximal simplices, as restricted growth
    // strings; a cover can always be thinned to a partition.
    std::vector<int> rgs(M, 0);
    int best = M + 1;
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks < best) {
            std::vector<std::uint32_t> masks(blocks, 0);
            for (int i = 0; i < M; ++i) masks[rgs[i]] |= std::uint32_t(1) << i;
            bool all_ok = true;
            for (std::uint32_t mask : masks)
                if (!block_feasible(mask)) { all_ok = false; break; }
            if (all_ok) best = blocks;
        }
        // next restricted growth string
        int i = M - 1;
        while (i > 0) {
            int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= prefix_max) { ++rgs[i]; break; }
            rgs[i--] = 0;
        }
        if (i == 0) break;
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    if (best <= M) return DistanceValue::finite(best - 1);
    return DistanceValue::infinite();
}

} // namespace simpd
