#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "simpd/complex.hpp"
#include "simpd/maps.hpp"

namespace simpd::testing {

inline OrderedComplex point() { return OrderedComplex::create({{0}}); }
inline OrderedComplex edge() { return OrderedComplex::create({{0, 1}}); }
inline OrderedComplex path2() { return OrderedComplex::create({{0, 1}, {1, 2}}); }
inline OrderedComplex triangle() { return OrderedComplex::create({{0, 1, 2}}); }
inline OrderedComplex c3() { return OrderedComplex::create({{0, 1}, {0, 2}, {1, 2}}); }
inline OrderedComplex c4() {
    return OrderedComplex::create({{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

// ---------------------------------------------------------------------------
// Independent oracles used to freeze expected values. These re-derive the
// definitions with plain enumeration and share nothing with the library's
// construction paths.
// ---------------------------------------------------------------------------

/// All maximal product simplices by brute force: enumerate every subset of
/// the vertex-pair grid, keep the chains whose projections are simplices,
/// and discard chains contained in a bigger one.
inline std::vector<std::vector<std::pair<Vertex, Vertex>>> product_chains_oracle(
    const OrderedComplex& k, const OrderedComplex& l) {
    std::vector<std::pair<Vertex, Vertex>> grid;
    for (Vertex u : k.vertices())
        for (Vertex v : l.vertices()) grid.emplace_back(u, v);
    const std::size_t n = grid.size();
    if (n > 20) throw Error(ErrorCode::InvalidArgument, "grid too large for the oracle");

    auto comparable = [](const std::pair<Vertex, Vertex>& a,
                         const std::pair<Vertex, Vertex>& b) {
        return (a.first <= b.first && a.second <= b.second) ||
               (b.first <= a.first && b.second <= a.second);
    };
    std::vector<std::vector<std::pair<Vertex, Vertex>>> chains;
    for (std::uint32_t bits = 1; bits < (std::uint32_t(1) << n); ++bits) {
        std::vector<std::pair<Vertex, Vertex>> sel;
        for (std::size_t i = 0; i < n; ++i)
            if (bits & (std::uint32_t(1) << i)) sel.push_back(grid[i]);
        bool chain = true;
        for (std::size_t i = 0; i < sel.size() && chain; ++i)
            for (std::size_t j = i + 1; j < sel.size() && chain; ++j)
                chain = comparable(sel[i], sel[j]);
        if (!chain) continue;
        Simplex left, right;
        for (auto [u, v] : sel) { left.push_back(u); right.push_back(v); }
        if (!has_simplex(k, canonical_simplex(left))) continue;
        if (!has_simplex(l, canonical_simplex(right))) continue;
        chains.push_back(sel);
    }
    // keep inclusion-maximal chains only
    auto contains = [](const std::vector<std::pair<Vertex, Vertex>>& big,
                       const std::vector<std::pair<Vertex, Vertex>>& small) {
        for (const auto& p : small)
            if (std::find(big.begin(), big.end(), p) == big.end()) return false;
        return true;
    };
    std::vector<std::vector<std::pair<Vertex, Vertex>>> maximal;
    for (const auto& c : chains) {
        bool dominated = false;
        for (const auto& d : chains)
            if (d.size() > c.size() && contains(d, c)) { dominated = true; break; }
        if (!dominated) maximal.push_back(c);
    }
    return maximal;
}

/// Graph distance of two vertices in the 1-skeleton.
inline std::optional<int> skeleton_distance_oracle(const OrderedComplex& k, Vertex a,
                                                   Vertex b) {
    if (a == b) return 0;
    std::vector<std::vector<Vertex>> adj(k.vertex_count());
    for (const Simplex& s : k.maximal_simplices())
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                adj[k.dense_index(s[i])].push_back(s[j]);
                adj[k.dense_index(s[j])].push_back(s[i]);
            }
    std::vector<int> dist(k.vertex_count(), -1);
    std::queue<int> queue;
    dist[k.dense_index(a)] = 0;
    queue.push(k.dense_index(a));
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop();
        for (Vertex w : adj[cur]) {
            int dw = k.dense_index(w);
            if (dist[dw] >= 0) continue;
            dist[dw] = dist[cur] + 1;
            if (w == b) return dist[dw];
            queue.push(dw);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Random instance generation (deterministic given the seed).
// ---------------------------------------------------------------------------

inline OrderedComplex random_complex(std::mt19937& rng, int max_vertices, int max_dim,
                                     int max_maximal) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nm(1, max_maximal);
    const int m = nm(rng);
    std::vector<Simplex> gens;
    for (int i = 0; i < m; ++i) {
        std::uniform_int_distribution<int> sz(1, std::min(max_dim + 1, n));
        int size = sz(rng);
        std::set<Vertex> verts;
        std::uniform_int_distribution<int> pick(0, n - 1);
        while (static_cast<int>(verts.size()) < size) verts.insert(pick(rng));
        gens.emplace_back(verts.begin(), verts.end());
    }
    // keep inclusion-maximal generators
    std::sort(gens.begin(), gens.end(),
              [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    std::vector<Simplex> kept;
    for (const Simplex& g : gens) {
        bool dominated = false;
        for (const Simplex& k : kept)
            if (is_subset(g, k)) { dominated = true; break; }
        if (!dominated) kept.push_back(g);
    }
    return OrderedComplex::create(std::move(kept));
}

inline SimplicialMap random_map(std::mt19937& rng, const OrderedComplex& dom,
                                const OrderedComplex& cod, int tries = 60) {
    std::uniform_int_distribution<int> pick(0, cod.vertex_count() - 1);
    for (int t = 0; t < tries; ++t) {
        std::vector<std::pair<Vertex, Vertex>> assignment;
        for (Vertex v : dom.vertices())
            assignment.emplace_back(v, cod.vertex_at(pick(rng)));
        try {
            return check_simplicial(dom, cod, assignment);
        } catch (const Error&) {
            continue;
        }
    }
    return constant_map(dom, cod, cod.vertex_at(pick(rng)));
}

} // namespace simpd::testing
