#include "simpd/maps.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <unordered_map>

namespace simpd {

Vertex SimplicialMap::apply(Vertex v) const {
    int d = domain_.dense_index(v);
    if (d < 0)
        throw Error(ErrorCode::InvalidArgument,
                    "vertex " + std::to_string(v) + " is not in the domain");
    return images_[d];
}

Simplex SimplicialMap::image(const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(apply(v));
    return canonical_simplex(std::move(out));
}

SimplicialMap SimplicialMap::unchecked(OrderedComplex domain, OrderedComplex codomain,
                                       std::vector<Vertex> dense_images) {
    SimplicialMap f;
    f.domain_ = std::move(domain);
    f.codomain_ = std::move(codomain);
    f.images_ = std::move(dense_images);
    return f;
}

SimplicialMap check_simplicial(const OrderedComplex& domain,
                               const OrderedComplex& codomain,
                               const std::vector<std::pair<Vertex, Vertex>>& assignment) {
    domain.validate();
    codomain.validate();
    std::vector<Vertex> images(domain.vertex_count(), -1);
    for (const auto& [v, w] : assignment) {
        int d = domain.dense_index(v);
        if (d < 0)
            throw Error(ErrorCode::InvalidArgument,
                        "assigned vertex " + std::to_string(v) + " is not in the domain");
        if (images[d] != -1 && images[d] != w)
            throw Error(ErrorCode::InvalidArgument,
                        "vertex " + std::to_string(v) + " assigned twice");
        images[d] = w;
    }
    for (int d = 0; d < domain.vertex_count(); ++d) {
        if (images[d] == -1)
            throw Error(ErrorCode::UnmappedVertex,
                        "vertex " + std::to_string(domain.vertex_at(d)) + " has no image");
        if (!codomain.has_vertex(images[d]))
            throw Error(ErrorCode::NotSimplicial,
                        "image " + std::to_string(images[d]) + " of vertex " +
                            std::to_string(domain.vertex_at(d)) +
                            " is not a codomain vertex");
    }
    SimplicialMap f = SimplicialMap::unchecked(domain, codomain, std::move(images));
    for (const Simplex& s : domain.maximal_simplices()) {
        Simplex img = f.image(s);
        if (!has_simplex(codomain, img))
            throw Error(ErrorCode::NotSimplicial,
                        "image " + simplex_to_string(img) + " of " + simplex_to_string(s) +
                            " is not a simplex of the codomain");
    }
    return f;
}

SimplicialMap identity_map(const OrderedComplex& k) {
    k.validate();
    return SimplicialMap::unchecked(k, k, k.vertices());
}

SimplicialMap constant_map(const OrderedComplex& domain,
                           const OrderedComplex& codomain, Vertex value) {
    domain.validate();
    codomain.validate();
    if (!codomain.has_vertex(value))
        throw Error(ErrorCode::InvalidArgument,
                    "constant value " + std::to_string(value) + " is not a codomain vertex");
    return SimplicialMap::unchecked(domain, codomain,
                                    std::vector<Vertex>(domain.vertex_count(), value));
}

SimplicialMap projection(const ProductComplex& p, int factor_index) {
    if (factor_index != 1 && factor_index != 2)
        throw Error(ErrorCode::InvalidArgument, "factor index must be 1 or 2");
    if (p.pairs.size() != static_cast<std::size_t>(p.complex.vertex_count()))
        throw Error(ErrorCode::NotAProductComplex,
                    "encoding table does not match the complex");
    std::vector<Vertex> images;
    images.reserve(p.pairs.size());
    for (const auto& [u, v] : p.pairs)
        images.push_back(factor_index == 1 ? u : v);
    return SimplicialMap::unchecked(p.complex, factor_index == 1 ? p.left : p.right,
                                    std::move(images));
}

bool contiguous_pair(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.domain() != g.domain())
        throw Error(ErrorCode::DomainMismatch, "contiguity needs a shared domain");
    if (f.codomain() != g.codomain())
        throw Error(ErrorCode::CodomainMismatch, "contiguity needs a shared codomain");
    for (const Simplex& s : f.domain().maximal_simplices()) {
        Simplex u = f.image(s);
        Simplex v = g.image(s);
        u.insert(u.end(), v.begin(), v.end());
        if (!has_simplex(f.codomain(), canonical_simplex(std::move(u))))
            return false;
    }
    return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (f.codomain() != g.domain())
        throw Error(ErrorCode::CompositionMismatch,
                    "codomain of the inner map differs from the outer domain");
    std::vector<Vertex> images;
    images.reserve(f.images().size());
    for (Vertex w : f.images()) images.push_back(g.apply(w));
    return SimplicialMap::unchecked(f.domain(), g.codomain(), std::move(images));
}

SimplicialMap restrict_map(const SimplicialMap& f, const OrderedComplex& j) {
    j.validate();
    for (const Simplex& s : j.maximal_simplices())
        if (!has_simplex(f.domain(), s))
            throw Error(ErrorCode::NotASubcomplex,
                        simplex_to_string(s) + " is not a simplex of the domain");
    std::vector<Vertex> images;
    images.reserve(j.vertex_count());
    for (Vertex v : j.vertices()) images.push_back(f.apply(v));
    return SimplicialMap::unchecked(j, f.codomain(), std::move(images));
}

void validate_chain(const ContiguityChain& chain, const SimplicialMap& from,
                    const SimplicialMap& to) {
    if (chain.steps.empty())
        throw Error(ErrorCode::InvalidArgument, "empty contiguity chain");
    if (chain.steps.front() != from)
        throw Error(ErrorCode::InvalidArgument, "chain does not start at the first map");
    if (chain.steps.back() != to)
        throw Error(ErrorCode::InvalidArgument, "chain does not end at the second map");
    for (std::size_t i = 1; i < chain.steps.size(); ++i)
        if (!contiguous_pair(chain.steps[i - 1], chain.steps[i]))
            throw Error(ErrorCode::InvalidArgument,
                        "chain link " + std::to_string(i - 1) + " -> " + std::to_string(i) +
                            " is not a contiguous pair");
}

// ---------------------------------------------------------------------------
// Contiguity BFS over the implicit graph of simplicial maps.
//
// States are byte strings: dense domain index -> dense codomain index.
// Neighbors of h are all maps h' with h(s) ∪ h'(s) a simplex for every
// maximal s, enumerated vertex by vertex with subset-of-a-maximal pruning
// on the accumulated image masks. Enumeration order is lexicographic in
// (vertex id, candidate image id), which makes witness chains canonical.
// ---------------------------------------------------------------------------

namespace {

class ContiguitySearch {
public:
    ContiguitySearch(const OrderedComplex& dom, const OrderedComplex& cod,
                     const SearchOptions& opts)
        : dom_(dom), cod_(cod), opts_(opts), step_budget_(opts.bfs_step_budget()) {
        n_ = dom.vertex_count();
        m_ = cod.vertex_count();
        if (m_ > 255)
            throw Error(ErrorCode::InvalidArgument,
                        "contiguity search supports at most 255 codomain vertices");
        cwords_ = cod.mask_words();
    }

    std::string state_of(const SimplicialMap& f) const {
        std::string s(n_, '\0');
        for (int i = 0; i < n_; ++i)
            s[i] = static_cast<char>(cod_.dense_index(f.images()[i]));
        return s;
    }

    SimplicialMap map_of(const std::string& s) const {
        std::vector<Vertex> images(n_);
        for (int i = 0; i < n_; ++i)
            images[i] = cod_.vertex_at(static_cast<unsigned char>(s[i]));
        return SimplicialMap::unchecked(dom_, cod_, std::move(images));
    }

    enum class Status { Found, Exhausted, Truncated };

    /// BFS from `source`; stops as soon as `goal` is discovered. Layers are
    /// expanded while depth < depth_cap. With probe_beyond, once depth_cap is
    /// reached the last layer is expanded just far enough to tell a finished
    /// component (Exhausted) from a truncated search (Truncated).
    Status run(const std::string& source, const std::string& goal, int depth_cap,
               bool probe_beyond, int* found_depth) {
        dist_.clear();
        dist_[source] = 0;
        if (source == goal) { *found_depth = 0; return Status::Found; }
        std::vector<std::string> layer{source};
        int depth = 0;
        while (!layer.empty()) {
            if (depth >= depth_cap) {
                if (!probe_beyond) return Status::Truncated;
                for (const std::string& st : layer) {
                    bool complete = for_each_contiguous(st, [&](const std::string& nb) {
                        return dist_.find(nb) != dist_.end();
                    });
                    if (!complete) return Status::Truncated;
                }
                return Status::Exhausted;
            }
            std::vector<std::string> next;
            bool found = false;
            for (const std::string& st : layer) {
                bool complete = for_each_contiguous(st, [&](const std::string& nb) {
                    if (dist_.find(nb) != dist_.end()) return true;
                    if (static_cast<std::int64_t>(dist_.size()) + 1 > opts_.max_frontier)
                        throw Error(ErrorCode::SearchBudgetExceeded,
                                    "frontier size " + std::to_string(dist_.size() + 1) +
                                        " exceeds max-frontier " +
                                        std::to_string(opts_.max_frontier));
                    dist_.emplace(nb, depth + 1);
                    if (nb == goal) { found = true; return false; }
                    next.push_back(nb);
                    return true;
                });
                if (!complete && found) { *found_depth = depth + 1; return Status::Found; }
            }
            layer = std::move(next);
            ++depth;
        }
        return Status::Exhausted;
    }

    /// Greedy lexicographically-least chain from `from` (at distance d from
    /// the BFS source) down to the source, using the recorded distances.
    std::vector<std::string> least_chain(const std::string& from, int d) const {
        std::vector<std::string> chain{from};
        std::string cur = from;
        for (int dd = d; dd > 0; --dd) {
            std::string pick;
            bool have = false;
            for_each_contiguous(cur, [&](const std::string& nb) {
                auto it = dist_.find(nb);
                if (it != dist_.end() && it->second == dd - 1) {
                    pick = nb;
                    have = true;
                    return false;
                }
                return true;
            });
            if (!have)
                throw Error(ErrorCode::InvalidArgument, "chain reconstruction failed");
            chain.push_back(pick);
            cur = pick;
        }
        return chain;
    }

private:
    /// Calls fn for every state contiguous to s (s included). fn returns
    /// false to stop; the return value reports whether enumeration finished.
    template <class Fn>
    bool for_each_contiguous(const std::string& s, Fn&& fn) const {
        const auto& dmax = dom_.maximal_dense();
        const int M = static_cast<int>(dmax.size());
        std::vector<std::vector<std::uint64_t>> accum(
            M, std::vector<std::uint64_t>(std::max(cwords_, 1), 0));
        for (int i = 0; i < M; ++i)
            for (int v : dmax[i]) {
                int w = static_cast<unsigned char>(s[v]);
                accum[i][w / 64] |= std::uint64_t(1) << (w % 64);
            }
        std::string buf(n_, '\0');
        return enum_rec(0, buf, accum, fn);
    }

    template <class Fn>
    bool enum_rec(int v, std::string& buf,
                  std::vector<std::vector<std::uint64_t>>& accum, Fn& fn) const {
        if (v == n_) {
            ++steps_;
            if (steps_ > step_budget_)
                throw Error(ErrorCode::SearchBudgetExceeded,
                            "neighbor enumeration budget " + std::to_string(step_budget_) +
                                " exceeded");
            return fn(static_cast<const std::string&>(buf));
        }
        const auto& star = dom_.vertex_star()[v];
        for (int w = 0; w < m_; ++w) {
            const int word = w / 64;
            const std::uint64_t bit = std::uint64_t(1) << (w % 64);
            const std::size_t mark = touched_.size();
            bool ok = true;
            for (int si : star) {
                auto& a = accum[si];
                if (a[word] & bit) continue;
                a[word] |= bit;
                touched_.push_back(si);
                if (!cod_.mask_is_simplex(a.data())) { ok = false; break; }
            }
            bool keep_going = true;
            if (ok) {
                buf[v] = static_cast<char>(w);
                keep_going = enum_rec(v + 1, buf, accum, fn);
            }
            while (touched_.size() > mark) {
                accum[touched_.back()][word] &= ~bit;
                touched_.pop_back();
            }
            if (!keep_going) return false;
        }
        return true;
    }

    const OrderedComplex& dom_;
    const OrderedComplex& cod_;
    SearchOptions opts_;
    int n_ = 0, m_ = 0, cwords_ = 0;
    std::int64_t step_budget_ = 0;
    mutable std::int64_t steps_ = 0;
    mutable std::vector<int> touched_;
    std::unordered_map<std::string, int> dist_;
};

} // namespace

ContiguityResult contiguity_distance(const SimplicialMap& f, const SimplicialMap& g,
                                     int max_c, const SearchOptions& opts) {
    if (f.domain() != g.domain())
        throw Error(ErrorCode::DomainMismatch, "contiguity needs a shared domain");
    if (f.codomain() != g.codomain())
        throw Error(ErrorCode::CodomainMismatch, "contiguity needs a shared codomain");
    if (max_c < 0)
        throw Error(ErrorCode::InvalidArgument, "max_c must be non-negative");
    if (f.same_assignment(g))
        return {DistanceValue::finite(0), ContiguityChain{{f}}};

    ContiguitySearch search(f.domain(), f.codomain(), opts);
    const std::string fs = search.state_of(f);
    const std::string gs = search.state_of(g);
    int d = -1;
    auto status = search.run(gs, fs, max_c, /*probe_beyond=*/true, &d);
    switch (status) {
        case ContiguitySearch::Status::Found: {
            ContiguityChain chain;
            for (const std::string& st : search.least_chain(fs, d))
                chain.steps.push_back(search.map_of(st));
            return {DistanceValue::finite(d), std::move(chain)};
        }
        case ContiguitySearch::Status::Exhausted:
            return {DistanceValue::infinite(), std::nullopt};
        case ContiguitySearch::Status::Truncated:
        default:
            return {DistanceValue::unknown("max_c " + std::to_string(max_c)), std::nullopt};
    }
}

std::optional<ContiguityChain> bounded_contiguity(const SimplicialMap& f,
                                                  const SimplicialMap& g, int c,
                                                  const SearchOptions& opts) {
    if (f.domain() != g.domain())
        throw Error(ErrorCode::DomainMismatch, "contiguity needs a shared domain");
    if (f.codomain() != g.codomain())
        throw Error(ErrorCode::CodomainMismatch, "contiguity needs a shared codomain");
    if (c < 0)
        throw Error(ErrorCode::InvalidArgument, "c must be non-negative");
    if (f.same_assignment(g)) return ContiguityChain{{f}};
    if (c == 0) return std::nullopt;

    ContiguitySearch search(f.domain(), f.codomain(), opts);
    const std::string fs = search.state_of(f);
    const std::string gs = search.state_of(g);
    int d = -1;
    auto status = search.run(gs, fs, c, /*probe_beyond=*/false, &d);
    if (status != ContiguitySearch::Status::Found) return std::nullopt;
    ContiguityChain chain;
    for (const std::string& st : search.least_chain(fs, d))
        chain.steps.push_back(search.map_of(st));
    return chain;
}

} // namespace simpd
