#include "simpd/subdivision.hpp"

#include <algorithm>
#include <map>

namespace simpd {

namespace {

// Projected maximal-simplex count of one subdivision step: sum of (d+1)!
// over maximal simplices, capped to avoid overflow.
std::int64_t projected_growth(const OrderedComplex& k, std::int64_t cap) {
    std::int64_t total = 0;
    for (const Simplex& s : k.maximal_simplices()) {
        std::int64_t f = 1;
        for (std::size_t i = 2; i <= s.size(); ++i) {
            f *= static_cast<std::int64_t>(i);
            if (f > cap) return cap + 1;
        }
        total += f;
        if (total > cap) return cap + 1;
    }
    return total;
}

} // namespace

SubdividedComplex subdivide(const OrderedComplex& k, const SearchOptions& opts) {
    k.validate();
    if (projected_growth(k, opts.max_simplices) > opts.max_simplices)
        throw Error(ErrorCode::BudgetExceeded,
                    "subdivision would exceed max-simplices " +
                        std::to_string(opts.max_simplices));

    SubdividedComplex out;
    out.previous = k;
    out.level = 1;
    out.barycenters = k.all_simplices(); // sorted by (dim, lex): these are the ids
    std::map<Simplex, int> id_of;
    for (std::size_t i = 0; i < out.barycenters.size(); ++i)
        id_of.emplace(out.barycenters[i], static_cast<int>(i));

    // Maximal simplices of Sd(k) are the complete flags of maximal simplices
    // of k: one chain per ordering of the vertices. Chain ids ascend with
    // dimension, so each chain is already canonical.
    std::vector<Simplex> chains;
    for (const Simplex& m : k.maximal_simplices()) {
        Simplex perm = m;
        std::sort(perm.begin(), perm.end());
        do {
            Simplex chain;
            Simplex prefix;
            for (Vertex v : perm) {
                prefix.push_back(v);
                chain.push_back(id_of.at(canonical_simplex(prefix)));
            }
            chains.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.complex = OrderedComplex::create(std::move(chains));
    return out;
}

SubdividedComplex subdivide_iter(const OrderedComplex& k, int b,
                                 const SearchOptions& opts) {
    if (b < 0)
        throw Error(ErrorCode::InvalidArgument, "subdivision level must be non-negative");
    k.validate();
    SubdividedComplex cur;
    cur.complex = k;
    cur.level = 0;
    for (int i = 1; i <= b; ++i) {
        SubdividedComplex next = subdivide(cur.complex, opts);
        next.level = i;
        cur = std::move(next);
    }
    return cur;
}

namespace {

SimplicialMap approximation(const SubdividedComplex& sd, ApproximationRule rule) {
    if (sd.level < 1)
        throw Error(ErrorCode::LevelZero, "level-0 complex has no approximation step");
    std::vector<Vertex> images;
    images.reserve(sd.barycenters.size());
    for (const Simplex& s : sd.barycenters)
        images.push_back(rule == ApproximationRule::LastVertex ? s.back() : s.front());
    return SimplicialMap::unchecked(sd.complex, sd.previous, std::move(images));
}

} // namespace

SimplicialMap last_vertex_approximation(const SubdividedComplex& sd) {
    return approximation(sd, ApproximationRule::LastVertex);
}

SimplicialMap first_vertex_approximation(const SubdividedComplex& sd) {
    return approximation(sd, ApproximationRule::FirstVertex);
}

SimplicialMap iterate_approximation(const OrderedComplex& k, int from_b, int to_b,
                                    ApproximationRule rule, const SearchOptions& opts) {
    if (to_b < 0 || from_b < to_b)
        throw Error(ErrorCode::InvalidRange,
                    "need from_b >= to_b >= 0, got " + std::to_string(from_b) + " -> " +
                        std::to_string(to_b));
    k.validate();

    std::vector<SubdividedComplex> tower;
    tower.reserve(from_b + 1);
    SubdividedComplex base;
    base.complex = k;
    base.level = 0;
    tower.push_back(std::move(base));
    for (int i = 1; i <= from_b; ++i) {
        SubdividedComplex next = subdivide(tower.back().complex, opts);
        next.level = i;
        tower.push_back(std::move(next));
    }

    SimplicialMap acc = identity_map(tower[from_b].complex);
    for (int lvl = from_b; lvl > to_b; --lvl)
        acc = compose(approximation(tower[lvl], rule), acc);
    return acc;
}

bool is_approximation_of_identity(const SimplicialMap& candidate,
                                  const SubdividedComplex& sd) {
    if (sd.level < 1)
        throw Error(ErrorCode::LevelZero, "level-0 complex has no approximation step");
    if (candidate.domain() != sd.complex || candidate.codomain() != sd.previous)
        throw Error(ErrorCode::DomainMismatch,
                    "candidate must map the subdivision to the previous level");
    for (std::size_t w = 0; w < sd.barycenters.size(); ++w) {
        const Simplex& s = sd.barycenters[w];
        Vertex img = candidate.images()[w];
        if (!std::binary_search(s.begin(), s.end(), img)) return false;
    }
    return true;
}

std::vector<SimplicialMap> all_identity_approximations(const SubdividedComplex& sd,
                                                       std::size_t limit) {
    if (sd.level < 1)
        throw Error(ErrorCode::LevelZero, "level-0 complex has no approximation step");
    std::size_t count = 1;
    for (const Simplex& s : sd.barycenters) {
        count *= s.size();
        if (count > limit)
            throw Error(ErrorCode::BudgetExceeded,
                        "more than " + std::to_string(limit) + " approximations");
    }
    std::vector<SimplicialMap> out;
    std::vector<Vertex> images(sd.barycenters.size());
    // odometer over per-barycenter choices, lex order
    std::vector<std::size_t> pick(sd.barycenters.size(), 0);
    while (true) {
        for (std::size_t w = 0; w < sd.barycenters.size(); ++w)
            images[w] = sd.barycenters[w][pick[w]];
        out.push_back(SimplicialMap::unchecked(sd.complex, sd.previous, images));
        std::size_t i = sd.barycenters.size();
        while (i > 0) {
            --i;
            if (++pick[i] < sd.barycenters[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (sd.barycenters.empty()) return out;
    }
}

} // namespace simpd
