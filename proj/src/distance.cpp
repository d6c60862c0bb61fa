#include "simpd/distance.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace simpd {

namespace {

void check_parallel(const SimplicialMap& phi, const SimplicialMap& psi) {
    if (phi.domain() != psi.domain())
        throw Error(ErrorCode::DomainMismatch, "maps must share their domain");
    if (phi.codomain() != psi.codomain())
        throw Error(ErrorCode::CodomainMismatch, "maps must share their codomain");
}

void check_query(const SimpDistQuery& q) {
    check_parallel(q.phi, q.psi);
    if (q.b < 0 || q.c < 0)
        throw Error(ErrorCode::InvalidArgument, "b and c must be non-negative");
    if (q.phi.domain().empty())
        throw Error(ErrorCode::InvalidArgument, "distance of maps on the empty complex");
}

std::string subset_key(const std::vector<int>& sorted_indices) {
    std::string key(sorted_indices.size() * 2, '\0');
    for (std::size_t i = 0; i < sorted_indices.size(); ++i) {
        key[2 * i] = static_cast<char>(sorted_indices[i] & 0xff);
        key[2 * i + 1] = static_cast<char>((sorted_indices[i] >> 8) & 0xff);
    }
    return key;
}

// Shared state of one simpdist query: the subdivided domain, the two
// composites, and the memoized piece predicate.
struct CoverSearch {
    const SimpDistQuery& q;
    SearchOptions opts;

    OrderedComplex sdk;     // Sd^b(K)
    SimplicialMap gamma_phi; // Sd^b(K) -> L
    SimplicialMap gamma_psi;
    std::vector<Simplex> maximal; // of sdk, lex order

    struct MemoEntry {
        bool ok = false;
        ContiguityChain chain;
    };
    std::unordered_map<std::string, MemoEntry> memo;
    std::int64_t nodes = 0;

    CoverSearch(const SimpDistQuery& query, const SearchOptions& options)
        : q(query), opts(options) {
        const OrderedComplex& k = q.phi.domain();
        sdk = subdivide_iter(k, q.b, opts).complex;
        SimplicialMap iota = iterate_approximation(k, q.b, 0, q.rule, opts);
        gamma_phi = compose(q.phi, iota);
        gamma_psi = compose(q.psi, iota);
        maximal = sdk.maximal_simplices();
    }

    const MemoEntry& feasible(const std::vector<int>& content) {
        const std::string key = subset_key(content);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        std::vector<Simplex> gens;
        gens.reserve(content.size());
        for (int i : content) gens.push_back(maximal[i]);
        OrderedComplex piece = full_subcomplex(sdk, gens);
        SimplicialMap f = restrict_map(gamma_phi, piece);
        SimplicialMap g = restrict_map(gamma_psi, piece);

        MemoEntry entry;
        if (auto chain = bounded_contiguity(f, g, q.c, opts)) {
            entry.ok = true;
            entry.chain = std::move(*chain);
        }
        return memo.emplace(key, std::move(entry)).first->second;
    }

    bool assign_lex(std::size_t pos, int k, std::vector<std::vector<int>>& groups,
                    int used) {
        if (++nodes > opts.max_cover_nodes)
            throw Error(ErrorCode::BudgetExceeded,
                        "cover search exceeded " + std::to_string(opts.max_cover_nodes) +
                            " nodes");
        if (pos == maximal.size()) return true;
        const int limit = std::min(used, k);
        for (int g = 0; g <= limit; ++g) {
            groups[g].push_back(static_cast<int>(pos));
            if (feasible(groups[g]).ok) {
                if (assign_lex(pos + 1, k, groups, used + (g == used ? 1 : 0)))
                    return true;
            }
            groups[g].pop_back();
        }
        return false;
    }

    // First-fail variant: next simplex is the unassigned one with the
    // fewest feasible placements (ties to the smallest index).
    bool assign_constrained(std::vector<int>& remaining, int k,
                            std::vector<std::vector<int>>& groups, int used) {
        if (++nodes > opts.max_cover_nodes)
            throw Error(ErrorCode::BudgetExceeded,
                        "cover search exceeded " + std::to_string(opts.max_cover_nodes) +
                            " nodes");
        if (remaining.empty()) return true;
        const int limit = std::min(used, k);
        int best = -1;
        int best_count = std::numeric_limits<int>::max();
        for (std::size_t r = 0; r < remaining.size(); ++r) {
            int count = 0;
            for (int g = 0; g <= limit; ++g) {
                std::vector<int> content = groups[g];
                content.insert(std::lower_bound(content.begin(), content.end(),
                                                remaining[r]),
                               remaining[r]);
                if (feasible(content).ok) ++count;
            }
            if (count < best_count) {
                best_count = count;
                best = static_cast<int>(r);
            }
            if (count == 0) break;
        }
        if (best_count == 0) return false;
        const int idx = remaining[best];
        remaining.erase(remaining.begin() + best);
        for (int g = 0; g <= limit; ++g) {
            auto& grp = groups[g];
            auto at = std::lower_bound(grp.begin(), grp.end(), idx);
            grp.insert(at, idx);
            if (feasible(grp).ok) {
                if (assign_constrained(remaining, k, groups, used + (g == used ? 1 : 0)))
                    return true;
            }
            grp.erase(std::lower_bound(grp.begin(), grp.end(), idx));
        }
        remaining.insert(remaining.begin() + best, idx);
        return false;
    }

    CoverCertificate build_certificate(const std::vector<std::vector<int>>& groups,
                                       int k) {
        CoverCertificate cert;
        cert.k = k;
        for (const auto& content : groups) {
            if (content.empty()) continue;
            std::vector<Simplex> gens;
            for (int i : content) gens.push_back(maximal[i]);
            cert.pieces.push_back(full_subcomplex(sdk, gens));
            cert.chains.push_back(feasible(content).chain);
        }
        cert.k = static_cast<int>(cert.pieces.size()) - 1;
        return cert;
    }
};

} // namespace

SimplicialMap subdivided_composite(const SimplicialMap& f, int b,
                                   ApproximationRule rule, const SearchOptions& opts) {
    SimplicialMap iota = iterate_approximation(f.domain(), b, 0, rule, opts);
    return compose(f, iota);
}

bool piece_predicate(const SimpDistQuery& q, const OrderedComplex& j,
                     const SearchOptions& opts) {
    check_query(q);
    SimplicialMap gphi = subdivided_composite(q.phi, q.b, q.rule, opts);
    SimplicialMap gpsi = subdivided_composite(q.psi, q.b, q.rule, opts);
    SimplicialMap f = restrict_map(gphi, j);
    SimplicialMap g = restrict_map(gpsi, j);
    return bounded_contiguity(f, g, q.c, opts).has_value();
}

SimpDistResult simpdist_bc(const SimpDistQuery& q, const SearchOptions& opts) {
    check_query(q);
    CoverSearch search(q, opts);
    const int M = static_cast<int>(search.maximal.size());

    // If a single maximal simplex already fails, monotonicity rules out
    // every cover.
    for (int i = 0; i < M; ++i) {
        if (!search.feasible({i}).ok) {
            SimpDistResult out;
            out.value = DistanceValue::infinite();
            out.infeasible_witness = search.maximal[i];
            return out;
        }
    }

    for (int k = 0; k < M; ++k) {
        std::vector<std::vector<int>> groups(k + 1);
        bool found = false;
        if (opts.piece_order == SearchOptions::PieceOrder::Lexicographic) {
            found = search.assign_lex(0, k, groups, 0);
        } else {
            std::vector<int> remaining(M);
            for (int i = 0; i < M; ++i) remaining[i] = i;
            found = search.assign_constrained(remaining, k, groups, 0);
        }
        if (found) {
            SimpDistResult out;
            out.value = DistanceValue::finite(k);
            out.certificate = search.build_certificate(groups, k);
            return out;
        }
    }
    // All singletons are feasible, so k = M-1 always succeeds.
    throw Error(ErrorCode::InvalidArgument, "cover search fell through");
}

SimpDistQuery make_sc_query(const OrderedComplex& k, int b, int c) {
    ProductComplex p = ordered_product(k, k);
    SimpDistQuery q;
    q.phi = projection(p, 1);
    q.psi = projection(p, 2);
    q.b = b;
    q.c = c;
    return q;
}

SimpDistQuery make_scat_query(const OrderedComplex& k, Vertex base, int b, int c) {
    k.validate();
    if (!k.has_vertex(base))
        throw Error(ErrorCode::InvalidArgument,
                    "base " + std::to_string(base) + " is not a vertex");
    SimpDistQuery q;
    q.phi = identity_map(k);
    q.psi = constant_map(k, k, base);
    q.b = b;
    q.c = c;
    return q;
}

SimpDistResult sc_bc(const OrderedComplex& k, int b, int c, const SearchOptions& opts) {
    return simpdist_bc(make_sc_query(k, b, c), opts);
}

SimpDistResult scat_bc(const OrderedComplex& k, Vertex base, int b, int c,
                       const SearchOptions& opts) {
    return simpdist_bc(make_scat_query(k, base, b, c), opts);
}

ProbeTable stabilization_probe(const SimplicialMap& phi, const SimplicialMap& psi,
                               int b_max, int c_max, ApproximationRule rule,
                               const SearchOptions& opts) {
    check_parallel(phi, psi);
    if (b_max < 0 || c_max < 0)
        throw Error(ErrorCode::InvalidArgument, "probe ranges must be non-negative");
    ProbeTable table;
    table.b_max = b_max;
    table.c_max = c_max;
    table.cell.assign(b_max + 1, std::vector<DistanceValue>(c_max + 1));
    for (int b = 0; b <= b_max; ++b) {
        for (int c = 0; c <= c_max; ++c) {
            SimpDistQuery q{phi, psi, b, c, rule};
            try {
                table.cell[b][c] = simpdist_bc(q, opts).value;
            } catch (const Error& e) {
                if (e.code() == ErrorCode::BudgetExceeded ||
                    e.code() == ErrorCode::SearchBudgetExceeded)
                    table.cell[b][c] = DistanceValue::unknown(e.what());
                else
                    throw;
            }
        }
    }
    for (int b = 0; b <= b_max; ++b) {
        ProbeTable::RowNote note;
        if (c_max >= 1 && table.cell[b][c_max].decided() &&
            table.cell[b][c_max - 1].decided() &&
            table.cell[b][c_max] == table.cell[b][c_max - 1]) {
            note.stable_at_horizon = true;
            note.value = table.cell[b][c_max];
        }
        table.rows.push_back(note);
        for (int c = 0; c + 1 <= c_max; ++c) {
            const auto& a = table.cell[b][c];
            const auto& d = table.cell[b][c + 1];
            if (a.decided() && d.decided() && !distance_leq(d, a))
                table.monotone_violations.push_back(
                    "b=" + std::to_string(b) + ": c=" + std::to_string(c) + " value " +
                    a.to_string() + " < c=" + std::to_string(c + 1) + " value " +
                    d.to_string());
        }
    }
    for (int b = 0; b + 1 <= b_max; ++b)
        for (int c = 0; c + 2 <= c_max; ++c) {
            const auto& up = table.cell[b][c];
            const auto& down = table.cell[b + 1][c + 2];
            if (up.decided() && down.decided() && !distance_leq(down, up))
                table.descent_violations.push_back(
                    "(b=" + std::to_string(b) + ",c=" + std::to_string(c) + ") value " +
                    up.to_string() + " < (b=" + std::to_string(b + 1) + ",c=" +
                    std::to_string(c + 2) + ") value " + down.to_string());
        }
    return table;
}

Certificate make_certificate(const SimpDistQuery& q, const SimpDistResult& r) {
    Certificate cert;
    cert.query = q;
    cert.value = r.value;
    cert.cover = r.certificate;
    cert.witness = r.infeasible_witness;
    return cert;
}

VerifyOutcome verify_certificate(const Certificate& cert, const SearchOptions& opts) {
    auto reject = [](std::string why) { return VerifyOutcome{false, std::move(why)}; };
    try {
        check_query(cert.query);
        const OrderedComplex& k = cert.query.phi.domain();
        const OrderedComplex& l = cert.query.phi.codomain();
        // Re-validate the query maps themselves.
        for (const SimplicialMap* m : {&cert.query.phi, &cert.query.psi}) {
            std::vector<std::pair<Vertex, Vertex>> assignment;
            for (int d = 0; d < k.vertex_count(); ++d)
                assignment.emplace_back(k.vertex_at(d), m->images()[d]);
            check_simplicial(k, l, assignment);
        }

        OrderedComplex sdk = subdivide_iter(k, cert.query.b, opts).complex;
        SimplicialMap gphi =
            subdivided_composite(cert.query.phi, cert.query.b, cert.query.rule, opts);
        SimplicialMap gpsi =
            subdivided_composite(cert.query.psi, cert.query.b, cert.query.rule, opts);

        if (cert.value.is_unknown())
            return reject("certificate value is undecided");

        if (cert.value.is_infinite()) {
            if (!cert.witness) return reject("infinite value lacks a witness simplex");
            const Simplex& w = *cert.witness;
            const auto& mx = sdk.maximal_simplices();
            if (std::find(mx.begin(), mx.end(), w) == mx.end())
                return reject("witness " + simplex_to_string(w) +
                              " is not a maximal simplex of the subdivision");
            OrderedComplex piece = full_subcomplex(sdk, {w});
            if (bounded_contiguity(restrict_map(gphi, piece), restrict_map(gpsi, piece),
                                   cert.query.c, opts))
                return reject("witness piece " + simplex_to_string(w) +
                              " satisfies the predicate");
            return {true, {}};
        }

        if (!cert.cover) return reject("finite value lacks a cover");
        const CoverCertificate& cover = *cert.cover;
        if (static_cast<int>(cover.pieces.size()) != cert.value.value + 1)
            return reject("expected " + std::to_string(cert.value.value + 1) +
                          " pieces, found " + std::to_string(cover.pieces.size()));
        if (cover.pieces.size() != cover.chains.size())
            return reject("piece/chain count mismatch");

        for (const OrderedComplex& piece : cover.pieces) {
            piece.validate();
            for (const Simplex& s : piece.maximal_simplices())
                if (!has_simplex(sdk, s))
                    return reject("piece simplex " + simplex_to_string(s) +
                                  " is not a simplex of the subdivision");
        }
        for (const Simplex& m : sdk.maximal_simplices()) {
            bool covered = false;
            for (const OrderedComplex& piece : cover.pieces)
                if (has_simplex(piece, m)) { covered = true; break; }
            if (!covered)
                return reject("maximal simplex " + simplex_to_string(m) +
                              " is not covered");
        }
        for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
            const ContiguityChain& chain = cover.chains[i];
            if (chain.length() > cert.query.c)
                return reject("chain " + std::to_string(i) + " has length " +
                              std::to_string(chain.length()) + " > c");
            SimplicialMap f = restrict_map(gphi, cover.pieces[i]);
            SimplicialMap g = restrict_map(gpsi, cover.pieces[i]);
            try {
                // Re-validate each step as a simplicial map on the piece.
                for (const SimplicialMap& step : chain.steps) {
                    std::vector<std::pair<Vertex, Vertex>> assignment;
                    for (int d = 0; d < step.domain().vertex_count(); ++d)
                        assignment.emplace_back(step.domain().vertex_at(d),
                                                step.images()[d]);
                    check_simplicial(cover.pieces[i], f.codomain(), assignment);
                }
                validate_chain(chain, f, g);
            } catch (const Error& e) {
                return reject("chain " + std::to_string(i) + ": " + e.what());
            }
        }
        return {true, {}};
    } catch (const Error& e) {
        return reject(e.what());
    }
}

} // namespace simpd
