#include "simpd/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace simpd {

Simplex canonical_simplex(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_canonical(const Simplex& s) {
    if (s.empty()) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

bool is_subset(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string simplex_to_string(const Simplex& s) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        out << s[i];
    }
    out << ']';
    return out.str();
}

OrderedComplex::OrderedComplex(std::vector<Simplex> maximal,
                               std::vector<Vertex> extra_vertices)
    : maximal_(std::move(maximal)), extras_(std::move(extra_vertices)) {
    std::sort(maximal_.begin(), maximal_.end());
    std::set<Vertex> verts(extras_.begin(), extras_.end());
    for (const Simplex& s : maximal_)
        verts.insert(s.begin(), s.end());
    vertices_.assign(verts.begin(), verts.end());
    build_dense();
}

OrderedComplex OrderedComplex::create(std::vector<Simplex> maximal,
                                      std::vector<Vertex> extra_vertices) {
    OrderedComplex k(std::move(maximal), std::move(extra_vertices));
    k.validate();
    return k;
}

void OrderedComplex::build_dense() {
    const int n = vertex_count();
    mask_words_ = (n + 63) / 64;
    maximal_dense_.clear();
    masks_.clear();
    star_.assign(n, {});
    for (int i = 0; i < maximal_count(); ++i) {
        Simplex canon = canonical_simplex(maximal_[i]);
        std::vector<int> dense;
        std::vector<std::uint64_t> mask(mask_words_, 0);
        for (Vertex v : canon) {
            int d = dense_index(v);
            dense.push_back(d);
            mask[d / 64] |= std::uint64_t(1) << (d % 64);
            star_[d].push_back(i);
        }
        maximal_dense_.push_back(std::move(dense));
        masks_.push_back(std::move(mask));
    }
}

void OrderedComplex::validate() const {
    if (validated_) return;
    for (const Simplex& s : maximal_) {
        if (s.empty())
            throw Error(ErrorCode::InvalidArgument, "empty simplex");
        for (Vertex v : s)
            if (v < 0)
                throw Error(ErrorCode::InvalidArgument,
                            "negative vertex id in " + simplex_to_string(s));
        if (!is_canonical(s))
            throw Error(ErrorCode::DuplicateVertexInSimplex,
                        simplex_to_string(s) + " is not strictly increasing");
    }
    for (std::size_t i = 0; i < maximal_.size(); ++i) {
        for (std::size_t j = 0; j < maximal_.size(); ++j) {
            if (i == j) continue;
            if (is_subset(maximal_[i], maximal_[j]) &&
                (maximal_[i] != maximal_[j] || i > j))
                throw Error(ErrorCode::RedundantMaximalSimplex,
                            simplex_to_string(maximal_[i]) + " is a face of " +
                                simplex_to_string(maximal_[j]));
        }
    }
    for (Vertex v : vertices_) {
        bool found = false;
        for (const Simplex& s : maximal_)
            if (std::binary_search(s.begin(), s.end(), v)) { found = true; break; }
        if (!found)
            throw Error(ErrorCode::OrphanVertex,
                        "vertex " + std::to_string(v) + " lies in no maximal simplex");
    }
    validated_ = true;
}

int OrderedComplex::dim() const {
    int d = -1;
    for (const Simplex& s : maximal_)
        d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

bool OrderedComplex::has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int OrderedComplex::dense_index(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
}

bool OrderedComplex::mask_is_simplex(const std::uint64_t* words) const {
    for (const auto& m : masks_) {
        bool inside = true;
        for (int w = 0; w < mask_words_; ++w) {
            if (words[w] & ~m[w]) { inside = false; break; }
        }
        if (inside) return true;
    }
    return false;
}

namespace {

// Order simplices by (dimension, lex vertex list).
struct DimLexLess {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

} // namespace

std::vector<Simplex> OrderedComplex::all_simplices() const {
    validate();
    std::set<Simplex, DimLexLess> all;
    for (const Simplex& s : maximal_) {
        const std::size_t n = s.size();
        for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (bits & (std::uint64_t(1) << i)) face.push_back(s[i]);
            all.insert(std::move(face));
        }
    }
    return {all.begin(), all.end()};
}

bool has_simplex(const OrderedComplex& k, const Simplex& s) {
    k.validate();
    if (!is_canonical(s))
        throw Error(ErrorCode::InvalidArgument,
                    "simplex " + simplex_to_string(s) + " is not canonical");
    for (const Simplex& m : k.maximal_simplices())
        if (is_subset(s, m)) return true;
    return false;
}

OrderedComplex full_subcomplex(const OrderedComplex& k,
                               const std::vector<Simplex>& generators) {
    k.validate();
    if (generators.empty())
        throw Error(ErrorCode::EmptyGenerators,
                    "a subcomplex needs at least one generating simplex");
    for (const Simplex& g : generators)
        if (!has_simplex(k, g))
            throw Error(ErrorCode::NotASimplexOfAmbient, simplex_to_string(g));

    // Keep only the inclusion-maximal generators.
    std::vector<Simplex> gens = generators;
    std::sort(gens.begin(), gens.end(),
              [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    std::vector<Simplex> kept;
    for (const Simplex& g : gens) {
        bool dominated = false;
        for (const Simplex& m : kept)
            if (is_subset(g, m)) { dominated = true; break; }
        if (!dominated) kept.push_back(g);
    }
    return OrderedComplex::create(std::move(kept));
}

namespace {

void lattice_paths(const Simplex& a, const Simplex& b,
                   const std::map<std::pair<Vertex, Vertex>, int>& pair_id,
                   std::size_t i, std::size_t j, Simplex& path,
                   std::set<Simplex>& out) {
    path.push_back(pair_id.at({a[i], b[j]}));
    if (i + 1 == a.size() && j + 1 == b.size()) {
        out.insert(path);
    } else {
        if (i + 1 < a.size()) lattice_paths(a, b, pair_id, i + 1, j, path, out);
        if (j + 1 < b.size()) lattice_paths(a, b, pair_id, i, j + 1, path, out);
    }
    path.pop_back();
}

} // namespace

ProductComplex ordered_product(const OrderedComplex& k, const OrderedComplex& l) {
    k.validate();
    l.validate();
    ProductComplex out;
    out.left = k;
    out.right = l;
    std::map<std::pair<Vertex, Vertex>, int> pair_id;
    for (Vertex u : k.vertices())
        for (Vertex v : l.vertices()) {
            pair_id.emplace(std::pair{u, v}, static_cast<int>(out.pairs.size()));
            out.pairs.emplace_back(u, v);
        }

    // Maximal product simplices: maximal chains of each grid poset
    // (maximal simplex of k) x (maximal simplex of l). A maximal chain
    // projects onto the full factor simplices, so chains from distinct
    // blocks never nest; dedupe is enough.
    std::set<Simplex> chains;
    Simplex path;
    for (const Simplex& a : k.maximal_simplices())
        for (const Simplex& b : l.maximal_simplices())
            lattice_paths(a, b, pair_id, 0, 0, path, chains);

    out.complex = OrderedComplex::create({chains.begin(), chains.end()});
    return out;
}

} // namespace simpd
