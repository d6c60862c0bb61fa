#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "simpd/complex.hpp"
#include "simpd/maps.hpp"
#include "support.hpp"

using namespace simpd;
using namespace simpd::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("validate accepts a well-formed path") {
    OrderedComplex k({{0, 1}, {1, 2}});
    CHECK_NOTHROW(k.validate());
    CHECK(k.vertex_count() == 3);
    CHECK(k.maximal_count() == 2);
}

TEST_CASE("validate rejects a maximal simplex that is a face of another") {
    OrderedComplex k({{0, 1}, {0}});
    CHECK(code_of([&] { k.validate(); }) == ErrorCode::RedundantMaximalSimplex);
}

TEST_CASE("validate rejects non-canonical vertex lists") {
    OrderedComplex k({{0, 0, 1}});
    CHECK(code_of([&] { k.validate(); }) == ErrorCode::DuplicateVertexInSimplex);
}

TEST_CASE("validate rejects vertices outside every maximal simplex") {
    OrderedComplex k({{0, 1}}, {5});
    CHECK(code_of([&] { k.validate(); }) == ErrorCode::OrphanVertex);
}

TEST_CASE("validate is idempotent") {
    OrderedComplex k = c3();
    k.validate();
    CHECK_NOTHROW(k.validate());
}

TEST_CASE("has_simplex on the path") {
    OrderedComplex k = path2();
    CHECK_FALSE(has_simplex(k, {0, 2}));
    CHECK(has_simplex(k, {1}));
    CHECK(has_simplex(k, {0, 1}));
}

TEST_CASE("has_simplex: the hollow triangle has no 2-simplex") {
    CHECK_FALSE(has_simplex(c3(), {0, 1, 2}));
}

TEST_CASE("has_simplex is downward closed") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        OrderedComplex k = random_complex(rng, 6, 3, 4);
        for (const Simplex& s : k.all_simplices()) {
            CHECK(has_simplex(k, s));
            // every non-empty subset is again a simplex
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                if (s.size() == 1) break;
                Simplex t2 = s;
                t2.erase(t2.begin() + drop);
                CHECK(has_simplex(k, t2));
            }
        }
    }
}

TEST_CASE("full_subcomplex of two edges of the hollow triangle") {
    OrderedComplex j = full_subcomplex(c3(), {{0, 1}, {1, 2}});
    CHECK(j == OrderedComplex::create({{0, 1}, {1, 2}}));
}

TEST_CASE("full_subcomplex rejects an empty generator set") {
    CHECK(code_of([&] { full_subcomplex(c3(), {}); }) == ErrorCode::EmptyGenerators);
}

TEST_CASE("full_subcomplex rejects foreign simplices") {
    CHECK(code_of([&] { full_subcomplex(c3(), {{0, 1, 2}}); }) ==
          ErrorCode::NotASimplexOfAmbient);
}

TEST_CASE("full_subcomplex of the whole simplex is the whole simplex") {
    OrderedComplex k = triangle();
    CHECK(full_subcomplex(k, {{0, 1, 2}}) == k);
}

TEST_CASE("full_subcomplex drops dominated generators and is idempotent") {
    OrderedComplex j = full_subcomplex(c3(), {{0, 1}, {0}, {1}});
    CHECK(j == OrderedComplex::create({{0, 1}}));
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        OrderedComplex k = random_complex(rng, 6, 3, 4);
        OrderedComplex sub = full_subcomplex(k, k.maximal_simplices());
        CHECK(sub == k);
        CHECK(full_subcomplex(sub, sub.maximal_simplices()) == sub);
    }
}

TEST_CASE("ordered_product: edge x point is an edge") {
    ProductComplex p = ordered_product(edge(), point());
    CHECK(p.complex.vertex_count() == 2);
    CHECK(p.complex.maximal_simplices() == std::vector<Simplex>{{0, 1}});
}

TEST_CASE("ordered_product: edge x edge is the two-triangle square") {
    // frozen from the chain-enumeration oracle
    auto oracle = product_chains_oracle(edge(), edge());
    CHECK(oracle.size() == 2);
    ProductComplex p = ordered_product(edge(), edge());
    CHECK(p.complex.vertex_count() == 4);
    CHECK(p.complex.maximal_simplices() == std::vector<Simplex>{{0, 1, 3}, {0, 2, 3}});
}

TEST_CASE("ordered_product: C3 x C3 has 9 vertices and 18 triangles") {
    auto oracle = product_chains_oracle(c3(), c3());
    CHECK(oracle.size() == 18);
    ProductComplex p = ordered_product(c3(), c3());
    CHECK(p.complex.vertex_count() == 9);
    CHECK(p.complex.maximal_count() == 18);
}

TEST_CASE("ordered_product agrees with the chain oracle on random pairs") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        OrderedComplex k = random_complex(rng, 3, 2, 2);
        OrderedComplex l = random_complex(rng, 3, 2, 2);
        if (k.vertex_count() * l.vertex_count() > 12) continue;
        ProductComplex p = ordered_product(k, l);
        auto oracle = product_chains_oracle(k, l);
        CHECK(p.complex.maximal_count() == static_cast<int>(oracle.size()));
        // every oracle chain is a product simplex under the encoding
        for (const auto& chain : oracle) {
            Simplex s;
            for (auto pr : chain) {
                auto it = std::find(p.pairs.begin(), p.pairs.end(), pr);
                REQUIRE(it != p.pairs.end());
                s.push_back(static_cast<int>(it - p.pairs.begin()));
            }
            CHECK(has_simplex(p.complex, canonical_simplex(s)));
        }
    }
}

TEST_CASE("product simplices project to simplices of the factors") {
    std::mt19937 rng(31);
    for (int t = 0; t < 25; ++t) {
        OrderedComplex k = random_complex(rng, 4, 2, 3);
        OrderedComplex l = random_complex(rng, 4, 2, 3);
        ProductComplex p = ordered_product(k, l);
        CHECK(p.complex.vertex_count() == k.vertex_count() * l.vertex_count());
        for (const Simplex& s : p.complex.maximal_simplices()) {
            Simplex left, right;
            for (Vertex v : s) {
                left.push_back(p.pairs[v].first);
                right.push_back(p.pairs[v].second);
            }
            CHECK(has_simplex(k, canonical_simplex(left)));
            CHECK(has_simplex(l, canonical_simplex(right)));
        }
    }
}

TEST_CASE("projection of a square chain") {
    ProductComplex p = ordered_product(edge(), edge());
    SimplicialMap pr1 = projection(p, 1);
    CHECK(pr1.image({0, 1, 3}) == Simplex{0, 1});
}

TEST_CASE("projection of point x K recovers K") {
    OrderedComplex k = c3();
    ProductComplex p = ordered_product(point(), k);
    CHECK(p.complex.vertex_count() == k.vertex_count());
    CHECK(p.complex.maximal_count() == k.maximal_count());
    SimplicialMap pr2 = projection(p, 2);
    for (int d = 0; d < p.complex.vertex_count(); ++d)
        CHECK(pr2.images()[d] == p.pairs[d].second);
}

TEST_CASE("projections of C3 x C3 send maximal simplices into C3") {
    ProductComplex p = ordered_product(c3(), c3());
    SimplicialMap pr1 = projection(p, 1);
    SimplicialMap pr2 = projection(p, 2);
    for (const Simplex& s : p.complex.maximal_simplices()) {
        CHECK(has_simplex(c3(), pr1.image(s)));
        CHECK(has_simplex(c3(), pr2.image(s)));
    }
}

TEST_CASE("projection needs a coherent encoding table") {
    ProductComplex broken;
    broken.complex = c3();
    broken.left = c3();
    broken.right = c3();
    broken.pairs = {{0, 0}};
    CHECK(code_of([&] { projection(broken, 1); }) == ErrorCode::NotAProductComplex);
}
