#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "simpd/subdivision.hpp"
#include "support.hpp"

using namespace simpd;
using namespace simpd::testing;

TEST_CASE("subdividing a point changes nothing") {
    SubdividedComplex sd = subdivide(point());
    CHECK(sd.complex.vertex_count() == 1);
    CHECK(sd.complex.maximal_count() == 1);
    CHECK(sd.barycenters == std::vector<Simplex>{{0}});
}

TEST_CASE("subdividing an edge gives the 3-vertex path") {
    SubdividedComplex sd = subdivide(edge());
    CHECK(sd.complex.vertex_count() == 3);
    CHECK(sd.complex.maximal_simplices() == std::vector<Simplex>{{0, 2}, {1, 2}});
    CHECK(sd.barycenters == std::vector<Simplex>{{0}, {1}, {0, 1}});
}

TEST_CASE("subdividing a full triangle gives 7 vertices and 6 triangles") {
    SubdividedComplex sd = subdivide(triangle());
    CHECK(sd.complex.vertex_count() == 7);
    CHECK(sd.complex.maximal_count() == 6); // (2+1)!
}

TEST_CASE("subdivide_iter at level 0 is the identity") {
    SubdividedComplex sd = subdivide_iter(edge(), 0);
    CHECK(sd.level == 0);
    CHECK(sd.complex == edge());
    CHECK(sd.barycenters.empty());
}

TEST_CASE("twice-subdivided edge is the 5-vertex path") {
    SubdividedComplex sd = subdivide_iter(edge(), 2);
    CHECK(sd.complex.vertex_count() == 5);
    CHECK(sd.complex.maximal_count() == 4);
}

TEST_CASE("twice-subdivided triangle has 36 maximal simplices") {
    SubdividedComplex sd = subdivide_iter(triangle(), 2);
    CHECK(sd.complex.maximal_count() == 36); // 6 per level-1 triangle
}

TEST_CASE("growth budget refuses factorial blowup") {
    SearchOptions opts;
    opts.max_simplices = 10;
    CHECK_THROWS_WITH_AS(subdivide_iter(triangle(), 2, opts), doctest::Contains("max-simplices"),
                         Error);
}

TEST_CASE("maximal count law: sum of (d+1)! with equality on disjoint faces") {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        OrderedComplex k = random_complex(rng, 6, 2, 4);
        SubdividedComplex sd = subdivide(k);
        std::int64_t bound = 0;
        for (const Simplex& s : k.maximal_simplices()) {
            std::int64_t f = 1;
            for (std::size_t i = 2; i <= s.size(); ++i) f *= static_cast<std::int64_t>(i);
            bound += f;
        }
        CHECK(sd.complex.maximal_count() <= bound);
        // equality when no two maximal simplices share a positive-dim face
        bool share = false;
        const auto& mx = k.maximal_simplices();
        for (std::size_t i = 0; i < mx.size() && !share; ++i)
            for (std::size_t j = i + 1; j < mx.size() && !share; ++j) {
                Simplex common;
                std::set_intersection(mx[i].begin(), mx[i].end(), mx[j].begin(),
                                      mx[j].end(), std::back_inserter(common));
                share = common.size() >= 2;
            }
        if (!share) CHECK(sd.complex.maximal_count() == bound);
    }
}

TEST_CASE("barycenter ids refine (dimension, lex) order") {
    SubdividedComplex sd = subdivide(c3());
    for (std::size_t i = 1; i < sd.barycenters.size(); ++i) {
        const Simplex& a = sd.barycenters[i - 1];
        const Simplex& b = sd.barycenters[i];
        CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
}

TEST_CASE("last-vertex approximation on Sd(edge)") {
    SubdividedComplex sd = subdivide(edge());
    SimplicialMap iota = last_vertex_approximation(sd);
    CHECK(iota.apply(0) == 0);
    CHECK(iota.apply(1) == 1);
    CHECK(iota.apply(2) == 1); // barycenter of {0,1}
}

TEST_CASE("last-vertex approximation on Sd(point) is the identity") {
    SubdividedComplex sd = subdivide(point());
    SimplicialMap iota = last_vertex_approximation(sd);
    CHECK(iota.apply(0) == 0);
}

TEST_CASE("last-vertex approximation on Sd(C3) is simplicial edge by edge") {
    SubdividedComplex sd = subdivide(c3());
    SimplicialMap iota = last_vertex_approximation(sd);
    for (const Simplex& s : sd.complex.maximal_simplices())
        CHECK(has_simplex(c3(), iota.image(s)));
}

TEST_CASE("level-0 complexes admit no approximation step") {
    SubdividedComplex sd = subdivide_iter(edge(), 0);
    CHECK_THROWS_AS(last_vertex_approximation(sd), Error);
}

TEST_CASE("iterate_approximation with equal levels is the identity") {
    SimplicialMap id1 = iterate_approximation(edge(), 1, 1);
    SubdividedComplex sd = subdivide(edge());
    CHECK(id1 == identity_map(sd.complex));
}

TEST_CASE("iterate_approximation collapses Sd^2(edge) onto the edge") {
    SimplicialMap iota = iterate_approximation(edge(), 2, 0);
    CHECK(iota.domain().vertex_count() == 5);
    CHECK(iota.codomain() == edge());
    for (Vertex v : iota.images()) CHECK((v == 0 || v == 1));
    for (const Simplex& s : iota.domain().maximal_simplices())
        CHECK(has_simplex(edge(), iota.image(s)));
}

TEST_CASE("iterate_approximation rejects inverted ranges") {
    CHECK_THROWS_AS(iterate_approximation(edge(), 0, 1), Error);
}

TEST_CASE("restriction of the iterated approximation stays simplicial") {
    SimplicialMap iota = iterate_approximation(c3(), 1, 0);
    OrderedComplex sub = full_subcomplex(iota.domain(), {{0, 3}, {1, 3}});
    SimplicialMap restricted = restrict_map(iota, sub);
    for (const Simplex& s : sub.maximal_simplices())
        CHECK(has_simplex(c3(), restricted.image(s)));
    CHECK(is_approximation_of_identity(last_vertex_approximation(subdivide(c3())),
                                       subdivide(c3())));
}

TEST_CASE("iterated approximations compose strictly") {
    for (const OrderedComplex& k : {edge(), path2(), c3()}) {
        SimplicialMap two_steps = iterate_approximation(k, 2, 0);
        SimplicialMap outer = iterate_approximation(k, 1, 0);
        SimplicialMap inner = iterate_approximation(k, 2, 1);
        CHECK(two_steps == compose(outer, inner));
    }
}

TEST_CASE("star condition: last- and first-vertex maps pass, swaps fail") {
    SubdividedComplex sd = subdivide(edge());
    CHECK(is_approximation_of_identity(last_vertex_approximation(sd), sd));
    CHECK(is_approximation_of_identity(first_vertex_approximation(sd), sd));
    // simplicial, but sends the barycenter of {0} to 1
    SimplicialMap bad = check_simplicial(sd.complex, edge(), {{0, 1}, {1, 1}, {2, 0}});
    CHECK_FALSE(is_approximation_of_identity(bad, sd));
}

TEST_CASE("star condition rejects maps between the wrong complexes") {
    SubdividedComplex sd = subdivide(edge());
    CHECK_THROWS_AS(is_approximation_of_identity(identity_map(edge()), sd), Error);
}

TEST_CASE("any two identity approximations are 1-contiguous") {
    for (const OrderedComplex& k : {edge(), path2(), triangle(), c3()}) {
        SubdividedComplex sd = subdivide(k);
        std::vector<SimplicialMap> all = all_identity_approximations(sd);
        for (const SimplicialMap& f : all) {
            CHECK(is_approximation_of_identity(f, sd));
            for (const SimplicialMap& g : all) CHECK(contiguous_pair(f, g));
        }
    }
}
