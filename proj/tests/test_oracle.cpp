#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "simpd/oracle.hpp"
#include "support.hpp"

using namespace simpd;
using namespace simpd::testing;

TEST_CASE("oracle contiguity: edge identity vs constant is 1") {
    CHECK(oracle_contiguity_distance(identity_map(edge()),
                                     constant_map(edge(), edge(), 0)) ==
          DistanceValue::finite(1));
}

TEST_CASE("oracle contiguity: C3 identity vs constant is infinite") {
    CHECK(oracle_contiguity_distance(identity_map(c3()),
                                     constant_map(c3(), c3(), 0)) ==
          DistanceValue::infinite());
}

TEST_CASE("oracle contiguity: path included in C3 vs constant is 2") {
    SimplicialMap incl = check_simplicial(path2(), c3(), {{0, 0}, {1, 1}, {2, 2}});
    CHECK(oracle_contiguity_distance(incl, constant_map(path2(), c3(), 0)) ==
          DistanceValue::finite(2));
}

TEST_CASE("oracle caps are enforced") {
    OrderedComplex big = OrderedComplex::create(
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    try {
        oracle_contiguity_distance(identity_map(big), identity_map(big));
        FAIL("expected OracleCapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OracleCapExceeded);
    }
}

TEST_CASE("oracle simpdist desk examples") {
    SimpDistQuery edge_q{identity_map(edge()), constant_map(edge(), edge(), 0), 0, 1,
                         ApproximationRule::LastVertex};
    CHECK(oracle_simpdist(edge_q) == DistanceValue::finite(0));

    SimpDistQuery c3_q{identity_map(c3()), constant_map(c3(), c3(), 0), 0, 2,
                       ApproximationRule::LastVertex};
    CHECK(oracle_simpdist(c3_q) == DistanceValue::finite(1));

    SimpDistQuery same{identity_map(c3()), identity_map(c3()), 0, 0,
                       ApproximationRule::LastVertex};
    CHECK(oracle_simpdist(same) == DistanceValue::finite(0));
}

TEST_CASE("oracle simpdist cap on subdivision size") {
    SimpDistQuery q{identity_map(c3()), constant_map(c3(), c3(), 0), 2, 1,
                    ApproximationRule::LastVertex};
    // Sd^2(C3) has 12 maximal simplices, above the default cap of 8
    try {
        oracle_simpdist(q);
        FAIL("expected OracleCapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OracleCapExceeded);
    }
}

TEST_CASE("fast contiguity distance equals the oracle on random instances") {
    std::mt19937 rng(67);
    for (int t = 0; t < 60; ++t) {
        OrderedComplex dom = random_complex(rng, 5, 2, 3);
        OrderedComplex cod = random_complex(rng, 4, 2, 3);
        SimplicialMap f = random_map(rng, dom, cod);
        SimplicialMap g = random_map(rng, dom, cod);
        DistanceValue ref = oracle_contiguity_distance(f, g);
        ContiguityResult fast = contiguity_distance(f, g, 16);
        if (fast.value.is_unknown()) {
            REQUIRE(ref.is_finite());
            CHECK(ref.value > 16);
        } else {
            CHECK(fast.value == ref);
        }
    }
}

TEST_CASE("fast simpdist equals the oracle on random instances") {
    std::mt19937 rng(71);
    int done = 0;
    for (int t = 0; t < 200 && done < 30; ++t) {
        OrderedComplex dom = random_complex(rng, 5, 1, 3);
        OrderedComplex cod = random_complex(rng, 4, 2, 3);
        SimplicialMap f = random_map(rng, dom, cod);
        SimplicialMap g = random_map(rng, dom, cod);
        std::uniform_int_distribution<int> bc(0, 1);
        std::uniform_int_distribution<int> cc(0, 4);
        SimpDistQuery q{f, g, bc(rng), cc(rng), ApproximationRule::LastVertex};
        DistanceValue ref;
        try {
            ref = oracle_simpdist(q);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::OracleCapExceeded);
            continue;
        }
        CHECK(simpdist_bc(q).value == ref);
        ++done;
    }
    CHECK(done == 30);
}
