#include <doctest.h>

#include "helpers.hpp"

#include "cosetcurv/curvature.hpp"
#include "cosetcurv/local.hpp"

using namespace cosetcurv;
using testutil::random_nondegenerate_code;

TEST_CASE("hypercube curvature is 2/(n+1) in every direction") {
    for (int n = 2; n <= 6; ++n) {
        CosetGraph g(identity_code(n));
        CurvatureReport r = curvature_graph(g);
        CHECK(r.kappa_graph == Rat(2, n + 1));
        for (int i = 0; i < n; ++i) {
            REQUIRE(r.per_direction[i].has_value());
            CHECK(*r.per_direction[i] == Rat(2, n + 1));
        }
        CHECK(r.max_jump == Rat(n, n + 1));
        REQUIRE(r.bonnet_myers_bound.has_value());
        CHECK(*r.bonnet_myers_bound == Rat(n));
    }
}

TEST_CASE("complete coset graphs have curvature 1") {
    for (int m = 2; m <= 4; ++m) {
        CurvatureReport r = curvature_graph(CosetGraph(hadamard(m)));
        CHECK(r.kappa_graph == Rat(1));
        for (const auto& d : r.per_direction) {
            REQUIRE(d.has_value());
            CHECK(*d == Rat(1));
        }
    }
}

TEST_CASE("product with a cube factor drops curvature to 2/(n+1)") {
    for (int m = 2; m <= 3; ++m) {
        LinearCode c = simplex_hypercube_product(m);
        CurvatureReport r = curvature_graph(CosetGraph(c));
        CHECK(r.kappa_graph == Rat(2, c.n() + 1));
    }
}

TEST_CASE("small perfect triple-partition code has kappa 2/5 everywhere") {
    CurvatureReport r = curvature_graph(CosetGraph(perfect_3lcc_basic()));
    CHECK(r.kappa_graph == Rat(2, 5));
    for (const auto& d : r.per_direction) {
        REQUIRE(d.has_value());
        CHECK(*d == Rat(2, 5));
    }
    // The disjoint-pair floor is met with equality here: K = 0 gives 2/5.
    CHECK(min_K(perfect_3lcc_basic()) == 0);
}

TEST_CASE("loop directions carry no curvature entry") {
    LinearCode c = parse_code("10\n10\n");
    CurvatureReport r = curvature_graph(CosetGraph(c));
    REQUIRE(r.per_direction.size() == 2);
    CHECK(r.per_direction[0].has_value());
    CHECK(!r.per_direction[1].has_value());
    CHECK(r.max_jump == Rat(1, 3));
}

TEST_CASE("curvature is vertex transitive and minimal on adjacent pairs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        LinearCode c = random_nondegenerate_code(1 + int(seed % 8), 3 + int(seed % 8), seed);
        CosetGraph g(c);
        CurvatureReport r = curvature_graph(g);
        for (std::uint64_t t = 0; t < 5; ++t) {
            std::uint64_t x = splitmix64_at(seed, 7000 + t) % g.vertex_count();
            for (int i = 0; i < c.n(); ++i) {
                if (g.target(i) == 0) continue;
                CHECK(curvature_pair(g, x, x ^ g.target(i)) == *r.per_direction[i]);
            }
            // Any pair at distance >= 1 has curvature at least the graph
            // minimum (the adjacent case is extremal).
            std::uint64_t y = splitmix64_at(seed, 9000 + t) % g.vertex_count();
            if (y != x) CHECK(curvature_pair(g, x, y) >= r.kappa_graph);
        }
    }
}

TEST_CASE("ball-based curvature equals full-graph curvature") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        LinearCode c = random_nondegenerate_code(1 + int(seed % 8), 3 + int(seed % 7), seed);
        CurvatureReport full = curvature_graph(CosetGraph(c));
        CurvatureReport local = curvature_graph_local(c);
        CHECK(full.kappa_graph == local.kappa_graph);
        CHECK(full.max_jump == local.max_jump);
        REQUIRE(full.per_direction.size() == local.per_direction.size());
        for (std::size_t i = 0; i < full.per_direction.size(); ++i)
            CHECK(full.per_direction[i] == local.per_direction[i]);
    }
}

TEST_CASE("ball curvature needs radius at least 3") {
    LinearCode c = identity_code(5);
    LocalBall b2(c, 2), b3(c, 3);
    CHECK_THROWS(curvature_direction(b2, 0));
    CHECK(curvature_direction(b3, 0) == Rat(2, 6));
}

TEST_CASE("degenerate code with only loops has no curvature") {
    CHECK_THROWS(curvature_graph(CosetGraph(parse_code("00\n"))));
}

TEST_CASE("discrete Bonnet-Myers check on cube instances") {
    for (int n : {2, 5, 8}) {
        BonnetMyersResult r = bonnet_myers_check(identity_code(n));
        CHECK(r.kappa == Rat(2, n + 1));
        REQUIRE(r.bound.has_value());
        CHECK(*r.bound == Rat(n));
        REQUIRE(r.diameter.has_value());
        CHECK(*r.diameter == n);
        REQUIRE(r.pass.has_value());
        CHECK(*r.pass);
    }
}

TEST_CASE("Bonnet-Myers falls back to bound-only beyond the cap") {
    // dim 26 exceeds the default graph cap; the ball route still yields the
    // bound but cannot measure the diameter.
    BonnetMyersResult r = bonnet_myers_check(identity_code(26));
    CHECK(r.kappa == Rat(2, 27));
    REQUIRE(r.bound.has_value());
    CHECK(*r.bound == Rat(26));
    CHECK(!r.diameter.has_value());
    CHECK(!r.pass.has_value());
}
