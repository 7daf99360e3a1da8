#include "planarmatch/oracles.hpp"

#include "corpus.hpp"
#include "doctest.h"
#include "planarmatch/generators.hpp"

using namespace planarmatch;
namespace oc = planarmatch::oracle;

TEST_CASE("perfect matching enumeration on standard graphs") {
    CHECK(oc::enumerate_perfect_matchings(corpus::cycle(4)).size() == 2);
    CHECK(oc::enumerate_perfect_matchings(corpus::k4()).size() == 3);
    CHECK(oc::enumerate_perfect_matchings(corpus::cycle(5)).empty());
    CHECK(oc::enumerate_perfect_matchings(make_grid(2, 3)).size() == 3);
    CHECK_THROWS_AS(oc::enumerate_perfect_matchings(make_grid(5, 4)), TooLarge);
}

TEST_CASE("brute minimum perfect matching weights") {
    CHECK(*oc::brute_min_pm(corpus::single_edge(), {5}) == 5);
    CHECK(*oc::brute_min_pm(corpus::cycle(4), {1, 0, 1, 0}) == 0);
    // K4 with w(01)=1: the other two matchings have weight 0.
    CHECK(*oc::brute_min_pm(corpus::k4(), {1, 0, 0, 0, 0, 0}) == 0);
    CHECK(!oc::brute_min_pm(corpus::cycle(5), Weights(5, 0)));
}

TEST_CASE("factor-critical oracle") {
    CHECK(oc::factor_critical_check(corpus::triangle()));
    CHECK(oc::factor_critical_check(corpus::cycle(5)));
    CHECK(oc::factor_critical_check(corpus::bowtie()));
    CHECK(!oc::factor_critical_check(corpus::cycle(4)));
    CHECK(!oc::factor_critical_check(corpus::path_graph(3)));
}

TEST_CASE("maximum weight matching DP") {
    auto [w1, m1] = oc::brute_max_weight_matching(corpus::path_graph(4), Weights(3, 1));
    CHECK(w1 == 2);
    CHECK(m1.size() == 2);
    auto [w2, m2] = oc::brute_max_weight_matching(corpus::path_graph(4), {1, 5, 1});
    CHECK(w2 == 5);
    CHECK(m2 == Matching{1});
}

TEST_CASE("shortest alternating path oracle") {
    // C5 with matching {(1,2), (3,4)}; vertex 0 is free.
    EmbeddedGraph g = corpus::cycle(5);
    Matching m = {1, 3};
    auto len = oc::brute_shortest_alternating(g, m, 0, 2);
    REQUIRE(len.has_value());
    CHECK(*len == 2);  // 0-1 unmatched, 1-2 matched
    auto around = oc::brute_shortest_alternating(g, m, 0, 1);
    REQUIRE(around.has_value());
    CHECK(*around == 4);  // forced the long way: 0-4, 4-3, 3-2, 2-1

}

TEST_CASE("brute f-factor") {
    SUBCASE("f == 1 is a perfect matching") {
        auto r = oc::brute_f_factor(corpus::cycle(4), {1, 1, 1, 1}, {3, 1, 3, 1}, false);
        REQUIRE(r.has_value());
        CHECK(r->first == 2);
    }
    SUBCASE("f == 2 on a triangle takes all edges") {
        auto r = oc::brute_f_factor(corpus::triangle(), {2, 2, 2}, {1, 2, 3}, false);
        REQUIRE(r.has_value());
        CHECK(r->first == 6);
        CHECK(r->second.size() == 3);
    }
    SUBCASE("infeasible when degrees cannot match") {
        auto r = oc::brute_f_factor(corpus::single_edge(), {2, 1}, {0}, false);
        CHECK(!r.has_value());
    }
}

TEST_CASE("flow oracles") {
    SUBCASE("single arc") {
        auto f = oc::brute_min_cost_flow(corpus::single_arc_net(1, 2, 1));
        REQUIRE(f.has_value());
        CHECK(f->value == 1);
        CHECK(f->total_cost == 2);
    }
    SUBCASE("two parallel paths prefer the cheap one") {
        // 0 -> 1 -> 3 costs 1, 0 -> 2 -> 3 costs 3; route one unit.
        FlowNetwork net;
        net.g = EmbeddedGraph::build(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}, Weights(4, 0),
                                     {{0, 4}, {1, 2}, {5, 6}, {3, 7}});
        net.capacity = {1, 1, 1, 1};
        net.cost = {1, 0, 3, 0};
        net.demand = {1, 0, 0, -1};
        auto f = oc::brute_min_cost_flow(net);
        REQUIRE(f.has_value());
        CHECK(f->total_cost == 1);
        CHECK(f->flow == std::vector<std::int64_t>{1, 1, 0, 0});
    }
    SUBCASE("infeasible demand") {
        auto f = oc::brute_min_cost_flow(corpus::single_arc_net(1, 0, 2));
        CHECK(!f.has_value());
    }
    SUBCASE("max flow respects the bottleneck") {
        IntegralFlow f = oc::brute_max_flow(corpus::single_arc_net(1, 0, 5));
        CHECK(f.value == 1);
    }
    SUBCASE("grid net min cost flow") {
        FlowNetwork net = corpus::small_grid_net();
        auto f = oc::brute_min_cost_flow(net);
        REQUIRE(f.has_value());
        CHECK(f->value == 2);
        CHECK(f->total_cost == 6);  // two disjoint length-3 paths
        for (VertexId v = 0; v < 6; ++v)
            CHECK(IntegralFlow::net_out(net, f->flow, v) == net.demand[v]);
    }
}

TEST_CASE("dual verifier") {
    SUBCASE("single edge, tight potentials") {
        EmbeddedGraph g = corpus::single_edge();
        oc::DualCertificate cert;
        cert.pi2_vertex = {6, 4};  // pi = 3 + 2 = 5 = w
        CHECK(oc::verify_dual(g, {5}, cert, {0}));
        cert.pi2_vertex = {6, 6};
        CHECK(!oc::verify_dual(g, {5}, cert, {0}));  // infeasible
    }
    SUBCASE("K4 unit weights with pi == 1/2") {
        EmbeddedGraph g = corpus::k4();
        oc::DualCertificate cert;
        cert.pi2_vertex = {1, 1, 1, 1};
        Matching m = {0, 5};  // 01 + 23
        CHECK(oc::verify_dual(g, Weights(6, 1), cert, m));
    }
    SUBCASE("positive blossom crossed twice is rejected") {
        EmbeddedGraph g = corpus::cycle(6);
        oc::DualCertificate cert;
        cert.pi2_vertex = {0, 0, 0, 0, 0, 0};
        cert.pi2_blossom.push_back({{0, 1, 2}, 2});
        Matching m = {0, 2, 4};
        CHECK(!oc::verify_dual(g, {0, 0, 1, 0, 1, 0}, cert, m));
    }
}

TEST_CASE("dual completion search finds potentials on all-allowed instances") {
    SUBCASE("C4 zero weights, empty family") {
        EmbeddedGraph g = corpus::cycle(4);
        auto cert = oc::search_dual_completion(g, Weights(4, 0), {}, {0, 2});
        REQUIRE(cert.has_value());
        CHECK(oc::verify_dual(g, Weights(4, 0), *cert, {0, 2}));
    }
    SUBCASE("wheel with zero rim and unit spokes needs the rim blossom") {
        EmbeddedGraph g = make_wheel(5);
        // Edges: spokes 0..4 (hub-r_i), rim 5..9.
        Weights w(10, 0);
        for (EdgeId e = 0; e < 5; ++e) w[e] = 1;
        auto pm = oc::enumerate_perfect_matchings(g);
        REQUIRE(!pm.empty());
        Matching best = pm.front();
        for (const auto& m : pm)
            if (matching_weight(w, m) < matching_weight(w, best)) best = m;
        auto cert = oc::search_dual_completion(g, w, {{1, 2, 3, 4, 5}}, best);
        REQUIRE(cert.has_value());
        CHECK(oc::verify_dual(g, w, *cert, best));
    }
}
