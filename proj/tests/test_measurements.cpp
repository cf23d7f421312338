#include "doctest.h"

#include <cmath>

#include "errors.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "measurements.hpp"

using namespace netperturb;

namespace {

graph triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
graph path3() { return graph(3, {{0, 1}, {1, 2}}); }
graph path4() { return graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
graph star3() { return graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
graph k4() { return graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
graph cycle4() { return graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

} // namespace

TEST_CASE("avg_degree") {
    CHECK(avg_degree(triangle()) == 2.0);
    CHECK(avg_degree(path3()) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(avg_degree(gen_er(100, 5.7, 3)) == doctest::Approx(5.7).epsilon(1e-15));
}

TEST_CASE("clustering coefficient") {
    auto tri = clustering_coefficient(triangle());
    CHECK(tri.network_value == 1.0);
    for (double v : tri.per_node) CHECK(v == 1.0);

    auto path = clustering_coefficient(path3());
    CHECK(path.network_value == 0.0);

    CHECK(clustering_coefficient(k4()).network_value == 1.0);

    // degree < 2 nodes contribute zero but stay in the mean
    auto with_leaf = clustering_coefficient(graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
    CHECK(with_leaf.per_node[3] == 0.0);
    CHECK(with_leaf.per_node[0] == 1.0);
    CHECK(with_leaf.per_node[2] == doctest::Approx(1.0 / 3.0));
    CHECK(with_leaf.network_value == doctest::Approx((1.0 + 1.0 + 1.0 / 3.0 + 0.0) / 4.0));
}

TEST_CASE("betweenness centrality: hand-enumerated examples") {
    auto path = betweenness_centrality(path3());
    CHECK(path.per_node[0] == 0.0);
    CHECK(path.per_node[1] == 1.0);
    CHECK(path.per_node[2] == 0.0);
    CHECK(path.network_value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    auto star = betweenness_centrality(star3());
    CHECK(star.per_node[0] == 3.0); // three leaf pairs route through the center
    CHECK(star.network_value == doctest::Approx(0.75).epsilon(1e-15));

    auto complete = betweenness_centrality(k4());
    for (double v : complete.per_node) CHECK(v == 0.0);
}

TEST_CASE("betweenness centrality matches brute-force path enumeration") {
    rng r(404);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(r.below(8));
        graph g = test_helpers::random_graph(r, n, r.uniform(0.2, 0.7));
        auto want = test_helpers::brute_force_betweenness(g);
        auto got = betweenness_centrality(g);
        for (int v = 0; v < n; ++v)
            REQUIRE(got.per_node[static_cast<std::size_t>(v)] ==
                    doctest::Approx(want[static_cast<std::size_t>(v)]).epsilon(1e-9));
    }
}

TEST_CASE("betweenness on trees: sum equals sum of (d(u,v) - 1) over pairs") {
    rng r(808);
    for (int n = 2; n <= 12; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            graph t = test_helpers::random_tree(r, n);
            auto rep_bc = betweenness_centrality(t);
            double total = 0.0;
            for (double v : rep_bc.per_node) total += v;
            auto dist = test_helpers::floyd_warshall(t);
            double want = 0.0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) want += dist[u][v] - 1;
            REQUIRE(total == doctest::Approx(want).epsilon(1e-12));

            // unique shortest paths on trees: brute force agrees exactly
            auto brute = test_helpers::brute_force_betweenness(t);
            for (int v = 0; v < n; ++v)
                REQUIRE(rep_bc.per_node[static_cast<std::size_t>(v)] ==
                        doctest::Approx(brute[static_cast<std::size_t>(v)]).epsilon(1e-12));
        }
    }
}

TEST_CASE("assortativity: hand-evaluated examples") {
    CHECK(assortativity(star3()).network_value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(assortativity(path4()).network_value == doctest::Approx(-0.5).epsilon(1e-12));

    auto regular = assortativity(k4());
    CHECK(regular.flag == degeneracy::zero_variance);
    CHECK(regular.network_value == 0.0);

    CHECK_THROWS_AS(assortativity(graph(3, {})), numeric_error);
}

TEST_CASE("assortativity stays in [-1, 1]") {
    rng r(606);
    for (int trial = 0; trial < 50; ++trial) {
        graph g = test_helpers::random_graph(r, 3 + static_cast<int>(r.below(20)),
                                             r.uniform(0.1, 0.8));
        if (g.edge_count() < 1) continue;
        auto rep = assortativity(g);
        if (rep.flag == degeneracy::none) {
            CHECK(rep.network_value >= -1.0);
            CHECK(rep.network_value <= 1.0);
        }
    }
}

TEST_CASE("average shortest path") {
    CHECK(avg_shortest_path(path3()).network_value == doctest::Approx(4.0 / 3.0));
    CHECK(avg_shortest_path(k4()).network_value == 1.0);

    // two disjoint edges: reachable pairs only
    auto split = avg_shortest_path(graph(4, {{0, 1}, {2, 3}}));
    CHECK(split.network_value == 1.0);
    CHECK(split.flag == degeneracy::disconnected);

    CHECK_THROWS_AS(avg_shortest_path(graph(3, {})), numeric_error);
}

TEST_CASE("hierarchical degree") {
    auto p4 = hierarchical_degree(path4(), 2);
    CHECK(p4.per_node[0] == 1.0); // one edge between ring1={1} and ring2={2}

    auto c4 = hierarchical_degree(cycle4(), 2);
    CHECK(c4.per_node[0] == 2.0); // edges {1,2} and {3,2}

    auto complete = hierarchical_degree(k4(), 2);
    CHECK(complete.network_value == 0.0); // ring 2 empty

    // h = 1 equals degree for every node
    rng r(11);
    for (int trial = 0; trial < 10; ++trial) {
        graph g = test_helpers::random_graph(r, 4 + static_cast<int>(r.below(20)),
                                             r.uniform(0.1, 0.6));
        auto h1 = hierarchical_degree(g, 1);
        for (node_id v = 0; v < g.node_count(); ++v)
            REQUIRE(h1.per_node[static_cast<std::size_t>(v)] == g.degree(v));
    }

    CHECK_THROWS_AS(hierarchical_degree(path3(), 0), argument_error);
}

TEST_CASE("transition matrix") {
    auto k2 = transition_matrix(graph(2, {{0, 1}}));
    CHECK(k2.at(0, 0) == 0.0);
    CHECK(k2.at(0, 1) == 1.0);
    CHECK(k2.at(1, 0) == 1.0);

    auto tri = transition_matrix(triangle());
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(tri.at(u, v) == (u == v ? 0.0 : 0.5));

    auto star = transition_matrix(star3());
    for (int leaf = 1; leaf <= 3; ++leaf)
        CHECK(star.at(0, leaf) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(transition_matrix(graph(3, {{0, 1}})), numeric_error);
}

TEST_CASE("accessibility at h=1 equals degree") {
    rng r(2718);
    for (int trial = 0; trial < 40; ++trial) {
        graph g = test_helpers::random_graph(r, 3 + static_cast<int>(r.below(25)),
                                             r.uniform(0.15, 0.7));
        bool all_connected = true;
        for (node_id v = 0; v < g.node_count(); ++v)
            if (g.degree(v) == 0) all_connected = false;
        if (!all_connected) continue;
        auto a1 = accessibility(g, 1);
        for (node_id v = 0; v < g.node_count(); ++v)
            REQUIRE(a1.per_node[static_cast<std::size_t>(v)] ==
                    doctest::Approx(g.degree(v)).epsilon(1e-9));
    }
}

TEST_CASE("accessibility goldens") {
    // triangle h=2: walk distribution {1/2, 1/4, 1/4} -> 2*sqrt(2)
    auto tri = accessibility(triangle(), 2);
    for (double v : tri.per_node)
        CHECK(v == doctest::Approx(2.8284271247461903).epsilon(1e-12));

    // 4-cycle h=2: {1/2 self, 1/2 opposite} -> 2
    auto c4 = accessibility(cycle4(), 2);
    for (double v : c4.per_node) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("accessibility bounds: 1 <= alpha_h <= N") {
    rng r(909);
    for (int trial = 0; trial < 25; ++trial) {
        graph g = test_helpers::random_graph(r, 3 + static_cast<int>(r.below(20)),
                                             r.uniform(0.2, 0.8));
        if (g.edge_count() == 0) continue;
        for (int h = 1; h <= 5; ++h) {
            auto rep = accessibility(g, h);
            for (node_id v = 0; v < g.node_count(); ++v) {
                if (g.degree(v) == 0) continue;
                double a = rep.per_node[static_cast<std::size_t>(v)];
                REQUIRE(a >= 1.0 - 1e-12);
                REQUIRE(a <= g.node_count() + 1e-12);
            }
        }
    }
}

TEST_CASE("accessibility row-propagation equals dense matrix powers") {
    rng r(5050);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + static_cast<int>(r.below(48));
        graph g = test_helpers::random_graph(r, n, r.uniform(0.1, 0.5));
        bool ok = true;
        for (node_id v = 0; v < n; ++v)
            if (g.degree(v) == 0) ok = false;
        if (!ok) continue;
        for (int h : {2, 4}) {
            auto rep = accessibility(g, h);
            for (int v = 0; v < n; ++v) {
                auto row = test_helpers::dense_walk_row(g, v, h);
                double ent = 0.0;
                for (double p : row)
                    if (p > 0) ent -= p * std::log(p);
                REQUIRE(rep.per_node[static_cast<std::size_t>(v)] ==
                        doctest::Approx(std::exp(ent)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("accessibility with isolated nodes flags and averages the rest") {
    graph g(4, {{0, 1}, {1, 2}}); // node 3 isolated
    auto rep = accessibility(g, 1);
    CHECK(rep.flag == degeneracy::isolated_nodes);
    CHECK(rep.network_value == doctest::Approx((1.0 + 2.0 + 1.0) / 3.0));
    CHECK_THROWS_AS(accessibility(graph(2, {}), 1), numeric_error);
}

TEST_CASE("ring-restricted accessibility variant") {
    // triangle at h=2: the distance-2 ring is empty everywhere
    auto tri = accessibility(triangle(), 2, access_mode::ring_restricted);
    CHECK(tri.network_value == 0.0);
    // path 0-1-2 from node 0 at h=2: ring = {2}, all mass there -> exp(0) = 1
    auto p3 = accessibility(path3(), 2, access_mode::ring_restricted);
    CHECK(p3.per_node[0] == doctest::Approx(1.0));
}

TEST_CASE("generalized accessibility goldens (series oracle)") {
    // K2: rows of exp(T)/e are {cosh(1)/e, sinh(1)/e}
    auto k2 = generalized_accessibility(graph(2, {{0, 1}}));
    CHECK(k2.network_value == doctest::Approx(1.9817121614641324).epsilon(1e-9));
    CHECK(k2.network_value == doctest::Approx(1.9816).epsilon(1e-3));

    // triangle: row {0.48209, 0.25896, 0.25896}
    auto tri = generalized_accessibility(triangle());
    CHECK(tri.network_value == doctest::Approx(2.861927556440785).epsilon(1e-9));
    CHECK(tri.network_value == doctest::Approx(2.862).epsilon(1e-3));
}

TEST_CASE("matrix exponential of T agrees with the plain series oracle") {
    rng r(1111);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(r.below(48));
        graph g = test_helpers::random_graph(r, n, r.uniform(0.15, 0.5));
        bool ok = true;
        for (node_id v = 0; v < n; ++v)
            if (g.degree(v) == 0) ok = false;
        if (!ok) continue;

        dense_matrix t = transition_matrix(g);
        dense_matrix fast = matrix_exponential(t);
        dense_matrix slow = test_helpers::series_exponential(t);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                REQUIRE(fast.at(i, j) == doctest::Approx(slow.at(i, j)).epsilon(1e-9));

        // rows of exp(T)/e sum to 1
        const double inv_e = std::exp(-1.0);
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += fast.at(i, j) * inv_e;
            REQUIRE(row == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("measure_all composes the suite deterministically") {
    auto suite = measure_all(triangle());
    CHECK(suite.value(measurement_id::degree) == 2.0);
    CHECK(suite.value(measurement_id::clustering) == 1.0);
    CHECK(suite.value(measurement_id::betweenness) == 0.0);
    CHECK(suite.value(measurement_id::avg_shortest_path) == 1.0);
    CHECK(suite.value(measurement_id::hier_degree_h2) == 0.0);
    CHECK(suite.value(measurement_id::accessibility_h2) ==
          doctest::Approx(2.8284271247461903).epsilon(1e-9));

    auto k4_suite = measure_all(k4());
    CHECK(k4_suite.flag(measurement_id::assortativity) == degeneracy::zero_variance);

    auto again = measure_all(triangle());
    for (int i = 0; i < k_measurement_count; ++i) {
        // identical maps on identical input, NaN included
        if (std::isnan(suite.values[static_cast<std::size_t>(i)]))
            CHECK(std::isnan(again.values[static_cast<std::size_t>(i)]));
        else
            CHECK(suite.values[static_cast<std::size_t>(i)] ==
                  again.values[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("measure_all survives degenerate graphs with flags") {
    // single node: walk and path measurements undefined, the rest fine
    auto lonely = measure_all(graph(1, {}));
    CHECK(lonely.value(measurement_id::degree) == 0.0);
    CHECK(lonely.flag(measurement_id::avg_shortest_path) == degeneracy::undefined);
    CHECK(std::isnan(lonely.value(measurement_id::avg_shortest_path)));
    CHECK(lonely.flag(measurement_id::generalized_accessibility) == degeneracy::undefined);

    // edgeless graph
    auto empty = measure_all(graph(3, {}));
    CHECK(empty.value(measurement_id::degree) == 0.0);
    CHECK(empty.value(measurement_id::clustering) == 0.0);
    CHECK(empty.flag(measurement_id::assortativity) == degeneracy::undefined);
}

TEST_CASE("measurement names round-trip") {
    for (int i = 0; i < k_measurement_count; ++i) {
        auto id = static_cast<measurement_id>(i);
        CHECK(measurement_from_name(measurement_name(id)) == id);
    }
    CHECK_THROWS_AS(measurement_from_name("nope"), argument_error);
}
