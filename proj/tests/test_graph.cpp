#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "gfc/graph.hpp"

using namespace gfc;

TEST_CASE("edge list construction and basic invariants") {
    Graph k3 = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.n == 3);
    CHECK(k3.m == 3);
    CHECK(k3.has_edge(0, 1));
    CHECK(k3.has_edge(2, 0));
    CHECK_FALSE(k3.has_edge(0, 0));

    Graph dup = from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.m == 1);

    CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(from_edge_list(3, {{1, 1}}), std::invalid_argument);

    // m is half the degree sum
    int degsum = 0;
    for (int v = 0; v < k3.n; ++v) degsum += k3.degree(v);
    CHECK(degsum == 2 * k3.m);
}

TEST_CASE("named constructors") {
    CHECK(complete_graph(5).m == 10);
    CHECK(empty_graph(4).m == 0);
    CHECK(cycle_graph(5).m == 5);
    CHECK(path_graph(5).m == 4);
    CHECK(star_graph(6).m == 5);
    CHECK(star_graph(6).degree(0) == 5);
}

TEST_CASE("join and disjoint union") {
    Graph g = join(complete_graph(2), empty_graph(3));
    CHECK(g.n == 5);
    CHECK(g.m == 1 + 6);  // e(K2) + 2*3 cross edges
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 5; ++b) CHECK(g.has_edge(a, b));

    // e(G v H) = e(G) + e(H) + |G||H| on assorted pairs
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            Graph l = cycle_graph(std::max(a, 3));
            Graph r = path_graph(b);
            CHECK(join(l, r).m == l.m + r.m + l.n * r.n);
        }

    Graph du = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK(du.n == 5);
    CHECK(du.m == 4);
    CHECK_FALSE(du.has_edge(0, 3));
}

TEST_CASE("complement is an involution and counts match") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() % 2) edges.push_back({u, v});
        Graph g = from_edge_list(n, edges);
        Graph c = complement(g);
        CHECK(c.m == n * (n - 1) / 2 - g.m);
        CHECK(complement(c) == g);
    }
}

TEST_CASE("component summary distinguishes odd, isolated and even parts") {
    Graph g = disjoint_union(disjoint_union(complete_graph(3), empty_graph(2)), path_graph(4));
    ComponentSummary cs = component_summary(g);
    CHECK(cs.components.size() == 4);
    CHECK(cs.odd_nontrivial == 1);
    CHECK(cs.isolated == 2);
    CHECK(cs.even_count == 1);
    CHECK(cs.odd_nontrivial + cs.isolated + cs.even_count ==
          static_cast<int>(cs.components.size()));

    // a single vertex is isolated, not an odd component
    ComponentSummary single = component_summary(empty_graph(1));
    CHECK(single.odd_nontrivial == 0);
    CHECK(single.isolated == 1);
}

TEST_CASE("vertex deletion reindexes correctly") {
    Graph c5 = cycle_graph(5);
    InducedSubgraph sub = delete_vertices(c5, (1ULL << 2));
    CHECK(sub.graph.n == 4);
    CHECK(sub.graph.m == 3);  // P4 remains
    Graph p4 = delete_vertex(c5, 0);
    CHECK(p4.n == 4);
    CHECK(is_connected(p4));
    CHECK_FALSE(is_connected(delete_vertex(star_graph(4), 0)));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete_graph(1)));
    CHECK(is_connected(cycle_graph(6)));
    CHECK_FALSE(is_connected(disjoint_union(complete_graph(2), complete_graph(2))));
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() % 3 == 0) edges.push_back({u, v});
        Graph g = from_edge_list(n, edges);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // fixed value: K_1 v (K_3 + K_1) on 5 vertices
    Graph ex = join(complete_graph(1), disjoint_union(complete_graph(3), empty_graph(1)));
    CHECK(to_graph6(ex) == "D~_");
    CHECK(from_graph6("D~_") == ex);
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("\x01"), std::invalid_argument);
}

TEST_CASE("edge list text round trip") {
    Graph g = cycle_graph(4);
    Graph back = from_edge_list_text(to_edge_list_text(g));
    CHECK(back == g);
}
