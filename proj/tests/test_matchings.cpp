#include "doctest.h"

#include "gfc/enumeration.hpp"
#include "gfc/extremal.hpp"
#include "gfc/graph.hpp"
#include "gfc/matchings.hpp"

using namespace gfc;

namespace {

// Brute-force fractional-matching optimum. The optimum is attained at a
// half-integral point, so scanning doubled weights in {0,1,2} is exact.
int oracle_fractional_doubled(const Graph& g) {
    auto edges = g.edges();
    int best = 0;
    std::vector<int> w(edges.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == edges.size()) {
            std::array<int, kMaxOrder> load{};
            int total = 0;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                load[edges[e].first] += w[e];
                load[edges[e].second] += w[e];
                total += w[e];
            }
            for (int v = 0; v < g.n; ++v)
                if (load[v] > 2) return;
            best = std::max(best, total);
            return;
        }
        for (int x : {0, 1, 2}) {
            w[i] = x;
            self(self, i + 1);
        }
        w[i] = 0;
    };
    rec(rec, 0);
    return best;
}

}  // namespace

TEST_CASE("fractional matching is half-integral and optimal on small graphs") {
    for (int n = 1; n <= 5; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            HalfIntegralMatching fm = fractional_matching(g);
            int check_total = 0;
            std::array<int, kMaxOrder> load{};
            for (std::size_t e = 0; e < fm.edges.size(); ++e) {
                int w = fm.doubled_weights[e];
                CHECK(w >= 0);
                CHECK(w <= 2);
                load[fm.edges[e].first] += w;
                load[fm.edges[e].second] += w;
                check_total += w;
            }
            for (int v = 0; v < g.n; ++v) CHECK(load[v] <= 2);
            CHECK(check_total == fm.total_doubled);
            CHECK(fm.total_doubled == oracle_fractional_doubled(g));
        });
}

TEST_CASE("fractional matching pinned values") {
    CHECK(fractional_matching(cycle_graph(5)).total_doubled == 5);   // mu_f = 5/2
    CHECK(fractional_matching(cycle_graph(4)).total_doubled == 4);   // perfect matching
    CHECK(fractional_matching(star_graph(4)).total_doubled == 2);    // mu_f = 1
    CHECK(fractional_matching(complete_graph(7)).total_doubled == 7);
    CHECK(has_fractional_perfect_matching(cycle_graph(5)));
    CHECK_FALSE(has_fractional_perfect_matching(star_graph(4)));
}

TEST_CASE("k-matching number pinned values") {
    // mu_k(K_{1,3}) = k: all weight on the center's edges
    for (int k : {1, 2, 3}) CHECK(k_matching_number(star_graph(4), k).first == k);
    // perfect 2-matching of C_5 has total 5
    CHECK(k_matching_number(cycle_graph(5), 2).first == 5);
    // K_4 has a perfect k-matching for every k
    for (int k : {1, 2, 3, 4}) CHECK(k_matching_number(complete_graph(4), k).first == 2 * k);
}

TEST_CASE("k-matching search and structural perfect test agree") {
    for (int n = 1; n <= 6; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            for (int k : {2, 3, 4}) {
                auto [mu, wit] = k_matching_number(g, k);
                CHECK(mu == wit.total);
                for (int v = 0; v < g.n; ++v) CHECK(wit.vertex_load[v] <= k);
                bool perfect_by_search = 2 * mu == k * g.n;
                if (k % 2 == 0) CHECK(perfect_by_search == has_perfect_k_matching(g, k));
            }
        });
}

TEST_CASE("factor pipeline on pinned graphs") {
    // C_5: unique factor is the cycle itself
    HalfIntegralMatching fm = fractional_matching(cycle_graph(5));
    FactorDecomposition fd = factor_from_fractional(cycle_graph(5), fm);
    CHECK(validate_factor(cycle_graph(5), fd));
    CHECK(fd.k2_edges.empty());
    REQUIRE(fd.cycles.size() == 1);
    CHECK(fd.cycles[0].size() == 5);
    CHECK(fd.odd_cycles_only);

    // C_4: even cycle must be rewritten as two K_2 edges
    FactorDecomposition fd4 = factor_from_fractional(cycle_graph(4), fractional_matching(cycle_graph(4)));
    CHECK(validate_factor(cycle_graph(4), fd4));
    CHECK(fd4.cycles.empty());
    CHECK(fd4.k2_edges.size() == 2);

    // round trip: factor -> perfect k-matching -> perfect fractional matching
    for (int k : {2, 4}) {
        WeightedMatching km = k_matching_from_factor(cycle_graph(5), fd, k);
        CHECK(km.total * 2 == k * 5);
        for (int v = 0; v < 5; ++v) CHECK(km.vertex_load[v] == k);
        RationalMatching rm = fractional_from_k_matching(km);
        CHECK(rm.denominator == k);
    }
}

TEST_CASE("factor search predicates") {
    CHECK(has_factor_search(cycle_graph(5), true));
    CHECK(has_factor_search(cycle_graph(4), false));
    CHECK_FALSE(has_factor_search(star_graph(4), false));
    CHECK(has_factor_search(complete_graph(3), false));  // K_3 is itself a cycle
    CHECK_FALSE(has_factor_search(path_graph(3), false));
    CHECK(has_factor_search(path_graph(4), false));
}

TEST_CASE("four-way equivalence holds on all small connected graphs") {
    for (int n = 1; n <= 5; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            CHECK(verify_theorem9_equivalence(g, 2));
            CHECK(verify_theorem9_equivalence(g, 4));
        });
}

TEST_CASE("kd witness agrees with parity and simple cases") {
    // K_4, k=3, d=2: witness at every vertex
    for (int v = 0; v < 4; ++v) {
        auto w = kd_critical_witness(complete_graph(4), v, 3, 2);
        REQUIRE(w.has_value());
        CHECK(w->vertex_load[v] == 1);
        for (int u = 0; u < 4; ++u)
            if (u != v) CHECK(w->vertex_load[u] == 3);
    }
    // parity obstruction: k n - d odd
    CHECK_FALSE(kd_critical_witness(complete_graph(4), 0, 3, 1).has_value());
    // star: a leaf at load 0 forces the center past its cap
    CHECK_FALSE(kd_critical_witness(star_graph(4), 1, 3, 3).has_value());
}
