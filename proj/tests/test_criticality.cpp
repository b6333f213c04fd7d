#include "doctest.h"

#include "gfc/criticality.hpp"
#include "gfc/enumeration.hpp"
#include "gfc/extremal.hpp"
#include "gfc/graph.hpp"
#include "gfc/matchings.hpp"

using namespace gfc;

TEST_CASE("pinned verdicts") {
    for (int k : {3, 5}) {
        CHECK(classify_gfc(complete_graph(5), k).holds);
        CHECK(classify_gfc(complete_graph(7), k).holds);
        CHECK_FALSE(classify_gfc(build(FamilySpec::join_family(1, 3, 1)), k).holds);
        CHECK_FALSE(classify_gfc(build(FamilySpec::split_like(2, 3)), k).holds);
        CHECK(classify_gbc(complete_graph(6), k).holds);
        CHECK_FALSE(classify_gbc(build(FamilySpec::split_like(3, 3)), k).holds);
        CHECK_FALSE(classify_gbc(cycle_graph(6), k).holds);
    }
    CHECK(classify_gfc(cycle_graph(5), 2).holds);  // odd cycles are factor-critical
    CHECK(classify_gfc(cycle_graph(5), 3).holds);
    CHECK_FALSE(classify_gfc(path_graph(5), 3).holds);
    CHECK(classify_kd(complete_graph(4), 3, 2).holds);
    CHECK_FALSE(classify_kd(star_graph(5), 3, 1).holds);
}

TEST_CASE("structural and definitional classifiers agree (odd k)") {
    for (int n = 3; n <= 5; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            for (int k : {3, 5}) {
                if (n % 2 == 1)
                    CHECK(classify_gfc(g, k).holds == gfc_by_definition(g, k).holds);
                for (int d = 1; d <= k - 1; ++d) {
                    if ((n - d) % 2 != 0) continue;
                    CHECK(classify_kd(g, k, d).holds == kd_by_definition(g, k, d).holds);
                }
            }
        });
}

TEST_CASE("even k: structural verdict matches per-vertex deletion oracle") {
    for (int n = 3; n <= 5; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            for (int k : {2, 4}) {
                bool structural = n % 2 == 1 ? classify_gfc(g, k).holds
                                             : classify_gbc(g, k).holds;
                CHECK(structural == even_k_by_deletion(g, k).holds);
            }
        });
}

TEST_CASE("even k verdict does not depend on k") {
    for (int n = 3; n <= 5; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            bool v2 = n % 2 == 1 ? classify_gfc(g, 2).holds : classify_gbc(g, 2).holds;
            bool v4 = n % 2 == 1 ? classify_gfc(g, 4).holds : classify_gbc(g, 4).holds;
            CHECK(v2 == v4);
        });
}

TEST_CASE("fast and plain classification agree on dense graphs") {
    for (int n : {8, 9}) {
        long long seen = 0;
        for_each_dense_by_complement(n, n - 2, [&](const ComplementState& st) {
            if (++seen % 211 != 0) return;  // sample
            Graph g = st.materialize();
            if (n % 2 == 1) {
                CHECK(classify_gfc(g, 3, true).holds == classify_gfc(g, 3, false).holds);
                CHECK(classify_gfc(g, 2, true).holds == classify_gfc(g, 2, false).holds);
            } else {
                CHECK(classify_gbc(g, 3, true).holds == classify_gbc(g, 3, false).holds);
                CHECK(classify_gbc(g, 2, true).holds == classify_gbc(g, 2, false).holds);
            }
            CHECK(classify_kd(g, 5, 2 - n % 2, true).holds ==
                  classify_kd(g, 5, 2 - n % 2, false).holds);
        });
    }
}

TEST_CASE("classification holds iff deficiency is zero with empty unique barrier") {
    for (int n = 3; n <= 5; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            for (int k : {3, 5}) {
                if (n % 2 == 0) continue;
                CHECK(classify_gfc(g, k).holds == barrier_uniqueness_check(g, k).holds);
            }
        });
}

TEST_CASE("tiny orders route through barrier uniqueness") {
    CHECK(classify_gfc(complete_graph(1), 3).method == VerdictMethod::BarrierUniqueness);
    CHECK(classify_gbc(complete_graph(2), 3).method == VerdictMethod::BarrierUniqueness);
}
