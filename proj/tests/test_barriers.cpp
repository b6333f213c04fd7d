#include "doctest.h"

#include <optional>

#include "gfc/barriers.hpp"
#include "gfc/enumeration.hpp"
#include "gfc/extremal.hpp"
#include "gfc/graph.hpp"

using namespace gfc;

namespace {

// Independent oracle: re-derive the subset value from component_summary and
// scan all subsets directly.
int oracle_subset_value(const Graph& g, std::uint64_t s, int k) {
    ComponentSummary cs = component_summary_within(g, g.vertex_mask() & ~s);
    int cnt = __builtin_popcountll(s);
    int val = k * cs.isolated - k * cnt;
    if (k % 2 == 1) val += cs.odd_nontrivial;
    return val;
}

int oracle_deficiency(const Graph& g, int k) {
    int best = 0;
    for (std::uint64_t s = 0; s < (1ULL << g.n); ++s)
        best = std::max(best, oracle_subset_value(g, s, k));
    return best;
}

}  // namespace

TEST_CASE("subset value matches a direct component census") {
    Graph g = build(FamilySpec::join_family(1, 3, 1));
    for (int k : {2, 3, 4, 5})
        for (std::uint64_t s = 0; s < (1ULL << g.n); ++s)
            CHECK(subset_value(g, s, k) == oracle_subset_value(g, s, k));
}

TEST_CASE("deficiency on pinned graphs") {
    // K_1 v (K_3 + K_1): deleting the join vertex leaves K_3 + K_1
    Graph ex = build(FamilySpec::join_family(1, 3, 1));
    BarrierReport br = deficiency_k(ex, 3);
    CHECK(br.deficiency == 1);
    CHECK_FALSE(br.empty_is_unique);

    // odd complete graphs: the whole graph is one odd component, so the empty
    // set already scores 1 and nothing beats it
    for (int n : {3, 5, 7})
        for (int k : {3, 5}) {
            BarrierReport r = deficiency_k(complete_graph(n), k);
            CHECK(r.deficiency == 1);
            CHECK(r.empty_is_unique);
            CHECK(r.barrier_count == 1);
        }

    // star K_{1,3}, k=3: S = {center} isolates three vertices
    BarrierReport star = deficiency_k(star_graph(4), 3);
    CHECK(star.deficiency == 3 * 3 - 3);

    // K_2 v 3K_1, k=3: S = both clique vertices isolates three vertices
    BarrierReport split = deficiency_k(build(FamilySpec::split_like(2, 3)), 3);
    CHECK(split.deficiency == 3 * 3 - 3 * 2);
}

TEST_CASE("deficiency agrees with the brute oracle on all small connected graphs") {
    for (int n = 1; n <= 6; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            for (int k : {2, 3, 4})
                CHECK(deficiency_k(g, k).deficiency == oracle_deficiency(g, k));
        });
}

TEST_CASE("pruned and brute deficiency agree on dense graphs") {
    for (int n : {7, 8}) {
        long long seen = 0;
        for_each_dense_by_complement(n, n - 2, [&](const ComplementState& st) {
            if (++seen % 17 != 0) return;  // sample
            Graph g = st.materialize();
            for (int k : {2, 3, 5}) {
                BarrierReport a = deficiency_k(g, k, false);
                BarrierReport b = deficiency_k(g, k, true);
                CHECK(a.deficiency == b.deficiency);
            }
        });
    }
}

TEST_CASE("violation scans agree with brute subset search") {
    auto brute_violating = [](const Graph& g, int k, int slack) -> std::optional<std::uint64_t> {
        std::optional<std::uint64_t> best;
        auto better = [](std::uint64_t a, std::uint64_t b) {
            int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            return pa != pb ? pa < pb : a < b;
        };
        for (std::uint64_t s = 1; s < (1ULL << g.n); ++s) {
            ComponentSummary cs = component_summary_within(g, g.vertex_mask() & ~s);
            int cnt = __builtin_popcountll(s);
            bool viol = k % 2 == 0 ? cs.isolated >= cnt
                                   : cs.odd_nontrivial + k * cs.isolated >= k * cnt - slack;
            if (viol && (!best || better(s, *best))) best = s;
        }
        return best;
    };
    for (int n = 3; n <= 5; ++n)
        for_each_connected_labeled(n, [&](const Graph& g) {
            for (int k : {2, 3, 5})
                for (int slack : {0, 1, 2}) {
                    auto got = find_violating_subset(g, k, slack);
                    auto want = brute_violating(g, k, slack);
                    CHECK(got == want);
                }
        });
}

TEST_CASE("fast violation scan matches brute on the dense domain") {
    for (int n : {8, 9}) {
        long long seen = 0;
        for_each_dense_by_complement(n, n - 2, [&](const ComplementState& st) {
            if (++seen % 101 != 0) return;  // sample
            Graph g = st.materialize();
            for (int k : {2, 3, 5})
                for (int slack : {0, 1, 2}) {
                    if (k % 2 == 1 && slack > k - 2) continue;
                    CHECK(find_violating_subset(g, k, slack, true) ==
                          find_violating_subset(g, k, slack, false));
                }
        });
    }
}
