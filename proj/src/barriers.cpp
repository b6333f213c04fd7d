#include "gfc/barriers.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfc {

namespace {

struct Counts {
    int odd = 0;
    int iso = 0;
};

Counts counts_within(const Graph& g, std::uint64_t keep) {
    Counts c;
    std::uint64_t todo = keep;
    while (todo) {
        int start = __builtin_ctzll(todo);
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                next |= g.adj[v] & keep & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        int order = __builtin_popcountll(comp);
        if (order == 1)
            ++c.iso;
        else if (order % 2)
            ++c.odd;
        todo &= ~comp;
    }
    return c;
}

int value_of(const Graph& g, std::uint64_t s, int k) {
    Counts c = counts_within(g, g.vertex_mask() & ~s);
    int base = k * c.iso - k * __builtin_popcountll(s);
    return (k % 2) ? c.odd + base : base;
}

// Violation predicate shared by all scans: for odd k, odd + k.i >= k|S| -
// slack; for even k, i >= |S|.
bool violates(const Graph& g, std::uint64_t s, int k, int slack) {
    int pop = __builtin_popcountll(s);
    Counts c = counts_within(g, g.vertex_mask() & ~s);
    if (k % 2) return c.odd + k * c.iso >= k * pop - slack;
    return c.iso >= pop;
}

bool cmp_subset(std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
}

std::optional<std::uint64_t> brute_violating(const Graph& g, int k, int slack) {
    // Increasing popcount so the smallest witness is found first.
    std::uint64_t all = g.vertex_mask();
    for (int pop = 1; pop <= g.n; ++pop) {
        std::uint64_t s = (std::uint64_t{1} << pop) - 1;
        while (true) {
            if (violates(g, s, k, slack)) return s;
            if (s == (all & ~((std::uint64_t{1} << (g.n - pop)) - 1))) break;
            std::uint64_t low = s & -s;
            std::uint64_t carry = s + low;
            s = carry | (((s ^ carry) >> 2) / low);
        }
    }
    return std::nullopt;
}

// The sparse-complement candidate family. Any nonempty subset S that can
// satisfy one of the scanned inequalities (or beat the empty set in the
// deficiency maximum) when the complement has at most 8 edges must equal the
// union of the graph neighborhoods of the isolated vertices of G-S; those
// isolated vertices all have degree <= 4 and form an independent set. The
// family is therefore { union of N(v), v in I } over nonempty independent
// I within the low-degree vertex set, and it contains every candidate that
// matters. Requires min degree >= 1 and, for odd k, slack <= k-2.
constexpr int kFastComplementCap = 8;

bool fast_applicable(const Graph& g, int k, int slack) {
    int cedges = g.n * (g.n - 1) / 2 - g.m;
    if (cedges > kFastComplementCap) return false;
    if (k % 2 && slack > k - 2) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v] == 0) return false;
    return true;
}

std::vector<int> low_degree_vertices(const Graph& g) {
    std::vector<int> low;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 4) low.push_back(v);
    return low;
}

std::vector<std::uint64_t> fast_candidates(const Graph& g, const std::vector<int>& low) {
    std::vector<std::uint64_t> out;
    for (std::uint32_t pick = 1; pick < (1u << low.size()); ++pick) {
        std::uint64_t iset = 0, nbrs = 0;
        bool independent = true;
        for (std::size_t j = 0; j < low.size() && independent; ++j)
            if ((pick >> j) & 1u) {
                int v = low[j];
                if (g.adj[v] & iset) independent = false;
                iset |= std::uint64_t{1} << v;
                nbrs |= g.adj[v];
            }
        if (independent && nbrs && !(nbrs & iset)) out.push_back(nbrs);
    }
    std::sort(out.begin(), out.end(), cmp_subset);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

int subset_value(const Graph& g, std::uint64_t s, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return value_of(g, s & g.vertex_mask(), k);
}

std::optional<std::uint64_t> find_violating_subset(const Graph& g, int k, int slack, bool fast) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (fast && fast_applicable(g, k, slack)) {
        std::vector<int> low = low_degree_vertices(g);
        if (low.empty()) return std::nullopt;
        if (low.size() <= 12) {
            for (std::uint64_t s : fast_candidates(g, low))
                if (violates(g, s, k, slack)) return s;
            return std::nullopt;
        }
    }
    return brute_violating(g, k, slack);
}

std::optional<std::uint64_t> violates_gfc_inequality(const Graph& g, int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("gfc scan needs odd k >= 3");
    return find_violating_subset(g, k, 0);
}

std::optional<std::uint64_t> violates_gbc_inequality(const Graph& g, int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("gbc scan needs odd k >= 3");
    return find_violating_subset(g, k, 1);
}

std::optional<std::uint64_t> violates_kd_inequality(const Graph& g, int k, int d) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("kd scan needs odd k >= 3");
    if (d < 1 || d > k) throw std::invalid_argument("d must satisfy 1 <= d <= k");
    if ((g.n - d) % 2 != 0) throw std::invalid_argument("n and d must have the same parity");
    return find_violating_subset(g, k, d - 1);
}

std::optional<std::uint64_t> violates_even_k_inequality(const Graph& g) {
    return find_violating_subset(g, 2, 0);
}

BarrierReport deficiency_k(const Graph& g, int k, bool pruned) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    BarrierReport r;
    r.k = k;

    bool use_fast = pruned && fast_applicable(g, k, 0);
    std::vector<std::uint64_t> candidates;
    if (use_fast) {
        std::vector<int> low = low_degree_vertices(g);
        if (low.size() > 12)
            use_fast = false;
        else
            candidates = fast_candidates(g, low);
    }

    if (use_fast) {
        r.deficiency = value_of(g, 0, k);
        r.barriers = {0};
        r.barrier_count = 1;
        for (std::uint64_t s : candidates) {
            int val = value_of(g, s, k);
            if (val > r.deficiency) {
                r.deficiency = val;
                r.barriers = {s};
                r.barrier_count = 1;
            } else if (val == r.deficiency) {
                r.barriers.push_back(s);
                ++r.barrier_count;
            }
        }
    } else {
        if (g.n > 24) throw std::invalid_argument("brute-force deficiency capped at n <= 24");
        bool keep_all = g.n <= 16;
        r.deficiency = value_of(g, 0, k);
        r.barriers = {0};
        r.barrier_count = 1;
        std::uint64_t total = std::uint64_t{1} << g.n;
        for (std::uint64_t s = 1; s < total; ++s) {
            int val = value_of(g, s, k);
            if (val > r.deficiency) {
                r.deficiency = val;
                r.barriers = {s};
                r.barrier_count = 1;
            } else if (val == r.deficiency) {
                ++r.barrier_count;
                if (keep_all) r.barriers.push_back(s);
            }
        }
    }
    std::sort(r.barriers.begin(), r.barriers.end(), cmp_subset);
    r.empty_is_unique = r.barrier_count == 1 && r.barriers.front() == 0;
    return r;
}

}  // namespace gfc
