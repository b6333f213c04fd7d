#include "gfc/matchings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "gfc/barriers.hpp"

namespace gfc {

namespace {

struct EdgeSearch {
    const Graph& g;
    int k;
    std::vector<std::pair<int, int>> edges;  // canonical order
    std::vector<int> order;                  // search order (indices into edges)
    std::array<int, kMaxOrder> rem_inc{};    // unassigned incident edges per vertex

    explicit EdgeSearch(const Graph& graph, int cap) : g(graph), k(cap), edges(graph.edges()) {
        order.resize(edges.size());
        std::iota(order.begin(), order.end(), 0);
        // Fast failure: tight vertices first.
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            auto key = [&](int e) {
                return std::min(g.degree(edges[e].first), g.degree(edges[e].second));
            };
            return key(a) < key(b);
        });
        for (auto [u, v] : edges) {
            ++rem_inc[u];
            ++rem_inc[v];
        }
    }
};

// Exact-load search: find weights with vertex loads equal to target[].
bool exact_load_dfs(EdgeSearch& s, std::size_t pos, std::array<int, kMaxOrder>& load,
                    const std::array<int, kMaxOrder>& target, std::vector<int>& weights) {
    if (pos == s.order.size()) {
        for (int v = 0; v < s.g.n; ++v)
            if (load[v] != target[v]) return false;
        return true;
    }
    int e = s.order[pos];
    auto [u, v] = s.edges[e];
    --s.rem_inc[u];
    --s.rem_inc[v];
    int cap = std::min({s.k, target[u] - load[u], target[v] - load[v]});
    for (int w = std::max(cap, 0); w >= 0; --w) {
        load[u] += w;
        load[v] += w;
        bool feasible = load[u] + s.k * s.rem_inc[u] >= target[u] &&
                        load[v] + s.k * s.rem_inc[v] >= target[v] &&
                        (s.rem_inc[u] > 0 || load[u] == target[u]) &&
                        (s.rem_inc[v] > 0 || load[v] == target[v]);
        if (feasible) {
            weights[e] = w;
            if (exact_load_dfs(s, pos + 1, load, target, weights)) return true;
        }
        load[u] -= w;
        load[v] -= w;
    }
    weights[e] = 0;
    ++s.rem_inc[u];
    ++s.rem_inc[v];
    return false;
}

// Maximization search for mu_k.
void max_weight_dfs(EdgeSearch& s, std::size_t pos, std::array<int, kMaxOrder>& load, int total,
                    std::vector<int>& weights, int& best, std::vector<int>& best_weights,
                    int global_cap) {
    if (best == global_cap) return;
    // Residual capacity bound on everything still assignable.
    int residual = 0;
    for (int v = 0; v < s.g.n; ++v)
        residual += std::min(s.k - load[v], s.k * s.rem_inc[v]);
    if (total + residual / 2 <= best) return;
    if (pos == s.order.size()) {
        if (total > best) {
            best = total;
            best_weights = weights;
        }
        return;
    }
    int e = s.order[pos];
    auto [u, v] = s.edges[e];
    --s.rem_inc[u];
    --s.rem_inc[v];
    int cap = std::min(s.k - load[u], s.k - load[v]);
    for (int w = cap; w >= 0; --w) {
        load[u] += w;
        load[v] += w;
        weights[e] = w;
        max_weight_dfs(s, pos + 1, load, total + w, weights, best, best_weights, global_cap);
        load[u] -= w;
        load[v] -= w;
    }
    weights[e] = 0;
    ++s.rem_inc[u];
    ++s.rem_inc[v];
}

WeightedMatching make_matching(const Graph& g, int k, std::vector<std::pair<int, int>> edges,
                               std::vector<int> weights) {
    WeightedMatching m;
    m.n = g.n;
    m.k = k;
    m.edges = std::move(edges);
    m.weights = std::move(weights);
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        m.vertex_load[m.edges[i].first] += m.weights[i];
        m.vertex_load[m.edges[i].second] += m.weights[i];
        m.total += m.weights[i];
    }
    return m;
}

}  // namespace

std::pair<int, WeightedMatching> k_matching_number(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.n > 12) throw std::invalid_argument("k_matching_number capped at n <= 12");
    EdgeSearch s(g, k);
    std::array<int, kMaxOrder> load{};
    std::vector<int> weights(s.edges.size(), 0), best_weights(s.edges.size(), 0);
    int best = -1;
    max_weight_dfs(s, 0, load, 0, weights, best, best_weights, k * g.n / 2);
    return {best, make_matching(g, k, s.edges, best_weights)};
}

bool has_perfect_k_matching(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.n > 24) throw std::invalid_argument("structural test capped at n <= 24");
    std::uint64_t total = std::uint64_t{1} << g.n;
    for (std::uint64_t s = 0; s < total; ++s)
        if (subset_value(g, s, k) > 0) return false;
    return true;
}

HalfIntegralMatching fractional_matching(const Graph& g) {
    // Bipartite double cover: copies v+ (left) and v- (right), u+v- for each
    // original edge uv. Maximum matching there equals 2 mu_f.
    const int n = g.n;
    std::vector<int> match_right(n, -1), match_left(n, -1);
    std::vector<char> seen(n);

    auto augment = [&](auto&& self, int left) -> bool {
        std::uint64_t nb = g.adj[left];
        while (nb) {
            int right = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (seen[right]) continue;
            seen[right] = 1;
            if (match_right[right] < 0 || self(self, match_right[right])) {
                match_right[right] = left;
                match_left[left] = right;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (int v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        if (augment(augment, v)) ++size;
    }

    HalfIntegralMatching m;
    m.edges = g.edges();
    m.doubled_weights.assign(m.edges.size(), 0);
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        auto [u, v] = m.edges[i];
        if (match_left[u] == v) ++m.doubled_weights[i];
        if (match_left[v] == u) ++m.doubled_weights[i];
    }
    m.total_doubled = size;
    return m;
}

bool has_fractional_perfect_matching(const Graph& g) {
    return fractional_matching(g).total_doubled == g.n;
}

FactorDecomposition factor_from_fractional(const Graph& g, const HalfIntegralMatching& m) {
    if (m.total_doubled != g.n)
        throw std::invalid_argument("input is not a fractional perfect matching");
    FactorDecomposition f;
    f.odd_cycles_only = true;

    std::array<std::uint64_t, kMaxOrder> half{};  // support of doubled weight 1
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        auto [u, v] = m.edges[i];
        if (m.doubled_weights[i] == 2) {
            f.k2_edges.emplace_back(u, v);
        } else if (m.doubled_weights[i] == 1) {
            half[u] |= std::uint64_t{1} << v;
            half[v] |= std::uint64_t{1} << u;
        } else if (m.doubled_weights[i] != 0) {
            throw std::runtime_error("doubled weight outside {0,1,2}");
        }
    }

    std::uint64_t todo = 0;
    for (int v = 0; v < g.n; ++v)
        if (half[v]) todo |= std::uint64_t{1} << v;
    // The half-weight support must be 2-regular (forced by loads); anything
    // else signals a corrupted matching.
    while (todo) {
        int start = __builtin_ctzll(todo);
        std::vector<int> cycle{start};
        int prev = -1, cur = start;
        do {
            std::uint64_t nb = half[cur];
            if (__builtin_popcountll(nb) != 2)
                throw std::runtime_error("half-weight edges do not form cycles");
            int a = __builtin_ctzll(nb);
            int b = 63 - __builtin_clzll(nb);
            int next = (a == prev) ? b : (b == prev ? a : std::min(a, b));
            prev = cur;
            cur = next;
            if (cur != start) cycle.push_back(cur);
        } while (cur != start);
        if (cycle.size() < 3) throw std::runtime_error("half-weight cycle shorter than 3");
        for (int v : cycle) todo &= ~(std::uint64_t{1} << v);
        if (cycle.size() % 2 == 0) {
            for (std::size_t i = 0; i + 1 < cycle.size(); i += 2)
                f.k2_edges.emplace_back(cycle[i], cycle[i + 1]);
        } else {
            f.cycles.push_back(std::move(cycle));
        }
    }

    if (!validate_factor(g, f)) throw std::runtime_error("constructed factor failed validation");
    return f;
}

bool validate_factor(const Graph& g, const FactorDecomposition& f) {
    std::uint64_t covered = 0;
    auto take = [&](int v) {
        if (v < 0 || v >= g.n || ((covered >> v) & 1u)) return false;
        covered |= std::uint64_t{1} << v;
        return true;
    };
    for (auto [u, v] : f.k2_edges)
        if (!g.has_edge(u, v) || !take(u) || !take(v)) return false;
    for (const auto& cycle : f.cycles) {
        if (cycle.size() < 3) return false;
        if (f.odd_cycles_only && cycle.size() % 2 == 0) return false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (!take(cycle[i])) return false;
            if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
        }
    }
    return covered == g.vertex_mask();
}

WeightedMatching k_matching_from_factor(const Graph& g, const FactorDecomposition& f, int k) {
    if (k < 2 || k % 2) throw std::invalid_argument("k must be even and >= 2");
    if (!validate_factor(g, f)) throw std::invalid_argument("factor does not validate against G");
    auto edges = g.edges();
    std::vector<int> weights(edges.size(), 0);
    auto index_of = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        return static_cast<std::size_t>(it - edges.begin());
    };
    for (auto [u, v] : f.k2_edges) weights[index_of(u, v)] = k;
    for (const auto& cycle : f.cycles)
        for (std::size_t i = 0; i < cycle.size(); ++i)
            weights[index_of(cycle[i], cycle[(i + 1) % cycle.size()])] = k / 2;
    return make_matching(g, k, edges, weights);
}

RationalMatching fractional_from_k_matching(const WeightedMatching& m) {
    for (int v = 0; v < m.n; ++v)
        if (m.vertex_load[v] != m.k)
            throw std::invalid_argument("matching is not a perfect k-matching");
    RationalMatching r;
    r.denominator = m.k;
    r.edges = m.edges;
    r.numerators = m.weights;
    return r;
}

bool has_factor_search(const Graph& g, bool odd_cycles_only) {
    std::unordered_set<std::uint64_t> dead;
    const std::uint64_t all = g.vertex_mask();

    auto rec = [&](auto&& self, std::uint64_t used) -> bool {
        if (used == all) return true;
        if (dead.count(used)) return false;
        int v = __builtin_ctzll(~used & all);
        std::uint64_t vbit = std::uint64_t{1} << v;
        // K_2 through v.
        std::uint64_t nb = g.adj[v] & ~used;
        while (nb) {
            int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (self(self, used | vbit | (std::uint64_t{1} << u))) return true;
        }
        // Cycle through v: extend simple paths from v, close when back-edge
        // to v exists and parity is acceptable.
        auto grow = [&](auto&& gself, std::uint64_t path, int last, int len) -> bool {
            if (len >= 3 && g.has_edge(last, v) && (!odd_cycles_only || len % 2 == 1))
                if (self(self, used | path)) return true;
            std::uint64_t ext = g.adj[last] & ~used & ~path;
            while (ext) {
                int w = __builtin_ctzll(ext);
                ext &= ext - 1;
                if (gself(gself, path | (std::uint64_t{1} << w), w, len + 1)) return true;
            }
            return false;
        };
        std::uint64_t starts = g.adj[v] & ~used;
        while (starts) {
            int w = __builtin_ctzll(starts);
            starts &= starts - 1;
            // Canonical direction: only start paths at the smaller neighbor.
            if (grow(grow, vbit | (std::uint64_t{1} << w), w, 2)) return true;
        }
        dead.insert(used);
        return false;
    };
    return rec(rec, 0);
}

bool verify_theorem9_equivalence(const Graph& g, int k_even) {
    if (k_even < 2 || k_even % 2) throw std::invalid_argument("k must be even and >= 2");
    bool p_any_cycle = has_factor_search(g, false);
    bool p_odd_cycle = has_factor_search(g, true);
    HalfIntegralMatching frac = fractional_matching(g);
    bool p_fractional = frac.total_doubled == g.n;
    bool p_perfect_k = has_perfect_k_matching(g, k_even);
    if (p_any_cycle != p_odd_cycle || p_odd_cycle != p_fractional ||
        p_fractional != p_perfect_k)
        return false;
    if (!p_fractional) return true;
    // Positive case: run the constructive pipeline and validate each step.
    FactorDecomposition f = factor_from_fractional(g, frac);
    if (!validate_factor(g, f)) return false;
    WeightedMatching w = k_matching_from_factor(g, f, k_even);
    for (int v = 0; v < g.n; ++v)
        if (w.vertex_load[v] != k_even) return false;
    RationalMatching r = fractional_from_k_matching(w);
    std::array<int, kMaxOrder> load{};
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        load[r.edges[i].first] += r.numerators[i];
        load[r.edges[i].second] += r.numerators[i];
    }
    for (int v = 0; v < g.n; ++v)
        if (load[v] != r.denominator) return false;
    return true;
}

std::optional<WeightedMatching> kd_critical_witness(const Graph& g, int v, int k, int d) {
    if (k < 1 || d < 1 || d > k) throw std::invalid_argument("need 1 <= d <= k");
    if (v < 0 || v >= g.n) throw std::out_of_range("vertex out of range");
    if (g.n > 10) throw std::invalid_argument("kd_critical_witness capped at n <= 10");
    // Loads sum to kn - d and must be even.
    if ((static_cast<long long>(k) * g.n - d) % 2) return std::nullopt;
    std::array<int, kMaxOrder> target{};
    for (int u = 0; u < g.n; ++u) target[u] = k;
    target[v] = k - d;
    EdgeSearch s(g, k);
    std::array<int, kMaxOrder> load{};
    std::vector<int> weights(s.edges.size(), 0);
    if (!exact_load_dfs(s, 0, load, target, weights)) return std::nullopt;
    return make_matching(g, k, s.edges, weights);
}

}  // namespace gfc
