#include "gfc/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gfc {

Graph ComplementState::materialize() const {
    Graph g = complete_graph(n);
    for (auto [u, v] : cedges) {
        g.adj[static_cast<std::size_t>(u)] &= ~(1ULL << v);
        g.adj[static_cast<std::size_t>(v)] &= ~(1ULL << u);
    }
    g.m -= static_cast<int>(cedges.size());
    return g;
}

void for_each_connected_labeled(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 7) throw std::invalid_argument("for_each_connected_labeled: need 1 <= n <= 7");
    const int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slot(static_cast<std::size_t>(total));
    {
        int idx = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) slot[static_cast<std::size_t>(idx++)] = {u, v};
    }
    std::vector<std::pair<int, int>> edges;
    for (std::uint32_t mask = 0; mask < (1U << total); ++mask) {
        edges.clear();
        for (int e = 0; e < total; ++e)
            if (mask & (1U << e)) edges.push_back(slot[static_cast<std::size_t>(e)]);
        Graph g = from_edge_list(n, edges);
        if (is_connected(g)) visit(g);
    }
}

namespace {

// Bits of column v against already-placed positions, in row order.
void append_column(std::string& code, const Graph& g, const std::vector<int>& placed, int v) {
    for (int u : placed) code.push_back(g.has_edge(u, v) ? '1' : '0');
}

void canon_dfs(const Graph& g, std::vector<int>& placed, std::uint64_t used, std::string& cur,
               std::string& best, bool& have_best) {
    if (static_cast<int>(placed.size()) == g.n) {
        if (!have_best || cur < best) {
            best = cur;
            have_best = true;
        }
        return;
    }
    for (int v = 0; v < g.n; ++v) {
        if (used & (1ULL << v)) continue;
        std::size_t mark = cur.size();
        append_column(cur, g, placed, v);
        if (!have_best || std::string_view(cur).substr(0, cur.size()) <=
                              std::string_view(best).substr(0, cur.size())) {
            placed.push_back(v);
            canon_dfs(g, placed, used | (1ULL << v), cur, best, have_best);
            placed.pop_back();
        }
        cur.resize(mark);
    }
}

}  // namespace

std::string canonical_code(const Graph& g) {
    if (g.n > 10) throw std::invalid_argument("canonical_code: n <= 10 required");
    std::vector<int> placed;
    std::string cur, best;
    bool have_best = false;
    cur.reserve(static_cast<std::size_t>(g.n * (g.n - 1) / 2));
    canon_dfs(g, placed, 0, cur, best, have_best);
    std::string out;
    out.push_back(static_cast<char>('0' + g.n));
    out += best;
    return out;
}

int spectral_prefilter(int n, double rho_threshold) {
    if (rho_threshold <= 0) return 0;
    double need = (rho_threshold * rho_threshold + n - 1) / 2.0;
    int m = static_cast<int>(std::ceil(need - 1e-9));
    return std::max(m, 0);
}

EnumerationStats enumerate(const EnumerationTask& task,
                           const std::function<void(const Graph&)>& visit) {
    EnumerationStats stats;
    std::set<std::string> seen;
    auto emit = [&](const Graph& g) {
        if (task.dedup) {
            if (!seen.insert(canonical_code(g)).second) return;
        }
        ++stats.yielded;
        visit(g);
    };
    switch (task.mode) {
        case EnumerationMode::AllLabeledConnected:
            for_each_connected_labeled(task.n, emit);
            break;
        case EnumerationMode::DenseByComplement:
        case EnumerationMode::SpectralFiltered: {
            int budget = task.max_complement_edges;
            if (task.mode == EnumerationMode::SpectralFiltered) {
                int m_min = spectral_prefilter(task.n, task.rho_threshold);
                budget = task.n * (task.n - 1) / 2 - m_min;
            }
            if (budget < 0) break;
            for_each_dense_by_complement(task.n, budget, [&](const ComplementState& st) {
                Graph g = st.materialize();
                if (!is_connected(g)) {
                    ++stats.skipped_disconnected;
                    return;
                }
                emit(g);
            });
            break;
        }
    }
    return stats;
}

}  // namespace gfc
