#include "gfc/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace gfc {

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m);
    for (int u = 0; u < n; ++u) {
        std::uint64_t higher = adj[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + __builtin_ctzll(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("graph order must be in [1,64]");
    Graph g;
    g.n = n;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.adj[u] |= std::uint64_t{1} << v;
        g.adj[v] |= std::uint64_t{1} << u;
    }
    for (int v = 0; v < n; ++v) g.m += g.degree(v);
    g.m /= 2;
    return g;
}

Graph empty_graph(int n) { return from_edge_list(n, {}); }

Graph complete_graph(int n) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("graph order must be in [1,64]");
    Graph g;
    g.n = n;
    std::uint64_t all = g.vertex_mask();
    for (int v = 0; v < n; ++v) g.adj[v] = all & ~(std::uint64_t{1} << v);
    g.m = n * (n - 1) / 2;
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return from_edge_list(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return from_edge_list(n, e);
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return from_edge_list(n, e);
}

Graph join(const Graph& g1, const Graph& g2) {
    if (g1.n + g2.n > kMaxOrder) throw std::invalid_argument("join exceeds order 64");
    Graph g = disjoint_union(g1, g2);
    std::uint64_t left = (std::uint64_t{1} << g1.n) - 1;
    std::uint64_t right = g.vertex_mask() & ~left;
    for (int v = 0; v < g1.n; ++v) g.adj[v] |= right;
    for (int v = g1.n; v < g.n; ++v) g.adj[v] |= left;
    g.m += g1.n * g2.n;
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    if (g1.n + g2.n > kMaxOrder) throw std::invalid_argument("union exceeds order 64");
    Graph g;
    g.n = g1.n + g2.n;
    g.m = g1.m + g2.m;
    for (int v = 0; v < g1.n; ++v) g.adj[v] = g1.adj[v];
    for (int v = 0; v < g2.n; ++v) g.adj[g1.n + v] = g2.adj[v] << g1.n;
    return g;
}

Graph complement(const Graph& g) {
    Graph c;
    c.n = g.n;
    std::uint64_t all = g.vertex_mask();
    for (int v = 0; v < g.n; ++v)
        c.adj[v] = all & ~g.adj[v] & ~(std::uint64_t{1} << v);
    c.m = g.n * (g.n - 1) / 2 - g.m;
    return c;
}

InducedSubgraph delete_vertices(const Graph& g, std::uint64_t removed) {
    removed &= g.vertex_mask();
    InducedSubgraph out;
    out.new_index.fill(-1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if (!((removed >> v) & 1u)) out.new_index[v] = next++;
    out.graph.n = next;
    for (int v = 0; v < g.n; ++v) {
        if (out.new_index[v] < 0) continue;
        std::uint64_t nb = g.adj[v] & ~removed;
        while (nb) {
            int u = __builtin_ctzll(nb);
            nb &= nb - 1;
            out.graph.adj[out.new_index[v]] |= std::uint64_t{1} << out.new_index[u];
        }
    }
    for (int v = 0; v < out.graph.n; ++v) out.graph.m += out.graph.degree(v);
    out.graph.m /= 2;
    return out;
}

ComponentSummary component_summary_within(const Graph& g, std::uint64_t keep) {
    ComponentSummary s;
    keep &= g.vertex_mask();
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
            ++s.isolated;
        else if (order % 2 == 0)
            ++s.even_count;
        else
            ++s.odd_nontrivial;
        s.components.push_back(comp);
        todo &= ~comp;
    }
    return s;
}

ComponentSummary component_summary(const Graph& g) {
    return component_summary_within(g, g.vertex_mask());
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::uint64_t keep = g.vertex_mask();
    std::uint64_t comp = 1, frontier = 1;
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
    return comp == keep;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((g.n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((g.n & 0x3f) + 63));
    }
    int acc = 0, bits = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(const std::string& s) {
    std::size_t pos = 0;
    auto need = [&](std::size_t count) {
        if (s.size() < pos + count) throw std::invalid_argument("truncated graph6 string");
    };
    auto val = [&](char c) {
        if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 character");
        return c - 63;
    };
    need(1);
    int n;
    if (s[pos] == 126) {
        need(4);
        n = (val(s[pos + 1]) << 12) | (val(s[pos + 2]) << 6) | val(s[pos + 3]);
        pos += 4;
    } else {
        n = val(s[pos]);
        pos += 1;
    }
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("graph6 order out of supported range");
    Graph g;
    g.n = n;
    int acc = 0, bits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                need(1);
                acc = val(s[pos++]);
                bits = 6;
            }
            if ((acc >> (bits - 1)) & 1) {
                g.adj[row] |= std::uint64_t{1} << col;
                g.adj[col] |= std::uint64_t{1} << row;
                ++g.m;
            }
            --bits;
        }
    return g;
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge-list header must be \"n m\"");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("edge-list body does not match declared edge count");
    return from_edge_list(n, edges);
}

}  // namespace gfc
