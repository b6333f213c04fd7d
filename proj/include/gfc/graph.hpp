#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gfc {

constexpr int kMaxOrder = 64;

/// Simple undirected graph on at most 64 vertices, adjacency kept as one
/// 64-bit neighbor mask per vertex. Values are cheap to copy and never
/// mutated after construction.
struct Graph {
    int n = 0;
    int m = 0;
    std::array<std::uint64_t, kMaxOrder> adj{};

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    std::uint64_t vertex_mask() const {
        return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        if (n != other.n) return false;
        for (int v = 0; v < n; ++v)
            if (adj[v] != other.adj[v]) return false;
        return true;
    }
};

/// Component census of a graph: vertex sets plus the counts the deficiency
/// formula needs. "Nontrivial odd" means odd order and order >= 3; isolated
/// vertices are counted separately and never in odd_nontrivial.
struct ComponentSummary {
    std::vector<std::uint64_t> components;
    int odd_nontrivial = 0;
    int isolated = 0;
    int even_count = 0;
};

/// Induced subgraph together with the old->new vertex relabeling.
struct InducedSubgraph {
    Graph graph;
    std::array<int, kMaxOrder> new_index{};  // -1 for deleted vertices
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}, center is vertex 0

Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

InducedSubgraph delete_vertices(const Graph& g, std::uint64_t removed);
inline Graph delete_vertex(const Graph& g, int v) {
    return delete_vertices(g, std::uint64_t{1} << v).graph;
}

ComponentSummary component_summary(const Graph& g);
bool is_connected(const Graph& g);

/// Component census of g restricted to `keep`; avoids materializing the
/// induced subgraph in subset scans. Counts include only vertices in keep.
ComponentSummary component_summary_within(const Graph& g, std::uint64_t keep);

// graph6 format (bit-exact per the published format description).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Plain edge-list text: first line "n m", then one "u v" line per edge.
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(const std::string& text);

}  // namespace gfc
