#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gfc/graph.hpp"

namespace gfc {

/// Integer edge weighting f : E -> {0..k} with all vertex loads <= k.
struct WeightedMatching {
    int n = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, canonical order
    std::vector<int> weights;                // parallel to edges
    std::array<int, kMaxOrder> vertex_load{};
    int total = 0;
};

/// Optimal fractional matching in half-integral form: weights are stored
/// doubled so everything stays in integers ({0,1,2} per edge, loads <= 2).
struct HalfIntegralMatching {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> doubled_weights;
    int total_doubled = 0;
};

/// Perfect fractional matching written as exact rationals num/den.
struct RationalMatching {
    int denominator = 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> numerators;
};

/// Spanning subgraph whose components are single edges and cycles.
struct FactorDecomposition {
    std::vector<std::pair<int, int>> k2_edges;
    std::vector<std::vector<int>> cycles;
    bool odd_cycles_only = false;
};

/// Exact mu_k(G) with a witness. Branch-and-bound over edges; n <= 12.
std::pair<int, WeightedMatching> k_matching_number(const Graph& g, int k);

/// Structural test (subset inequalities), valid for any k >= 1.
bool has_perfect_k_matching(const Graph& g, int k);

/// Optimal fractional matching via maximum matching in the bipartite double
/// cover; constructively half-integral.
HalfIntegralMatching fractional_matching(const Graph& g);
bool has_fractional_perfect_matching(const Graph& g);

/// Converts a fractional perfect matching into a {K_2, odd cycle}-factor.
/// Even half-weight cycles are rewritten as alternating K_2 edges, starting
/// at each cycle's lowest-index vertex.
FactorDecomposition factor_from_fractional(const Graph& g, const HalfIntegralMatching& m);

/// Perfect k-matching (even k) from a factor: cycle edges get k/2, K_2
/// edges get k.
WeightedMatching k_matching_from_factor(const Graph& g, const FactorDecomposition& f, int k);

/// Perfect fractional matching f(e)/k from a perfect k-matching.
RationalMatching fractional_from_k_matching(const WeightedMatching& m);

/// Checks partition, edge membership and (optionally) cycle parity.
bool validate_factor(const Graph& g, const FactorDecomposition& f);

/// Direct backtracking search for a {K_2, cycle}-factor, independent of the
/// fractional-matching pipeline. Serves as the oracle for the factor
/// predicates.
bool has_factor_search(const Graph& g, bool odd_cycles_only);

/// Evaluates the four equivalent predicates by four independent routes and
/// returns true iff they all agree (constructions validated when positive).
bool verify_theorem9_equivalence(const Graph& g, int k_even);

/// k-matching with load exactly k-d at v and k everywhere else, or nullopt.
std::optional<WeightedMatching> kd_critical_witness(const Graph& g, int v, int k, int d);

}  // namespace gfc
