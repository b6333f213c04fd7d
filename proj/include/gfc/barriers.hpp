#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gfc/graph.hpp"

namespace gfc {

/// Result of a k-deficiency search: the maximum of the k-Berge-Tutte value
/// over all vertex subsets, together with the maximizing subsets (barriers).
struct BarrierReport {
    int k = 0;
    int deficiency = 0;
    std::vector<std::uint64_t> barriers;  // all maximizers when n <= 16, else one witness
    long long barrier_count = 0;
    bool empty_is_unique = false;
};

/// k.i(G-S) - k|S| for even k; odd(G-S) + k.i(G-S) - k|S| for odd k.
int subset_value(const Graph& g, std::uint64_t s, int k);

/// Exact deficiency by enumeration of all 2^n subsets (n <= 24), or over the
/// provably complete pruned candidate family when `pruned` is set and the
/// complement is sparse enough (falls back to brute force otherwise).
BarrierReport deficiency_k(const Graph& g, int k, bool pruned = false);

// Structural inequality scans. Each returns a nonempty violating subset
// (smallest by popcount, then by mask value) or nullopt when the inequality
// holds for every nonempty S.
std::optional<std::uint64_t> violates_gfc_inequality(const Graph& g, int k);
std::optional<std::uint64_t> violates_gbc_inequality(const Graph& g, int k);
std::optional<std::uint64_t> violates_kd_inequality(const Graph& g, int k, int d);
std::optional<std::uint64_t> violates_even_k_inequality(const Graph& g);

/// Shared scan: nonempty S with odd(G-S) + k.i(G-S) >= k|S| - slack for odd
/// k, or i(G-S) >= |S| when k is even (slack ignored then). `fast` enables
/// the sparse-complement candidate family; results are identical either way.
std::optional<std::uint64_t> find_violating_subset(const Graph& g, int k, int slack,
                                                   bool fast = false);

}  // namespace gfc
