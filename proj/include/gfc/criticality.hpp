#pragma once

#include <cstdint>
#include <optional>

#include "gfc/graph.hpp"

namespace gfc {

enum class CriticalProperty { GFC, GBC, KD };
enum class VerdictMethod { Structural, Definitional, BarrierUniqueness };

struct CriticalityVerdict {
    CriticalProperty property = CriticalProperty::GFC;
    int k = 0;
    int d = 0;  // meaningful for KD only
    bool holds = false;
    // Violating subset (structural / barrier path) or failing vertex mask
    // (definitional path) when holds is false.
    std::optional<std::uint64_t> witness;
    VerdictMethod method = VerdictMethod::Structural;
};

/// Structural classification via the characterization inequalities. `fast`
/// enables the sparse-complement candidate family used by the harness.
CriticalityVerdict classify_gfc(const Graph& g, int k, bool fast = false);
CriticalityVerdict classify_gbc(const Graph& g, int k, bool fast = false);
CriticalityVerdict classify_kd(const Graph& g, int k, int d, bool fast = false);

/// Definitional oracle for odd k: a k-matching with load k-1 at v and k
/// elsewhere must exist for every v.
CriticalityVerdict gfc_by_definition(const Graph& g, int k);

/// Definitional oracle for the k-d property: witness search at every vertex.
CriticalityVerdict kd_by_definition(const Graph& g, int k, int d);

/// Barrier-definition check: the empty set is the unique k-barrier.
CriticalityVerdict barrier_uniqueness_check(const Graph& g, int k);

/// Even-k oracle: G-v has a perfect k-matching for every v.
CriticalityVerdict even_k_by_deletion(const Graph& g, int k);

}  // namespace gfc
