#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfc/extremal.hpp"
#include "gfc/graph.hpp"

namespace gfc {

inline constexpr const char* kToolVersion = "1.0.0";

enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, T9, C10, C11 };

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

struct VerificationReport {
    TheoremId theorem_id = TheoremId::T1;
    int n = 0;
    int k = 0;
    std::optional<int> d;
    double threshold = 0.0;
    long long domain_size = 0;
    // Exception graphs up to isomorphism, as canonical codes, sorted.
    std::vector<std::string> exceptions_found;
    std::vector<std::string> expected_exceptions;
    bool passed = false;
    double runtime_s = 0.0;

    bool operator==(const VerificationReport&) const = default;
};

std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);

/// Per-order case split of a size theorem: edge threshold plus the stated
/// exception families.
struct SizeRegime {
    long long threshold = 0;
    std::vector<FamilySpec> exceptions;
};
SizeRegime size_regime(TheoremId id, int n, int k, std::optional<int> d);

/// Per-order case split of a spectral theorem: the family whose radius is the
/// threshold plus the stated exceptions.
struct SpectralRegime {
    FamilySpec threshold_family{FamilyKind::Complete, 1, 0, 0};
    std::vector<FamilySpec> exceptions;
};
SpectralRegime spectral_regime(TheoremId id, int n, int k, std::optional<int> d);

/// Exhaustively checks a size theorem (T1, T3, T5, T7) at order n: every
/// connected graph at or above the edge threshold has the property except
/// exactly the stated exceptions, which are also re-verified to lie in the
/// domain and fail.
VerificationReport verify_size_theorem(TheoremId id, int n, int k,
                                       std::optional<int> d = std::nullopt, int workers = 1);

/// Exhaustively checks a spectral theorem (T2, T4, T6, T8) at order n.
/// Domain membership rho(G) >= rho* is certified: inertia tests at the exact
/// threshold bracket, escalating to integer characteristic-polynomial
/// comparison for borderline graphs.
VerificationReport verify_spectral_theorem(TheoremId id, int n, int k,
                                           std::optional<int> d = std::nullopt, int workers = 1);

/// Four-way factor/matching equivalence over all labeled connected graphs of
/// order <= n_max.
VerificationReport verify_theorem9(int n_max, int k_even);

/// Per-vertex factor claims after one vertex deletion (C10 size domain, C11
/// spectral domain), including the odd-cycle-factor and fractional-perfect-
/// matching substitutions.
VerificationReport verify_corollary_factor_deletion(TheoremId id, int n, int workers = 1);

}  // namespace gfc
