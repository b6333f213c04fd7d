#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gfc/graph.hpp"

namespace gfc {

enum class FamilyKind { JoinCliquePlusIsolated, SplitLike, Complete, Star };

/// Named graph family. JoinCliquePlusIsolated(s,a,b) is K_s v (K_a + b K_1);
/// SplitLike(s,i) is K_s v i K_1; Star(n) is K_{1,n-1}.
struct FamilySpec {
    FamilyKind kind;
    int s = 0;
    int a = 0;
    int b = 0;

    static FamilySpec join_family(int s, int a, int b);
    static FamilySpec split_like(int s, int i);
    static FamilySpec complete(int n);
    static FamilySpec star(int n);

    int order() const;
    std::string to_dsl() const;
};

Graph build(const FamilySpec& spec);

/// Parses "K1 v (K6 + 1*K1)", "K4 v 4*K1", "K7", "K1,5".
FamilySpec parse_family(const std::string& text);

enum class EdgeFormulaVariant { OddCase, EvenCase };

/// e(K_s v (K_{n-2s} + s K_1)) (odd case) or e(K_s v (K_{n-2s-1} + (s+1) K_1))
/// (even case), exact. The binomial sum is the source of truth and the whole-
/// graph quadratic closed form is asserted against it.
/// Domain: 1 <= s <= (n-3)/2 (odd) or 1 <= s <= (n-4)/2 (even) unless
/// allow_outside_domain.
long long edge_count_formula(int s, int n, EdgeFormulaVariant variant,
                             bool allow_outside_domain = false);

/// Edge counts of the competing exception graphs at order n, sorted
/// descending: K_1 v (K_{n-2} + K_1) versus the parity-appropriate split
/// graph. The gap is checked against (n-3)(n-5)/8 resp. (n-2)(n-8)/8.
std::vector<std::pair<FamilySpec, long long>> compare_exceptions(int n);

/// Strict edge-count comparison e(K_s v (K_{n_1}+...+K_{n_t})) <
/// e(K_s v (K_{n-s-p(t-1)} + (t-1) K_p)); hypothesis violations throw.
bool lemma4_check(int s, const std::vector<int>& parts, int p);

}  // namespace gfc
