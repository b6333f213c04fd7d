#include "gfc/criticality.hpp"

#include <stdexcept>

#include "gfc/barriers.hpp"
#include "gfc/matchings.hpp"

namespace gfc {

namespace {

// Parity obstructions carry the empty mask as witness: there is no violating
// subset, the order alone rules the property out.
CriticalityVerdict parity_failure(CriticalProperty p, int k, int d) {
    CriticalityVerdict v;
    v.property = p;
    v.k = k;
    v.d = d;
    v.holds = false;
    v.witness = std::uint64_t{0};
    v.method = VerdictMethod::Structural;
    return v;
}

CriticalityVerdict from_scan(CriticalProperty p, int k, int d,
                             std::optional<std::uint64_t> violation) {
    CriticalityVerdict v;
    v.property = p;
    v.k = k;
    v.d = d;
    v.holds = !violation.has_value();
    v.witness = violation;
    v.method = VerdictMethod::Structural;
    return v;
}

}  // namespace

CriticalityVerdict classify_gfc(const Graph& g, int k, bool fast) {
    if (k < 2) throw std::invalid_argument("classification needs k >= 2");
    if (g.n <= 2) {
        CriticalityVerdict v = barrier_uniqueness_check(g, k);
        v.property = CriticalProperty::GFC;
        if (g.n % 2 == 0) v.holds = false;
        if (!v.holds && !v.witness) v.witness = std::uint64_t{0};
        return v;
    }
    if (g.n % 2 == 0) return parity_failure(CriticalProperty::GFC, k, 0);
    auto violation = (k % 2) ? find_violating_subset(g, k, 0, fast)
                             : find_violating_subset(g, 2, 0, fast);
    return from_scan(CriticalProperty::GFC, k, 0, violation);
}

CriticalityVerdict classify_gbc(const Graph& g, int k, bool fast) {
    if (k < 2) throw std::invalid_argument("classification needs k >= 2");
    if (g.n <= 2) {
        CriticalityVerdict v = barrier_uniqueness_check(g, k);
        v.property = CriticalProperty::GBC;
        if (g.n % 2) v.holds = false;
        if (!v.holds && !v.witness) v.witness = std::uint64_t{0};
        return v;
    }
    if (g.n % 2) return parity_failure(CriticalProperty::GBC, k, 0);
    auto violation = (k % 2) ? find_violating_subset(g, k, 1, fast)
                             : find_violating_subset(g, 2, 0, fast);
    return from_scan(CriticalProperty::GBC, k, 0, violation);
}

CriticalityVerdict classify_kd(const Graph& g, int k, int d, bool fast) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("k-d classification needs odd k >= 3");
    if (d < 1 || d > k) throw std::invalid_argument("need 1 <= d <= k");
    if ((g.n - d) % 2 != 0) throw std::invalid_argument("n and d must have the same parity");
    return from_scan(CriticalProperty::KD, k, d, find_violating_subset(g, k, d - 1, fast));
}

CriticalityVerdict gfc_by_definition(const Graph& g, int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("definitional GFC needs odd k >= 3");
    if (g.n % 2 == 0) return parity_failure(CriticalProperty::GFC, k, 0);
    CriticalityVerdict v = kd_by_definition(g, k, 1);
    v.property = CriticalProperty::GFC;
    v.d = 0;
    return v;
}

CriticalityVerdict kd_by_definition(const Graph& g, int k, int d) {
    CriticalityVerdict out;
    out.property = CriticalProperty::KD;
    out.k = k;
    out.d = d;
    out.method = VerdictMethod::Definitional;
    out.holds = true;
    for (int v = 0; v < g.n; ++v) {
        if (!kd_critical_witness(g, v, k, d)) {
            out.holds = false;
            out.witness = std::uint64_t{1} << v;
            break;
        }
    }
    return out;
}

CriticalityVerdict barrier_uniqueness_check(const Graph& g, int k) {
    BarrierReport r = deficiency_k(g, k);
    CriticalityVerdict v;
    v.property = (g.n % 2) ? CriticalProperty::GFC : CriticalProperty::GBC;
    v.k = k;
    v.method = VerdictMethod::BarrierUniqueness;
    v.holds = r.empty_is_unique;
    if (!v.holds) {
        for (std::uint64_t b : r.barriers)
            if (b != 0) {
                v.witness = b;
                break;
            }
        if (!v.witness) v.witness = std::uint64_t{0};
    }
    return v;
}

CriticalityVerdict even_k_by_deletion(const Graph& g, int k) {
    if (k < 2 || k % 2) throw std::invalid_argument("deletion oracle needs even k >= 2");
    if (g.n < 3 || !is_connected(g))
        throw std::invalid_argument("deletion oracle needs a connected graph of order >= 3");
    CriticalityVerdict out;
    out.property = (g.n % 2) ? CriticalProperty::GFC : CriticalProperty::GBC;
    out.k = k;
    out.method = VerdictMethod::Definitional;
    out.holds = true;
    for (int v = 0; v < g.n; ++v) {
        Graph h = delete_vertex(g, v);
        bool ok;
        if (h.n <= 12) {
            // Search-based check keeps this oracle independent of the
            // structural subset test.
            ok = k_matching_number(h, k).first == k * h.n / 2;
        } else {
            ok = has_perfect_k_matching(h, k);
        }
        if (!ok) {
            out.holds = false;
            out.witness = std::uint64_t{1} << v;
            break;
        }
    }
    return out;
}

}  // namespace gfc
