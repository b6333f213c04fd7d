#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gfc/graph.hpp"

namespace gfc {

/// Complement-edge subset during dense enumeration. Degrees of the complement
/// are maintained incrementally so callers can reject a candidate in O(1)
/// without materializing the graph.
struct ComplementState {
    int n = 0;
    std::array<int, kMaxOrder> cdeg{};
    std::vector<std::pair<int, int>> cedges;

    /// K_n minus the chosen complement edges.
    Graph materialize() const;
};

/// Visits every subset of at most max_cedges complement edges exactly once in
/// deterministic lexicographic order, i.e. every labeled graph on n vertices
/// with at least C(n,2) - max_cedges edges. The visitor receives the mutable-
/// per-call but caller-read-only state; graphs are only built on demand.
/// Workers partition the space by the first chosen edge index (the empty
/// subset belongs to worker 0).
template <class Visitor>
void for_each_dense_by_complement(int n, int max_cedges, Visitor&& visit, int worker = 0,
                                  int num_workers = 1) {
    const int total = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slot(static_cast<std::size_t>(total));
    {
        int idx = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) slot[static_cast<std::size_t>(idx++)] = {u, v};
    }
    ComplementState st;
    st.n = n;
    st.cedges.reserve(static_cast<std::size_t>(max_cedges));
    auto expand = [&](auto&& self, int next_slot) -> void {
        if (static_cast<int>(st.cedges.size()) == max_cedges) return;
        const bool at_root = st.cedges.empty();
        for (int e = next_slot; e < total; ++e) {
            if (at_root && e % num_workers != worker) continue;
            auto [u, v] = slot[static_cast<std::size_t>(e)];
            st.cedges.push_back({u, v});
            ++st.cdeg[static_cast<std::size_t>(u)];
            ++st.cdeg[static_cast<std::size_t>(v)];
            visit(const_cast<const ComplementState&>(st));
            self(self, e + 1);
            --st.cdeg[static_cast<std::size_t>(u)];
            --st.cdeg[static_cast<std::size_t>(v)];
            st.cedges.pop_back();
        }
    };
    if (worker == 0) visit(const_cast<const ComplementState&>(st));
    expand(expand, 0);
}

/// All labeled connected graphs on n <= 7 vertices, ascending edge-mask order.
void for_each_connected_labeled(int n, const std::function<void(const Graph&)>& visit);

/// Isomorphism-invariant code: order byte followed by the lexicographically
/// minimal upper-triangle bit string over all vertex orderings. n <= 10.
std::string canonical_code(const Graph& g);

/// Least m with sqrt(2m - n + 1) >= rho_threshold (Hong-bound prefilter).
int spectral_prefilter(int n, double rho_threshold);

enum class EnumerationMode { AllLabeledConnected, DenseByComplement, SpectralFiltered };

struct EnumerationTask {
    int n = 0;
    EnumerationMode mode = EnumerationMode::AllLabeledConnected;
    int max_complement_edges = 0;
    double rho_threshold = 0.0;
    bool dedup = false;
};

struct EnumerationStats {
    long long yielded = 0;
    long long skipped_disconnected = 0;
};

/// Streams qualifying connected graphs once each (or once per isomorphism
/// class when dedup is set) in deterministic order.
EnumerationStats enumerate(const EnumerationTask& task,
                           const std::function<void(const Graph&)>& visit);

}  // namespace gfc
