#include "gfc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gfc {

double Dyadic::to_double() const {
    return std::ldexp(num.convert_to<double>(), -static_cast<int>(shift));
}

namespace {

int deg(const IntPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(IntPoly& p) { p.resize(static_cast<std::size_t>(deg(p) + 1)); }

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    return d;
}

void divide_content(IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
}

// Pseudo-remainder of a by b, rescaled to a positive multiple of the true
// remainder so Sturm sign variations are preserved.
IntPoly signed_prem(IntPoly a, const IntPoly& b) {
    const int db = deg(b);
    const BigInt& lc = b[static_cast<std::size_t>(db)];
    const BigInt lc2 = lc * lc;
    int da = deg(a);
    while (da >= db) {
        BigInt factor = a[static_cast<std::size_t>(da)] * lc;
        for (int i = 0; i <= da; ++i) a[static_cast<std::size_t>(i)] *= lc2;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= factor * b[static_cast<std::size_t>(i)];
        da = deg(a);
    }
    trim(a);
    return a;
}

struct SturmChain {
    std::vector<IntPoly> seq;

    explicit SturmChain(IntPoly p) {
        trim(p);
        if (deg(p) < 0) throw std::invalid_argument("sturm: zero polynomial");
        divide_content(p);
        seq.push_back(p);
        if (deg(p) >= 1) {
            IntPoly d = derivative(p);
            divide_content(d);
            seq.push_back(std::move(d));
            while (deg(seq.back()) >= 1) {
                IntPoly r = signed_prem(seq[seq.size() - 2], seq.back());
                if (deg(r) < 0) break;
                for (auto& c : r) c = -c;
                divide_content(r);
                seq.push_back(std::move(r));
            }
        }
    }

    int variations_at(const Dyadic& t) const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign_at(p, t);
            if (s != 0) {
                if (prev != 0 && s != prev) ++var;
                prev = s;
            }
        }
        return var;
    }

    int variations_at_inf() const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            int d = deg(p);
            if (d < 0) continue;
            int s = p[static_cast<std::size_t>(d)] < 0 ? -1 : 1;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int count_above(const Dyadic& t) const { return variations_at(t) - variations_at_inf(); }
};

// Cauchy bound: all real roots lie in [-B, B].
BigInt root_bound(const IntPoly& p) {
    int d = deg(p);
    BigInt lc = boost::multiprecision::abs(p[static_cast<std::size_t>(d)]);
    BigInt mx = 0;
    for (int i = 0; i < d; ++i)
        mx = std::max(mx, BigInt(boost::multiprecision::abs(p[static_cast<std::size_t>(i)])));
    return 1 + mx / lc + 1;
}

}  // namespace

int sign_at(const IntPoly& p, const Dyadic& t) {
    int d = deg(p);
    if (d < 0) return 0;
    BigInt acc = 0;
    BigInt pw = 1;
    for (int i = d; i >= 0; --i) {
        acc = acc * t.num + p[static_cast<std::size_t>(i)] * pw;
        if (i > 0) pw <<= t.shift;
    }
    if (acc == 0) return 0;
    return acc < 0 ? -1 : 1;
}

int count_roots_above(const IntPoly& p, const Dyadic& t) {
    return SturmChain(p).count_above(t);
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    trim(a);
    trim(b);
    if (deg(a) < 0) return b;
    if (deg(b) < 0) return a;
    if (deg(a) < deg(b)) std::swap(a, b);
    while (deg(b) >= 0) {
        IntPoly r = signed_prem(a, b);
        divide_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    divide_content(a);
    if (a[static_cast<std::size_t>(deg(a))] < 0)
        for (auto& c : a) c = -c;
    return a;
}

RootBracket largest_root(const IntPoly& p, int bits) {
    RootBracket out;
    out.poly = p;
    trim(out.poly);
    if (deg(out.poly) < 1) throw std::invalid_argument("largest_root: constant polynomial");
    SturmChain chain(out.poly);
    BigInt bound = root_bound(out.poly);
    Dyadic lo{-bound, 0}, hi{bound, 0};
    if (chain.count_above(lo) == 0)
        throw std::invalid_argument("largest_root: no real root");
    int width_bits = 1;
    while ((BigInt(1) << width_bits) < 2 * bound) ++width_bits;
    const int iters = bits + width_bits;
    for (int it = 0; it < iters || chain.count_above(lo) != 1; ++it) {
        if (it > iters + 4096) throw std::runtime_error("largest_root: no convergence");
        lo.num <<= 1;
        hi.num <<= 1;
        ++lo.shift;
        ++hi.shift;
        Dyadic mid{(lo.num + hi.num) / 2, lo.shift};
        if (chain.count_above(mid) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

IntPoly quotient_poly(int s, int a, int b) {
    if (s < 1 || a < 0 || b < 0 || s + a + b < 2)
        throw std::invalid_argument("quotient_poly: need s >= 1 and order >= 2");
    BigInt S = s, A = a, B = b;
    IntPoly p(4);
    p[3] = 1;
    p[2] = -(S + A - 2);
    p[1] = (S - 1) * (A - 1) - A * S - S * B;
    p[0] = S * B * (A - 1);
    return p;
}

RootBracket quotient_radius_bracket(int s, int a, int b, int bits) {
    return largest_root(quotient_poly(s, a, b), bits);
}

double quotient_radius_join_family(int s, int a, int b) {
    return quotient_radius_bracket(s, a, b, 60).approx();
}

SpectralResult spectral_radius(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
    SpectralResult res;
    res.method = SpectralMethod::PowerIteration;
    if (g.n == 0) return res;
    if (!is_connected(g)) {
        // rho is the max over components; iterate each one.
        std::uint64_t seen = 0;
        for (int v = 0; v < g.n; ++v) {
            if (seen & (1ULL << v)) continue;
            std::uint64_t comp = 1ULL << v;
            for (;;) {
                std::uint64_t next = comp;
                for (int u = 0; u < g.n; ++u)
                    if (comp & (1ULL << u)) next |= g.adj[static_cast<std::size_t>(u)];
                if (next == comp) break;
                comp = next;
            }
            seen |= comp;
            SpectralResult sub = spectral_radius(delete_vertices(g, g.vertex_mask() & ~comp).graph, tol);
            res.iterations += sub.iterations;
            if (sub.rho > res.rho) {
                res.rho = sub.rho;
                res.error_bound = sub.error_bound;
            }
        }
        return res;
    }
    std::vector<double> x(static_cast<std::size_t>(g.n), 1.0);
    std::vector<double> y(static_cast<std::size_t>(g.n));
    const int max_iters = 500000;
    double lo = 0.0, hi = 0.0;
    for (int it = 1; it <= max_iters; ++it) {
        for (int i = 0; i < g.n; ++i) {
            double acc = x[static_cast<std::size_t>(i)];
            std::uint64_t row = g.adj[static_cast<std::size_t>(i)];
            while (row) {
                int j = std::countr_zero(row);
                row &= row - 1;
                acc += x[static_cast<std::size_t>(j)];
            }
            y[static_cast<std::size_t>(i)] = acc;
        }
        lo = y[0] / x[0];
        hi = lo;
        double ymax = 0.0;
        for (int i = 0; i < g.n; ++i) {
            double q = y[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(i)];
            lo = std::min(lo, q);
            hi = std::max(hi, q);
            ymax = std::max(ymax, y[static_cast<std::size_t>(i)]);
        }
        for (int i = 0; i < g.n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / ymax;
        res.iterations = it;
        if (hi - lo < tol) break;
    }
    res.rho = (lo + hi) / 2 - 1.0;
    res.error_bound = (hi - lo) / 2;
    return res;
}

double hong_bound(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("hong_bound: graph must be connected");
    return std::sqrt(2.0 * g.m - g.n + 1);
}

IntPoly char_poly(const Graph& g) {
    const int n = g.n;
    IntPoly p(static_cast<std::size_t>(n + 1));
    p[static_cast<std::size_t>(n)] = 1;
    if (n == 0) return p;
    std::vector<BigInt> M(static_cast<std::size_t>(n) * n, 0);
    std::vector<BigInt> next(M.size());
    BigInt c = 1;
    auto at = [n](std::vector<BigInt>& mat, int i, int j) -> BigInt& {
        return mat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    };
    for (int k = 1; k <= n; ++k) {
        // next = A * (M + c I)
        for (int i = 0; i < n; ++i) at(M, i, i) += c;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt acc = 0;
                std::uint64_t row = g.adj[static_cast<std::size_t>(i)];
                while (row) {
                    int l = std::countr_zero(row);
                    row &= row - 1;
                    acc += at(M, l, j);
                }
                at(next, i, j) = acc;
            }
        std::swap(M, next);
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += at(M, i, i);
        c = -tr / k;
        p[static_cast<std::size_t>(n - k)] = c;
    }
    return p;
}

bool radius_at_least(const Graph& g, const RootBracket& thr) {
    IntPoly p = char_poly(g);
    SturmChain chain_p(p);
    SturmChain chain_q(thr.poly);
    Dyadic lo = thr.lo, hi = thr.hi;
    if (chain_p.count_above(hi) >= 1) return true;
    if (chain_p.count_above(lo) == 0) return false;
    IntPoly shared = poly_gcd(p, thr.poly);
    if (deg(shared) >= 1) {
        SturmChain chain_s(shared);
        if (chain_s.count_above(lo) - chain_s.count_above(hi) >= 1) return true;
    }
    // No shared root in the bracket: shrink around the threshold root until
    // no root of p remains inside, then compare positions.
    for (int it = 0; it < 100000; ++it) {
        if (lo.shift != hi.shift) throw std::logic_error("radius_at_least: shift mismatch");
        lo.num <<= 1;
        hi.num <<= 1;
        ++lo.shift;
        ++hi.shift;
        Dyadic mid{(lo.num + hi.num) / 2, lo.shift};
        if (chain_q.count_above(mid) >= 1)
            lo = mid;
        else
            hi = mid;
        if (chain_p.count_above(lo) - chain_p.count_above(hi) == 0)
            return chain_p.count_above(hi) >= 1;
    }
    throw std::runtime_error("radius_at_least: bracket refinement did not separate roots");
}

int ldl_count_above(const Graph& g, double theta) {
    const int n = g.n;
    std::vector<double> b(static_cast<std::size_t>(n) * n, 0.0);
    auto at = [&](int i, int j) -> double& {
        return b[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < n; ++i) {
        at(i, i) = -theta;
        std::uint64_t row = g.adj[static_cast<std::size_t>(i)];
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            at(i, j) = 1.0;
        }
    }
    int positive = 0;
    for (int k = 0; k < n; ++k) {
        double piv = at(k, k);
        if (std::abs(piv) < 1e-7) return -1;
        if (piv > 0) ++positive;
        for (int i = k + 1; i < n; ++i) {
            double f = at(i, k) / piv;
            if (f == 0.0) continue;
            for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return positive;
}

int min_edges_for_radius(int n, const Dyadic& lo) {
    if (lo.num <= 0) return 0;
    BigInt rhs = lo.num * lo.num;
    int max_m = n * (n - 1) / 2;
    for (int m = 0; m <= max_m; ++m) {
        BigInt lhs = BigInt(2 * m - n + 1) << (2 * lo.shift);
        if (2 * m - n + 1 >= 0 && lhs >= rhs) return m;
    }
    return max_m + 1;
}

}  // namespace gfc
