#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "gfc/graph.hpp"

namespace gfc {

using BigInt = boost::multiprecision::cpp_int;

/// Dyadic rational num / 2^shift; the exact evaluation points used by the
/// bisection and Sturm routines.
struct Dyadic {
    BigInt num;
    unsigned shift = 0;
    double to_double() const;
};

/// Integer polynomial, coefficients low -> high degree.
using IntPoly = std::vector<BigInt>;

enum class SpectralMethod { PowerIteration, QuotientExact, CharacteristicPoly };

struct SpectralResult {
    double rho = 0.0;
    SpectralMethod method = SpectralMethod::PowerIteration;
    double error_bound = 0.0;
    int iterations = 0;
};

/// Adjacency spectral radius by power iteration on A + I (the shift keeps
/// bipartite graphs convergent), certified by the Collatz-Wielandt bracket.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10);

/// rho(G) <= sqrt(2m - n + 1) for connected G.
double hong_bound(const Graph& g);

/// Exact characteristic polynomial of A(G) (Faddeev-LeVerrier).
IntPoly char_poly(const Graph& g);

/// Characteristic polynomial of the quotient matrix of the equitable
/// partition of K_s v (K_a + b K_1); its largest root is the spectral radius
/// of that graph.
IntPoly quotient_poly(int s, int a, int b);

int sign_at(const IntPoly& p, const Dyadic& t);

/// Number of distinct real roots of p in (t, +inf), by Sturm's theorem.
int count_roots_above(const IntPoly& p, const Dyadic& t);

IntPoly poly_gcd(IntPoly a, IntPoly b);

/// Certified isolating interval (lo, hi] for the largest real root, with
/// exactly one distinct root inside and none above hi.
struct RootBracket {
    IntPoly poly;
    Dyadic lo, hi;
    double approx() const { return (lo.to_double() + hi.to_double()) / 2; }
};

/// Largest real root of p bracketed to width span/2^bits. p must have a
/// positive real root.
RootBracket largest_root(const IntPoly& p, int bits = 64);

/// Spectral radius of K_s v (K_a + b K_1) via the quotient cubic.
double quotient_radius_join_family(int s, int a, int b);
RootBracket quotient_radius_bracket(int s, int a, int b, int bits = 64);

/// Exact comparison rho(G) >= (largest root bracketed by thr). Escalates
/// through gcd / Sturm refinement, so ties are resolved exactly.
bool radius_at_least(const Graph& g, const RootBracket& thr);

/// Number of eigenvalues of A(G) strictly above theta via LDL^T inertia.
/// Returns -1 when a pivot is too small to trust (caller must escalate).
int ldl_count_above(const Graph& g, double theta);

/// Smallest m such that a connected graph with m edges can have
/// rho >= lo per the Hong bound (exact arithmetic on the dyadic bound).
int min_edges_for_radius(int n, const Dyadic& lo);

}  // namespace gfc
