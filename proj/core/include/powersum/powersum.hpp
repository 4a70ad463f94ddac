#pragma once

#include <vector>

#include "powersum/rootfinding.hpp"
#include "powersum/types.hpp"

namespace powersum {

/// Prescribed power sums b_1..b_n: the system asks for points z_1..z_n
/// with sum_i z_i^j = b_j for every j = 1..n.
struct PowerSumTarget {
    ComplexList b;

    int n() const { return static_cast<int>(b.size()); }
};

/// Outcome of checking max |z_i| <= constant * scale with a relative slack.
/// ratio is observed_max / (constant * scale), defined as 0 when nothing was
/// observed (so the trivially satisfied case reads as maximal headroom).
struct BoundCertificate {
    double scale = 0.0;
    double constant = 0.0;
    double observed_max = 0.0;
    double ratio = 0.0;
    double slack = 0.0;
    bool holds = false;
};

/// Builds a certificate for observed <= constant * scale with the given
/// relative slack. The slack absorbs floating error when the underlying
/// inequality is exact mathematics.
BoundCertificate make_certificate(double scale, double constant, double observed,
                                  double slack = 1e-9);

/// 1 / sin(pi / (2n)): the growth constant tied to sums of polynomials with
/// zeros in a common disk. Requires n >= 1.
double tchakaloff_constant(int n);

/// Natural scale of a target: max_j |b_j|^{1/j}, with zero entries
/// contributing 0.
double target_scale(const PowerSumTarget& t);

/// Solves the power-sum system: converts b to elementary symmetric values,
/// forms the monic polynomial whose coefficient of z^{n-k} is (-1)^k
/// sigma_k, and returns its roots in canonical order. The solution is the
/// unique point multiset with the prescribed power sums.
///
/// n is capped at 24; conditioning of the conversion-plus-roots pipeline
/// degrades with n, so callers above 12 should inspect residuals.
RootSet solve_power_sum_system(const PowerSumTarget& t, double tol = 1e-12, int max_iter = 200);

/// Residuals |sum_i z_i^j - b_j| / max(1, |b_j|) for j = 1..n, accumulated
/// in extended precision. Requires |z| = n.
std::vector<double> verify_power_sums(const PowerSumTarget& t, const RootSet& z);

/// Certificate for the a-priori root bound max |z_i| <= C_n * M.
BoundCertificate bound_certificate(const PowerSumTarget& t, const RootSet& z);

}  // namespace powersum
