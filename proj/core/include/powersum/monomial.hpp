#pragma once

#include "powersum/powersum.hpp"
#include "powersum/types.hpp"

namespace powersum {

/// Monic polynomial z^n + a_{n-1} z^{n-1} + .. + a_1 z + a_0. a holds the
/// n non-leading coefficients ascending (a[j] multiplies z^j); the leading
/// 1 is implicit.
struct MonicPolynomial {
    ComplexList a;

    int n() const { return static_cast<int>(a.size()); }
};

/// The n shift points of the representation f(z) = (1/n) sum_i (z - z_i)^n.
struct PowerNodeSet {
    ComplexList nodes;
};

/// Power sums the nodes must satisfy so that (1/n) sum (z - z_i)^n expands
/// to f: b_j = (-1)^j * n * a_{n-j} / binom(n, j). Exposed for the bound
/// computation and tests.
PowerSumTarget node_target(const MonicPolynomial& f);

/// Computes the representation nodes by solving the induced power-sum
/// system. The node multiset is canonically sorted and unique.
PowerNodeSet decompose(const MonicPolynomial& f, double tol = 1e-12, int max_iter = 200);

/// Expands (1/n) sum_i (z - nodes_i)^n back into a monic polynomial: the
/// coefficient of z^{n-j} is binom(n, j) * (-1)^j * s_j(nodes) / n.
MonicPolynomial reconstruct(const PowerNodeSet& nodes);

/// Certificate for the node bound max |z_i| <= C_n * max_j |c_j|^{1/j},
/// where c_j = n * a_{n-j} / binom(n, j).
BoundCertificate decompose_bound(const MonicPolynomial& f);

/// Explicit normalization helper for general polynomials: divides by the
/// leading coefficient. decompose itself accepts only monic input, so the
/// rescaling is always a visible step in calling code.
MonicPolynomial monic_from_general(const PolynomialCoefficients& p);

}  // namespace powersum
