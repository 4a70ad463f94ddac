#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "powersum/types.hpp"

namespace powersum {

/// Dense univariate polynomial, ascending powers: coeffs[i] multiplies z^i.
/// The leading coefficient (last entry) must be nonzero for the operations
/// below; degree() is coeffs.size() - 1.
struct PolynomialCoefficients {
    ComplexList coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Horner evaluation.
Complex evaluate(const PolynomialCoefficients& p, Complex z);

/// A computed root multiset in canonical order, with the relative backward
/// error of each root: |p(z)| / sum_i |a_i| |z|^i. An exactly representable
/// root (for example a deflated zero) gets residual 0.
struct RootSet {
    ComplexList roots;
    std::vector<double> residuals;

    double max_residual() const;
};

/// Thrown when the iteration cannot certify every root to the requested
/// tolerance. Carries the best root set found so callers can inspect or
/// report it.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, RootSet best)
        : std::runtime_error(what), best_(std::move(best)) {}

    const RootSet& best() const { return best_; }

private:
    RootSet best_;
};

/// Cauchy's root bound 1 + max_i |a_i / a_n|; every root of p has modulus
/// at most this. Requires degree >= 1 and a nonzero leading coefficient.
double cauchy_bound(const PolynomialCoefficients& p);

/// Finds all degree() roots with multiplicity. Zero roots are deflated
/// exactly, degrees 1 and 2 use closed forms, higher degrees run a
/// simultaneous (Aberth) iteration from perturbed circular starting points.
/// Roots are accepted when every relative backward error is <= tol;
/// otherwise throws ConvergenceError with the best candidates.
RootSet find_roots(const PolynomialCoefficients& p, double tol = 1e-12, int max_iter = 200);

/// Expands prod_i (z - roots[i]) into ascending monic coefficients. The
/// roots are canonically sorted first, so any permutation of the same
/// multiset yields bitwise-identical output.
PolynomialCoefficients expand_from_roots(const ComplexList& roots);

/// An optimal pairing between two equal-size lists: pairing[i] gives the
/// index in the second list matched to element i of the first, and
/// max_distance is the largest matched Euclidean distance.
struct MatchResult {
    std::vector<int> pairing;
    double max_distance = 0.0;
};

/// Minimum-cost bipartite assignment between u and v under Euclidean
/// distance, computed with the O(n^3) shortest-augmenting-path method.
/// Requires |u| == |v|.
MatchResult match_multisets(const ComplexList& u, const ComplexList& v);

}  // namespace powersum
