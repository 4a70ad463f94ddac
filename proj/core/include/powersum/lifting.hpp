#pragma once

#include <stdexcept>
#include <vector>

#include "powersum/powersum.hpp"
#include "powersum/types.hpp"

namespace powersum {

/// Right-hand sides for the averaged power-sum system: with m points the
/// j-th equation reads (1/m) sum_k w_k^j = A_j^j.
struct LiftTarget {
    ComplexList A;

    int n() const { return static_cast<int>(A.size()); }
};

/// A constructed solution with m = n! points. points is a flat array; at
/// the step from level L to L+1 the input point k expands to the block
/// points[k*(L+1) + l], l = 0..L, so the layout is reproducible. shifts
/// holds the K chosen at each of the n-1 construction steps.
struct LiftedSolution {
    ComplexList points;
    ComplexList shifts;
    int level = 0;
};

/// Thrown when a size guard would be exceeded (the point count grows as
/// n!, so levels above the cap are refused rather than attempted).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Growth constants of the construction: values[k-1] = D_k with D_1 = 1 and
/// D_{k+1} = 1 + (1 + D_k^{k+1})^{1/(k+1)}. Evaluated in log form so the
/// table extends to n in the hundreds without overflow.
struct LiftBoundSequence {
    std::vector<double> values;
};

LiftBoundSequence lift_bound_sequence(int n);

/// One row of the growth-constant table: D_n, D_n/n and the increment
/// D_n - D_{n-1} (0 by convention on the first row).
struct LiftBoundRow {
    int n = 0;
    double value = 0.0;
    double ratio_to_n = 0.0;
    double increment = 0.0;
};

/// Tabulates the growth constants up to n_max (>= 2). From n = 2 on the
/// ratio column decreases monotonically toward 1.
std::vector<LiftBoundRow> lift_bound_asymptotics(int n_max);

/// Expands every point into next_level copies shifted by the next_level-th
/// roots of unity times K. Each construction level is one such step; it
/// preserves all equations of order < next_level for any K whatsoever,
/// which is exactly what makes the recursion work (and is tested with
/// random K).
ComplexList lift_step(const ComplexList& points, Complex K, int next_level);

/// Builds an n!-point solution level by level: starting from the single
/// point A_1, each step to level L+1 picks K as the principal (L+1)-th root
/// of A_{L+1}^{L+1} - (1/L!) sum z^{L+1} and applies lift_step. max_level
/// guards the factorial blow-up (default 10; hard ceiling 12).
LiftedSolution lift(const LiftTarget& t, int max_level = 10);

/// Residuals of the m-point system for j = 1..n (denominator
/// max(1, |A_j|^j)), plus the bound certificate with scale max|A_j| and
/// the level-n growth constant.
struct LiftVerification {
    std::vector<double> residuals;
    BoundCertificate certificate;
};

LiftVerification verify_lift(const LiftTarget& t, const LiftedSolution& sol);

}  // namespace powersum
