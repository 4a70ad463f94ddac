#include "powersum/lifting.hpp"

#include <cmath>
#include <numbers>

#include "powersum/combinatorics.hpp"

namespace powersum {

namespace {

using LComplex = std::complex<long double>;

/// Compensated (Neumaier) accumulator; keeps the construction sums accurate
/// even over millions of terms.
struct CompensatedSum {
    long double sum = 0.0L;
    long double comp = 0.0L;

    void add(long double v) {
        long double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    long double value() const { return sum + comp; }
};

struct CompensatedComplexSum {
    CompensatedSum re, im;

    void add(LComplex v) {
        re.add(v.real());
        im.add(v.imag());
    }

    LComplex value() const { return {re.value(), im.value()}; }
};

LComplex principal_root(LComplex x, int r) {
    long double mod = std::abs(x);
    if (mod == 0.0L) return {0.0L, 0.0L};
    return std::polar(std::pow(mod, 1.0L / r), std::arg(x) / r);
}

LComplex integer_power(LComplex base, int e) {
    LComplex acc{1.0L, 0.0L};
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

void require_target(const LiftTarget& t, const char* who) {
    if (t.n() < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    for (const Complex& a : t.A) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument(std::string(who) + ": entries must be finite");
    }
}

constexpr int kHardLevelCeiling = 12;

/// exp(2*pi*i*l/m) for 0 <= l < m, exact at the four cardinal angles so the
/// small hand-checkable cases are bitwise clean.
Complex root_of_unity(int l, int m) {
    if (l == 0) return {1.0, 0.0};
    if (2 * l == m) return {-1.0, 0.0};
    if (4 * l == m) return {0.0, 1.0};
    if (4 * l == 3 * m) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * l / m;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

LiftBoundSequence lift_bound_sequence(int n) {
    if (n < 1) throw std::invalid_argument("lift_bound_sequence: n must be >= 1");
    LiftBoundSequence seq;
    seq.values.resize(static_cast<std::size_t>(n));
    seq.values[0] = 1.0;
    for (int k = 1; k < n; ++k) {
        const double d = seq.values[k - 1];
        // 1 + (1 + d^(k+1))^(1/(k+1)) rewritten through logs: the inner
        // power overflows double near n = 200 while the result stays ~n.
        const double inv = 1.0 / (k + 1);
        const double l = (k + 1) * std::log(d);
        seq.values[k] = 1.0 + d * std::exp(std::log1p(std::exp(-l)) * inv);
    }
    return seq;
}

std::vector<LiftBoundRow> lift_bound_asymptotics(int n_max) {
    if (n_max < 2) throw std::invalid_argument("lift_bound_asymptotics: n_max must be >= 2");
    LiftBoundSequence seq = lift_bound_sequence(n_max);
    std::vector<LiftBoundRow> rows(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        LiftBoundRow& row = rows[n - 1];
        row.n = n;
        row.value = seq.values[n - 1];
        row.ratio_to_n = row.value / n;
        row.increment = n == 1 ? 0.0 : row.value - seq.values[n - 2];
    }
    return rows;
}

ComplexList lift_step(const ComplexList& points, Complex K, int next_level) {
    if (next_level < 2) throw std::invalid_argument("lift_step: next_level must be >= 2");
    ComplexList out(points.size() * static_cast<std::size_t>(next_level));
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (int l = 0; l < next_level; ++l) {
            const Complex shift = root_of_unity(l, next_level) * K;
            out[k * static_cast<std::size_t>(next_level) + static_cast<std::size_t>(l)] =
                points[k] + shift;
        }
    }
    return out;
}

LiftedSolution lift(const LiftTarget& t, int max_level) {
    require_target(t, "lift");
    const int n = t.n();
    if (max_level > kHardLevelCeiling)
        throw ResourceError("lift: max_level exceeds the hard ceiling of 12");
    if (n > max_level)
        throw ResourceError("lift: level " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(max_level) + " (point count grows as n!)");

    LiftedSolution sol;
    sol.level = n;
    sol.points = {t.A[0]};
    sol.shifts.reserve(static_cast<std::size_t>(n) - 1);

    for (int level = 1; level < n; ++level) {
        const int next = level + 1;
        CompensatedComplexSum acc;
        for (const Complex& z : sol.points)
            acc.add(integer_power(LComplex{z.real(), z.imag()}, next));
        const LComplex mean = acc.value() / static_cast<long double>(factorial(level));

        const LComplex a{t.A[next - 1].real(), t.A[next - 1].imag()};
        const LComplex k_root = principal_root(integer_power(a, next) - mean, next);
        const Complex K{static_cast<double>(k_root.real()), static_cast<double>(k_root.imag())};

        sol.shifts.push_back(K);
        sol.points = lift_step(sol.points, K, next);
    }
    return sol;
}

LiftVerification verify_lift(const LiftTarget& t, const LiftedSolution& sol) {
    require_target(t, "verify_lift");
    const int n = t.n();
    const std::uint64_t expected = factorial(n);
    if (sol.points.size() != expected)
        throw std::invalid_argument("verify_lift: point count must be n!");

    std::vector<CompensatedComplexSum> acc(static_cast<std::size_t>(n));
    for (const Complex& w : sol.points) {
        LComplex base{w.real(), w.imag()};
        LComplex cur = base;
        for (int j = 1; j <= n; ++j) {
            acc[j - 1].add(cur);
            if (j < n) cur *= base;
        }
    }

    LiftVerification out;
    out.residuals.resize(static_cast<std::size_t>(n));
    const long double m = static_cast<long double>(expected);
    for (int j = 1; j <= n; ++j) {
        const LComplex a{t.A[j - 1].real(), t.A[j - 1].imag()};
        const LComplex rhs = integer_power(a, j);
        const long double num = std::abs(acc[j - 1].value() / m - rhs);
        const long double denom = std::max(1.0L, std::abs(rhs));
        out.residuals[j - 1] = static_cast<double>(num / denom);
    }

    const double constant = lift_bound_sequence(n).values[static_cast<std::size_t>(n) - 1];
    out.certificate = make_certificate(max_modulus(t.A), constant, max_modulus(sol.points));
    return out;
}

}  // namespace powersum
