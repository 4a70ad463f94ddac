#include "powersum/rootfinding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace powersum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_polynomial(const PolynomialCoefficients& p, const char* who) {
    if (p.degree() < 1)
        throw std::invalid_argument(std::string(who) + ": degree must be >= 1");
    for (const Complex& a : p.coeffs) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument(std::string(who) + ": coefficients must be finite");
    }
    if (std::abs(p.coeffs.back()) == 0.0)
        throw std::invalid_argument(std::string(who) + ": leading coefficient must be nonzero");
}

/// p(z) and the scale sum_i |a_i| |z|^i in one pass.
std::pair<Complex, double> evaluate_with_scale(const ComplexList& coeffs, Complex z) {
    Complex v{0.0, 0.0};
    double s = 0.0;
    double az = std::abs(z);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        v = v * z + coeffs[i];
        s = s * az + std::abs(coeffs[i]);
    }
    return {v, s};
}

double relative_backward_error(const ComplexList& coeffs, Complex z) {
    auto [v, s] = evaluate_with_scale(coeffs, z);
    double num = std::abs(v);
    if (s == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / s;
}

/// Both roots of z^2 + bz + c with the numerically stable sign choice:
/// the root computed from -b - sqrt(disc) picks the sqrt branch aligned
/// with b, and the companion root comes from the product c.
std::pair<Complex, Complex> quadratic_roots(Complex b, Complex c) {
    Complex disc = b * b - 4.0 * c;
    Complex sq = std::sqrt(disc);
    if (std::real(std::conj(b) * sq) < 0.0) sq = -sq;
    Complex q = -0.5 * (b + sq);
    Complex r1, r2;
    if (std::abs(q) == 0.0) {
        r1 = Complex{0.0, 0.0};
        r2 = -b;
    } else {
        r1 = q;
        r2 = c / q;
    }
    return {r1, r2};
}

/// Aberth-Ehrlich simultaneous iteration on a monic polynomial of degree
/// >= 3 given by ascending coefficients (implicit leading 1 included in q).
ComplexList aberth_iterate(const ComplexList& q, int max_iter) {
    const int d = static_cast<int>(q.size()) - 1;
    PolynomialCoefficients qp{q};
    const double radius = 0.9 * cauchy_bound(qp);

    ComplexList z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        double angle = 2.0 * std::numbers::pi * i / d + 0.4;
        z[i] = std::polar(radius, angle);
    }

    std::vector<bool> frozen(static_cast<std::size_t>(d), false);
    const double freeze_factor = 16.0 * d * kEps;

    for (int iter = 0; iter < max_iter; ++iter) {
        bool moved = false;
        for (int i = 0; i < d; ++i) {
            if (frozen[i]) continue;

            Complex v{0.0, 0.0}, dv{0.0, 0.0};
            double scale = 0.0;
            double az = std::abs(z[i]);
            for (std::size_t j = q.size(); j-- > 0;) {
                dv = dv * z[i] + v;
                v = v * z[i] + q[j];
                scale = scale * az + std::abs(q[j]);
            }
            if (std::abs(v) <= freeze_factor * scale) {
                frozen[i] = true;
                continue;
            }

            Complex sum{0.0, 0.0};
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (std::abs(diff) == 0.0) continue;
                sum += 1.0 / diff;
            }

            Complex newton = dv == Complex{0.0, 0.0} ? Complex{0.0, 0.0} : v / dv;
            Complex denom = 1.0 - newton * sum;
            Complex step = std::abs(denom) == 0.0 ? newton : newton / denom;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = newton;
            if (dv == Complex{0.0, 0.0} && v != Complex{0.0, 0.0}) {
                // Derivative vanished away from a root (symmetric stagnation);
                // nudge off the critical point instead of stalling.
                step = std::polar(std::max(az, 1.0) * 1e-3, 0.7 + i);
            }

            z[i] -= step;
            moved = true;
            if (std::abs(step) <= 4.0 * kEps * std::abs(z[i])) frozen[i] = true;
        }
        if (!moved) break;
    }
    return z;
}

constexpr double kHuge = std::numeric_limits<double>::infinity();

}  // namespace

Complex evaluate(const PolynomialCoefficients& p, Complex z) {
    Complex v{0.0, 0.0};
    for (std::size_t i = p.coeffs.size(); i-- > 0;) v = v * z + p.coeffs[i];
    return v;
}

double RootSet::max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

double cauchy_bound(const PolynomialCoefficients& p) {
    require_polynomial(p, "cauchy_bound");
    const double lead = std::abs(p.coeffs.back());
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i)
        m = std::max(m, std::abs(p.coeffs[i]) / lead);
    return 1.0 + m;
}

RootSet find_roots(const PolynomialCoefficients& p, double tol, int max_iter) {
    require_polynomial(p, "find_roots");
    if (!(tol > 0.0)) throw std::invalid_argument("find_roots: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("find_roots: max_iter must be >= 1");

    // Zero roots correspond exactly to vanishing low-order coefficients;
    // deflate them before normalizing.
    std::size_t zero_count = 0;
    while (zero_count < p.coeffs.size() - 1 && std::abs(p.coeffs[zero_count]) == 0.0)
        ++zero_count;

    const std::size_t reduced_size = p.coeffs.size() - zero_count;
    ComplexList q(reduced_size);
    const Complex lead = p.coeffs.back();
    for (std::size_t i = 0; i < reduced_size; ++i) q[i] = p.coeffs[zero_count + i] / lead;
    q.back() = Complex{1.0, 0.0};
    const int dq = static_cast<int>(reduced_size) - 1;

    ComplexList roots(zero_count, Complex{0.0, 0.0});
    if (dq == 1) {
        roots.push_back(-q[0]);
    } else if (dq == 2) {
        auto [r1, r2] = quadratic_roots(q[1], q[0]);
        roots.push_back(r1);
        roots.push_back(r2);
    } else if (dq >= 3) {
        ComplexList found = aberth_iterate(q, max_iter);
        roots.insert(roots.end(), found.begin(), found.end());
    }

    canonical_sort(roots);
    RootSet out;
    out.roots = std::move(roots);
    out.residuals.reserve(out.roots.size());
    for (const Complex& z : out.roots) {
        // Deflated zeros are exact roots of the original polynomial.
        if (z == Complex{0.0, 0.0} && zero_count > 0) {
            out.residuals.push_back(0.0);
            continue;
        }
        out.residuals.push_back(relative_backward_error(p.coeffs, z));
    }

    if (out.max_residual() > tol) {
        throw ConvergenceError(
            "find_roots: backward error " + std::to_string(out.max_residual()) +
                " exceeds tolerance after " + std::to_string(max_iter) + " iterations",
            std::move(out));
    }
    return out;
}

PolynomialCoefficients expand_from_roots(const ComplexList& roots) {
    ComplexList sorted = canonical_sorted(roots);
    ComplexList coeffs{Complex{1.0, 0.0}};
    for (const Complex& r : sorted) {
        coeffs.insert(coeffs.begin(), Complex{0.0, 0.0});
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) coeffs[i] -= r * coeffs[i + 1];
    }
    return PolynomialCoefficients{std::move(coeffs)};
}

MatchResult match_multisets(const ComplexList& u, const ComplexList& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("match_multisets: lists must have equal length");
    const int n = static_cast<int>(u.size());
    MatchResult result;
    if (n == 0) return result;

    // Shortest-augmenting-path assignment with potentials; rows and columns
    // are 1-based, index 0 is the virtual unmatched row/column.
    std::vector<std::vector<double>> cost(static_cast<std::size_t>(n) + 1,
                                          std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) cost[i][j] = std::abs(u[i - 1] - v[j - 1]);

    std::vector<double> pot_u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> pot_v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> matched_row(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        matched_row[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, kHuge);
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        do {
            used[j0] = true;
            int i0 = matched_row[j0];
            double delta = kHuge;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[i0][j] - pot_u[i0] - pot_v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    pot_u[matched_row[j]] += delta;
                    pot_v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (matched_row[j0] != 0);
        do {
            int j1 = way[j0];
            matched_row[j0] = matched_row[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    result.pairing.assign(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j) result.pairing[matched_row[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i)
        result.max_distance = std::max(result.max_distance, std::abs(u[i] - v[result.pairing[i]]));
    return result;
}

}  // namespace powersum
