#include "powersum/powersum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "powersum/symmetric_functions.hpp"

namespace powersum {

namespace {

void require_target(const PowerSumTarget& t, const char* who) {
    if (t.n() < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    for (const Complex& b : t.b) {
        if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw std::invalid_argument(std::string(who) + ": entries must be finite");
    }
}

constexpr int kMaxSystemSize = 24;

}  // namespace

BoundCertificate make_certificate(double scale, double constant, double observed, double slack) {
    BoundCertificate cert;
    cert.scale = scale;
    cert.constant = constant;
    cert.observed_max = observed;
    cert.slack = slack;
    if (observed == 0.0) {
        cert.ratio = 0.0;
        cert.holds = true;
        return cert;
    }
    const double bound = constant * scale;
    if (bound <= 0.0) {
        cert.ratio = std::numeric_limits<double>::infinity();
        cert.holds = false;
        return cert;
    }
    cert.ratio = observed / bound;
    cert.holds = cert.ratio <= 1.0 + slack;
    return cert;
}

double tchakaloff_constant(int n) {
    if (n < 1) throw std::invalid_argument("tchakaloff_constant: n must be >= 1");
    return 1.0 / std::sin(std::numbers::pi / (2.0 * n));
}

double target_scale(const PowerSumTarget& t) {
    double m = 0.0;
    for (int j = 1; j <= t.n(); ++j) {
        double a = std::abs(t.b[j - 1]);
        if (a == 0.0) continue;
        m = std::max(m, std::pow(a, 1.0 / j));
    }
    return m;
}

RootSet solve_power_sum_system(const PowerSumTarget& t, double tol, int max_iter) {
    require_target(t, "solve_power_sum_system");
    const int n = t.n();
    if (n > kMaxSystemSize)
        throw std::invalid_argument("solve_power_sum_system: n is capped at 24");

    const bool all_zero =
        std::all_of(t.b.begin(), t.b.end(), [](const Complex& b) { return b == Complex{0.0, 0.0}; });
    if (all_zero) {
        RootSet out;
        out.roots.assign(static_cast<std::size_t>(n), Complex{0.0, 0.0});
        out.residuals.assign(static_cast<std::size_t>(n), 0.0);
        return out;
    }

    SymmetricValues<Complex> sigma =
        elementary_from_power_sums(make_power_sums(t.b), n);

    // Vieta: the monic polynomial with the prescribed elementary symmetric
    // values has coefficient (-1)^k sigma_k at z^{n-k}.
    PolynomialCoefficients poly;
    poly.coeffs.assign(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    poly.coeffs[static_cast<std::size_t>(n)] = Complex{1.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        Complex c = sigma.values[k - 1];
        if (k % 2 == 1) c = -c;
        poly.coeffs[static_cast<std::size_t>(n - k)] = c;
    }
    return find_roots(poly, tol, max_iter);
}

std::vector<double> verify_power_sums(const PowerSumTarget& t, const RootSet& z) {
    require_target(t, "verify_power_sums");
    const int n = t.n();
    if (static_cast<int>(z.roots.size()) != n)
        throw std::invalid_argument("verify_power_sums: root count must equal n");

    using LComplex = std::complex<long double>;
    std::vector<LComplex> power(z.roots.size());
    for (std::size_t i = 0; i < z.roots.size(); ++i)
        power[i] = LComplex{z.roots[i].real(), z.roots[i].imag()};

    std::vector<double> residuals(static_cast<std::size_t>(n));
    std::vector<LComplex> base = power;
    for (int j = 1; j <= n; ++j) {
        LComplex sum{0.0L, 0.0L};
        for (const LComplex& p : power) sum += p;
        LComplex diff = sum - LComplex{t.b[j - 1].real(), t.b[j - 1].imag()};
        double denom = std::max(1.0, std::abs(t.b[j - 1]));
        residuals[j - 1] = static_cast<double>(std::abs(diff)) / denom;
        if (j < n)
            for (std::size_t i = 0; i < power.size(); ++i) power[i] *= base[i];
    }
    return residuals;
}

BoundCertificate bound_certificate(const PowerSumTarget& t, const RootSet& z) {
    require_target(t, "bound_certificate");
    if (static_cast<int>(z.roots.size()) != t.n())
        throw std::invalid_argument("bound_certificate: root count must equal n");
    return make_certificate(target_scale(t), tchakaloff_constant(t.n()), max_modulus(z.roots));
}

}  // namespace powersum
