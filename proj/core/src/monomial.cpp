#include "powersum/monomial.hpp"

#include <cmath>

#include "powersum/combinatorics.hpp"

namespace powersum {

namespace {

void require_monic(const MonicPolynomial& f, const char* who) {
    if (f.n() < 1) throw std::invalid_argument(std::string(who) + ": degree must be >= 1");
    if (f.n() > 24) throw std::invalid_argument(std::string(who) + ": degree is capped at 24");
    for (const Complex& a : f.a) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument(std::string(who) + ": coefficients must be finite");
    }
}

}  // namespace

PowerSumTarget node_target(const MonicPolynomial& f) {
    require_monic(f, "node_target");
    const int n = f.n();
    PowerSumTarget t;
    t.b.resize(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        Complex c = static_cast<double>(n) * f.a[static_cast<std::size_t>(n - j)] /
                    static_cast<double>(binomial(n, j));
        t.b[j - 1] = j % 2 == 0 ? c : -c;
    }
    return t;
}

PowerNodeSet decompose(const MonicPolynomial& f, double tol, int max_iter) {
    RootSet solution = solve_power_sum_system(node_target(f), tol, max_iter);
    return PowerNodeSet{std::move(solution.roots)};
}

MonicPolynomial reconstruct(const PowerNodeSet& nodes) {
    const int n = static_cast<int>(nodes.nodes.size());
    if (n < 1) throw std::invalid_argument("reconstruct: need at least one node");
    if (n > 24) throw std::invalid_argument("reconstruct: node count is capped at 24");

    using LComplex = std::complex<long double>;
    std::vector<LComplex> power(nodes.nodes.size()), base(nodes.nodes.size());
    for (std::size_t i = 0; i < nodes.nodes.size(); ++i)
        base[i] = power[i] = LComplex{nodes.nodes[i].real(), nodes.nodes[i].imag()};

    MonicPolynomial f;
    f.a.assign(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (int j = 1; j <= n; ++j) {
        LComplex s{0.0L, 0.0L};
        for (const LComplex& p : power) s += p;
        LComplex c = s * static_cast<long double>(binomial(n, j)) / static_cast<long double>(n);
        if (j % 2 == 1) c = -c;
        f.a[static_cast<std::size_t>(n - j)] =
            Complex{static_cast<double>(c.real()), static_cast<double>(c.imag())};
        if (j < n)
            for (std::size_t i = 0; i < power.size(); ++i) power[i] *= base[i];
    }
    return f;
}

BoundCertificate decompose_bound(const MonicPolynomial& f) {
    PowerSumTarget t = node_target(f);
    PowerNodeSet nodes = decompose(f);
    return make_certificate(target_scale(t), tchakaloff_constant(f.n()),
                            max_modulus(nodes.nodes));
}

MonicPolynomial monic_from_general(const PolynomialCoefficients& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("monic_from_general: degree must be >= 1");
    const Complex lead = p.coeffs.back();
    if (std::abs(lead) == 0.0)
        throw std::invalid_argument("monic_from_general: leading coefficient must be nonzero");
    MonicPolynomial f;
    f.a.resize(p.coeffs.size() - 1);
    for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) f.a[i] = p.coeffs[i] / lead;
    return f;
}

}  // namespace powersum
