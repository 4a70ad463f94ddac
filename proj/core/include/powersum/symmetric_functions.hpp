#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "powersum/combinatorics.hpp"
#include "powersum/rational.hpp"
#include "powersum/types.hpp"

namespace powersum {

/// Tags whether a value vector holds power sums s_1..s_m or elementary
/// symmetric functions sigma_1..sigma_m of some underlying point multiset.
enum class SymmetricKind { PowerSum, Elementary };

/// A prefix of symmetric-function values of one kind. values[j-1] holds the
/// j-th function; the 0-th (s_0 = m, sigma_0 = 1) is implicit and never stored.
template <class Scalar>
struct SymmetricValues {
    SymmetricKind kind = SymmetricKind::PowerSum;
    std::vector<Scalar> values;

    int count() const { return static_cast<int>(values.size()); }
};

template <class Scalar>
SymmetricValues<Scalar> make_power_sums(std::vector<Scalar> values) {
    return {SymmetricKind::PowerSum, std::move(values)};
}

template <class Scalar>
SymmetricValues<Scalar> make_elementary(std::vector<Scalar> values) {
    return {SymmetricKind::Elementary, std::move(values)};
}

namespace detail {

template <class Scalar>
void require_kind(const SymmetricValues<Scalar>& v, SymmetricKind kind, const char* who) {
    if (v.kind != kind) throw std::invalid_argument(std::string(who) + ": wrong input kind");
}

template <class Scalar>
void require_prefix(const SymmetricValues<Scalar>& v, int k, const char* who) {
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
    if (v.count() < k) throw std::invalid_argument(std::string(who) + ": need at least k values");
}

}  // namespace detail

/// Converts power sums s_1..s_k into elementary symmetric functions
/// sigma_1..sigma_k via the triangular recurrence
///   k sigma_k = sum_{i=1..k} (-1)^{i-1} s_i sigma_{k-i},
/// in O(k^2) scalar operations. Exact over GaussianRational.
template <class Scalar>
SymmetricValues<Scalar> elementary_from_power_sums(const SymmetricValues<Scalar>& s, int k) {
    using ops = detail::scalar_ops<Scalar>;
    detail::require_kind(s, SymmetricKind::PowerSum, "elementary_from_power_sums");
    detail::require_prefix(s, k, "elementary_from_power_sums");

    std::vector<Scalar> sigma(static_cast<std::size_t>(k));
    for (int m = 1; m <= k; ++m) {
        Scalar acc = ops::from_int(0);
        for (int i = 1; i <= m; ++i) {
            Scalar term = s.values[i - 1];
            if (i < m) term = term * sigma[m - i - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        sigma[m - 1] = ops::div_int(acc, m);
    }
    return make_elementary(std::move(sigma));
}

/// Inverse of elementary_from_power_sums: recovers s_1..s_k from
/// sigma_1..sigma_k by solving the same recurrence for s_k at each step.
template <class Scalar>
SymmetricValues<Scalar> power_sums_from_elementary(const SymmetricValues<Scalar>& sigma, int k) {
    using ops = detail::scalar_ops<Scalar>;
    detail::require_kind(sigma, SymmetricKind::Elementary, "power_sums_from_elementary");
    detail::require_prefix(sigma, k, "power_sums_from_elementary");

    std::vector<Scalar> s(static_cast<std::size_t>(k));
    for (int m = 1; m <= k; ++m) {
        Scalar acc = ops::from_int(m) * sigma.values[m - 1];
        for (int i = 1; i < m; ++i) {
            Scalar term = s[i - 1] * sigma.values[m - i - 1];
            if (i % 2 == 0) term = -term;
            acc -= term;
        }
        if (m % 2 == 0) acc = -acc;
        s[m - 1] = acc;
    }
    return make_power_sums(std::move(s));
}

namespace detail {

/// Cofactor expansion along the first row, skipping zero entries. The
/// conversion matrices are near-triangular (two nonzeros in the first row),
/// so this stays cheap for the small k the oracles accept.
template <class Scalar>
Scalar laplace_determinant(const std::vector<std::vector<Scalar>>& m) {
    using ops = scalar_ops<Scalar>;
    const std::size_t n = m.size();
    if (n == 0) return ops::from_int(1);
    if (n == 1) return m[0][0];
    Scalar det = ops::from_int(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == Scalar{}) continue;
        std::vector<std::vector<Scalar>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            minor[r - 1].reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1].push_back(m[r][c]);
            }
        }
        Scalar term = m[0][j] * laplace_determinant(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

constexpr int kMaxDeterminantOrder = 10;

}  // namespace detail

/// Reference value for sigma_k as a k x k determinant over the power sums,
/// divided by k!. Independent of the recurrence; intended as a test oracle,
/// so k is capped at 10.
template <class Scalar>
Scalar elementary_determinant(const SymmetricValues<Scalar>& s, int k) {
    using ops = detail::scalar_ops<Scalar>;
    detail::require_kind(s, SymmetricKind::PowerSum, "elementary_determinant");
    detail::require_prefix(s, k, "elementary_determinant");
    if (k > detail::kMaxDeterminantOrder)
        throw std::invalid_argument("elementary_determinant: k must be <= 10");

    std::vector<std::vector<Scalar>> m(
        static_cast<std::size_t>(k),
        std::vector<Scalar>(static_cast<std::size_t>(k), ops::from_int(0)));
    for (int r = 1; r <= k; ++r) {
        for (int c = 1; c <= r; ++c) m[r - 1][c - 1] = s.values[r - c];
        if (r < k) m[r - 1][r] = ops::from_int(r);
    }
    Scalar det = detail::laplace_determinant(m);
    return ops::div_int(det, static_cast<long long>(factorial(k)));
}

/// Reference value for s_k as a k x k determinant over the elementary
/// symmetric functions. Test oracle, k capped at 10.
template <class Scalar>
Scalar power_sum_determinant(const SymmetricValues<Scalar>& sigma, int k) {
    using ops = detail::scalar_ops<Scalar>;
    detail::require_kind(sigma, SymmetricKind::Elementary, "power_sum_determinant");
    detail::require_prefix(sigma, k, "power_sum_determinant");
    if (k > detail::kMaxDeterminantOrder)
        throw std::invalid_argument("power_sum_determinant: k must be <= 10");

    std::vector<std::vector<Scalar>> m(
        static_cast<std::size_t>(k),
        std::vector<Scalar>(static_cast<std::size_t>(k), ops::from_int(0)));
    for (int r = 1; r <= k; ++r) {
        m[r - 1][0] = ops::from_int(r) * sigma.values[r - 1];
        for (int c = 2; c <= r + 1 && c <= k; ++c) {
            int idx = r - c + 1;
            m[r - 1][c - 1] = idx == 0 ? ops::from_int(1) : sigma.values[idx - 1];
        }
    }
    return detail::laplace_determinant(m);
}

/// Exponents (a_1, .., a_k) of a monomial s_1^{a_1} .. s_k^{a_k}.
struct ExponentVector {
    std::vector<int> exps;

    /// Weighted degree sum_i i * a_i.
    int weight() const {
        int w = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) w += static_cast<int>(i + 1) * exps[i];
        return w;
    }

    /// Plain degree sum_i a_i.
    int total_degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.exps == b.exps;
    }
};

/// Orders exponent vectors by total degree, then lexicographically.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

/// One term A * s_1^{a_1} .. s_k^{a_k} of a weight-k decomposition. The
/// coefficient is exact; its sign is determined by the parity of
/// k + sum_i a_i, which sign_consistent() checks.
struct RegularMonomial {
    Rational coeff;
    ExponentVector exps;
    int degree = 0;

    bool weight_consistent() const { return exps.weight() == degree; }
    bool sign_consistent() const {
        int parity = (degree + exps.total_degree()) % 2;
        if (coeff == 0) return false;
        return (coeff > 0) == (parity == 0);
    }
};

/// sigma_k written as an exact polynomial in the power sums: a sum of
/// distinct weight-k monomials in graded-lex order. The number of terms
/// equals the number of integer partitions of k.
struct RegularDecomposition {
    int degree = 0;
    std::vector<RegularMonomial> terms;
};

/// Expands sigma_k into power-sum monomials by unrolling the conversion
/// recurrence and merging like terms. Deterministic; requires 1 <= k <= 12.
RegularDecomposition regular_decomposition(int k);

/// Evaluates a decomposition at concrete power-sum values s_1..s_k.
/// Exact over GaussianRational.
template <class Scalar>
Scalar evaluate_decomposition(const RegularDecomposition& dec, const SymmetricValues<Scalar>& s) {
    using ops = detail::scalar_ops<Scalar>;
    detail::require_kind(s, SymmetricKind::PowerSum, "evaluate_decomposition");
    detail::require_prefix(s, dec.degree, "evaluate_decomposition");

    Scalar acc = ops::from_int(0);
    for (const RegularMonomial& term : dec.terms) {
        Scalar prod = ops::from_rational(term.coeff);
        for (std::size_t i = 0; i < term.exps.exps.size(); ++i) {
            for (int e = 0; e < term.exps.exps[i]; ++e) prod = prod * s.values[i];
        }
        acc += prod;
    }
    return acc;
}

}  // namespace powersum
