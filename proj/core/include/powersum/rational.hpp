#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "powersum/types.hpp"

namespace powersum {

/// Exact rational scalar for the exact-arithmetic code paths.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Complex number with exact rational real and imaginary parts. Provides
/// just the field operations the symmetric-function recurrences need.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long long r) : re(r), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline Complex to_complex(const GaussianRational& z) { return {to_double(z.re), to_double(z.im)}; }

namespace detail {

/// Uniform construction and exact division hooks, so the conversion
/// recurrences compile for both scalar fields from one implementation.
template <class Scalar>
struct scalar_ops;

template <>
struct scalar_ops<Complex> {
    static Complex from_int(long long v) { return {static_cast<double>(v), 0.0}; }
    static Complex from_rational(const Rational& q) { return {to_double(q), 0.0}; }
    static Complex div_int(const Complex& x, long long k) { return x / static_cast<double>(k); }
};

template <>
struct scalar_ops<GaussianRational> {
    static GaussianRational from_int(long long v) { return GaussianRational(v); }
    static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
    static GaussianRational div_int(const GaussianRational& x, long long k) {
        Rational d(k);
        return {x.re / d, x.im / d};
    }
};

}  // namespace detail

}  // namespace powersum
