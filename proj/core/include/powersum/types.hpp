#pragma once

#include <algorithm>
#include <complex>
#include <vector>

namespace powersum {

using Complex = std::complex<double>;

/// Ordered list of complex values. Used for roots, power sums, polynomial
/// coefficients and shift targets throughout the library.
using ComplexList = std::vector<Complex>;

/// Canonical ordering for root sets: ascending real part, then ascending
/// imaginary part. Every function that returns a root multiset sorts it
/// this way, so equal multisets compare equal element by element.
inline bool canonical_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

inline void canonical_sort(ComplexList& values) {
    std::sort(values.begin(), values.end(), canonical_less);
}

inline ComplexList canonical_sorted(ComplexList values) {
    canonical_sort(values);
    return values;
}

/// Largest modulus in a list; 0 for an empty list.
inline double max_modulus(const ComplexList& values) {
    double m = 0.0;
    for (const Complex& z : values) m = std::max(m, std::abs(z));
    return m;
}

}  // namespace powersum
