#pragma once

#include <string>
#include <string_view>

#include "powersum/types.hpp"

namespace powersum {

/// Shortest decimal representation that parses back to exactly x.
std::string render_double(double x);

/// Parses a decimal literal; the whole string must be consumed.
/// Throws std::invalid_argument on malformed input.
double parse_double(std::string_view text);

/// Renders z in the "a+bi" family: "a" when the imaginary part is +0,
/// "bi" when the real part is +0, otherwise "a+bi" / "a-bi". Signed zeros
/// survive, so parse_complex(render_complex(z)) == z bitwise for finite z.
std::string render_complex(Complex z);

/// Parses "a+bi" / "a-bi" / "a" / "bi" / "i" / "-i" with decimal reals
/// (exponents allowed). Surrounding whitespace is ignored. Throws
/// std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

/// Parses a comma-separated list of complex literals; every slot must be
/// non-empty. Throws std::invalid_argument on malformed input.
ComplexList parse_complex_list(std::string_view text);

}  // namespace powersum
