#include "powersum/complex_text.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace powersum {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::string_view text) {
    throw std::invalid_argument("malformed complex literal: '" + std::string(text) + "'");
}

/// Index of the sign that separates the real and imaginary parts, or npos.
/// A sign directly after an exponent marker belongs to the exponent.
std::size_t split_position(std::string_view body) {
    for (std::size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if (c != '+' && c != '-') continue;
        char prev = body[i - 1];
        if (prev == 'e' || prev == 'E') continue;
        return i;
    }
    return std::string_view::npos;
}

double parse_signed(std::string_view piece, std::string_view whole) {
    if (piece.empty()) fail(whole);
    bool negative = false;
    if (piece.front() == '+' || piece.front() == '-') {
        negative = piece.front() == '-';
        piece.remove_prefix(1);
        if (piece.empty()) fail(whole);
    }
    // from_chars itself accepts a leading minus; a second sign here would
    // otherwise slip through as a double negation.
    if (piece.front() == '+' || piece.front() == '-') fail(whole);
    double value = 0.0;
    const char* begin = piece.data();
    const char* end = piece.data() + piece.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) fail(whole);
    return negative ? -value : value;
}

/// The unit coefficient in front of 'i': empty or a bare sign means 1.
double parse_imag_coefficient(std::string_view piece, std::string_view whole) {
    if (piece.empty() || piece == "+") return 1.0;
    if (piece == "-") return -1.0;
    return parse_signed(piece, whole);
}

}  // namespace

std::string render_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw std::logic_error("render_double: buffer too small");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    return parse_signed(trim(text), text);
}

std::string render_complex(Complex z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0 && !std::signbit(im)) return render_double(re);
    if (re == 0.0 && !std::signbit(re) && im != 0.0) return render_double(im) + "i";
    return render_double(re) + (std::signbit(im) ? "-" : "+") + render_double(std::fabs(im)) + "i";
}

Complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) fail(text);

    if (s.back() != 'i') return {parse_signed(s, text), 0.0};

    std::string_view body = s.substr(0, s.size() - 1);
    std::size_t pos = split_position(body);
    if (pos == std::string_view::npos)
        return {0.0, parse_imag_coefficient(body, text)};

    double re = parse_signed(body.substr(0, pos), text);
    double im = parse_imag_coefficient(body.substr(pos), text);
    return {re, im};
}

ComplexList parse_complex_list(std::string_view text) {
    ComplexList out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(parse_complex(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace powersum
