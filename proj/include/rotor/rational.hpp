#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rotor {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

namespace detail {
// Always base 10: cpp_int's string constructor would read a leading 0 as octal.
inline Integer parse_base10(std::string s) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    while (i + 1 < s.size() && s[i] == '0') ++i;
    Integer v(s.substr(i));
    return neg ? Integer(-v) : v;
}
}  // namespace detail

/// Parse "p/q", "p", or a decimal literal ("0.25" -> 1/4) into an exact rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num = detail::parse_base10(text.substr(0, slash));
        Integer den = detail::parse_base10(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    auto exp = text.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos)
        return Rational(detail::parse_base10(text));
    // decimal / scientific literal: mantissa scaled by a power of ten
    std::string mant = exp == std::string::npos ? text : text.substr(0, exp);
    long e10 = exp == std::string::npos ? 0 : std::stol(text.substr(exp + 1));
    dot = mant.find('.');
    if (dot != std::string::npos) {
        e10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    Rational r{detail::parse_base10(mant)};
    Integer p10 = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(e10 < 0 ? -e10 : e10));
    if (e10 < 0) return Rational(r / p10);
    return Rational(r * p10);
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// Exact rational square root; returns false when the input is not a perfect square.
inline bool exact_sqrt(const Rational& q, Rational& out) {
    if (q < 0) return false;
    Integer n = numerator(q), d = denominator(q);
    Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return false;
    out = Rational(rn, rd);
    return true;
}

/// Exact Gaussian-rational coefficient re + im*i. cpp_rational keeps lowest terms.
struct RationalComplex {
    Rational re{0};
    Rational im{0};

    RationalComplex() = default;
    RationalComplex(Rational r) : re(std::move(r)) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(long r) : re(r) {}
    RationalComplex(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }

    RationalComplex conj() const { return {re, -im}; }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero RationalComplex");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    RationalComplex& operator+=(const RationalComplex& b) { re += b.re; im += b.im; return *this; }
    RationalComplex& operator*=(const RationalComplex& b) { *this = *this * b; return *this; }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    static RationalComplex i() { return {Rational(0), Rational(1)}; }
};

/// Printed as "p/q+r/s i" (real part always present, imaginary only when nonzero).
inline std::string to_string(const RationalComplex& c) {
    std::string s = to_string(c.re);
    if (c.im != 0) {
        s += (c.im > 0 ? "+" : "-");
        Rational a = c.im > 0 ? c.im : Rational(-c.im);
        s += to_string(a) + " i";
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const RationalComplex& c) { return os << to_string(c); }

}  // namespace rotor
