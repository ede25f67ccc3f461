#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace slicereg {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator as class invariants, so arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

// Exact integer square root of a rational if it is a perfect square,
// used only where the construction demands a rational norm.
inline bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    Integer n = numer(r), d = denom(r);
    Integer sn = boost::multiprecision::sqrt(n);
    Integer sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rational(sn, sd);
    return true;
}

}  // namespace slicereg
