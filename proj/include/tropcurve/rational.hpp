/*
 * rational.hpp
 * ------------
 * Exact integer and rational arithmetic used throughout tropcurve.
 * Thin helpers on top of boost::multiprecision (arbitrary precision,
 * header-only). No floating point anywhere in the library.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tropcurve {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Floor / ceil division for exact chip-firing counts.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("ceil_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// gcd on nonnegative rationals: gcd(a/b, c/d) = gcd(ad, cb)/(bd).
// gcd(r, 0) = r. Used to pick lattice granularities.
Rat rat_gcd(const Rat& a, const Rat& b);

// True iff b/a is a (positive) integer; "a divides b" in the rational sense.
bool rat_divides(const Rat& a, const Rat& b);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Exact integer quotient b/a; throws unless rat_divides(a, b).
Int rat_quotient(const Rat& a, const Rat& b);

// Renders "p/q", or "p" when q == 1.
std::string rat_str(const Rat& r);

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// (including zero denominators).
Rat parse_rat(const std::string& s);

} // namespace tropcurve
