#ifndef AZI_RATIONAL_HPP
#define AZI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace azi {

// Exact arbitrary-precision fraction, always in lowest terms with a positive
// denominator. cpp_rational maintains both invariants internally.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q" when q != 1, plain "p" otherwise.
std::string to_fraction_string(const Rational& r);

// Decimal rendering with a fixed number of fractional digits (round half away
// from zero). Used by reports, where a stable textual form matters.
std::string to_decimal_string(const Rational& r, int digits = 6);

double to_double(const Rational& r);

// Parses "p", "-p/q" style strings. Throws Error{ParseError} on junk.
Rational rational_from_string(const std::string& text);

} // namespace azi

#endif
