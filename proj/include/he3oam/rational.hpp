#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace he3oam {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Parse "3", "-1/2", "+0.25", "1e-3" or "2.5E+1" to an exact rational.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// "n" or "n/d" with an explicit leading sign only for negatives.
std::string to_string(const Rational& r);

/// True when r = q^2 for some rational q; writes q >= 0 into *root.
bool rational_sqrt(const Rational& r, Rational* root);

double to_double(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace he3oam
