#include "he3oam/half_int.hpp"

#include "he3oam/errors.hpp"

#include <limits>

namespace he3oam {

HalfInt HalfInt::parse(std::string_view text) {
    const Rational r = parse_rational(text);
    const Rational doubled = r * 2;
    if (boost::multiprecision::denominator(doubled) != 1)
        throw ParseError("'" + std::string(text) + "' is not a multiple of 1/2");
    const BigInt t = boost::multiprecision::numerator(doubled);
    if (t > std::numeric_limits<int>::max() / 4 || t < std::numeric_limits<int>::min() / 4)
        throw ParseError("'" + std::string(text) + "' is out of range");
    return HalfInt(t.convert_to<int>());
}

std::string HalfInt::str(bool with_sign) const {
    std::string s = twice_ % 2 == 0 ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
    if (with_sign && twice_ > 0) s.insert(s.begin(), '+');
    return s;
}

void require_valid_pair(HalfInt j, HalfInt m, std::string_view label) {
    if (is_valid_pair(j, m)) return;
    std::string why;
    if (j.twice() < 0)
        why = "j is negative";
    else if ((j.twice() - m.twice()) % 2 != 0)
        why = "j and m differ by a half-integer";
    else
        why = "|m| exceeds j";
    throw InvalidQuantumNumber("invalid pair " + std::string(label) + " (j=" + j.str() +
                               ", m=" + m.str(true) + "): " + why);
}

} // namespace he3oam
