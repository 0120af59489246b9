#pragma once

#include "he3oam/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace he3oam {

/// Angular-momentum quantum number j or m, stored as the integer 2j (2m).
class HalfInt {
  public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt integer(int value) { return HalfInt(2 * value); }
    static constexpr HalfInt half(int odd_numerator) { return HalfInt(odd_numerator); }

    /// Accepts "1", "+1", "-3/2", "1/2". Anything not a multiple of 1/2 is a ParseError.
    static HalfInt parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    Rational value() const { return Rational(twice_, 2); }
    double to_double() const { return twice_ / 2.0; }

    /// "1", "-1", "3/2", "-1/2"; with_sign adds "+" for positive values.
    std::string str(bool with_sign = false) const;

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }

    constexpr bool operator==(const HalfInt&) const = default;
    constexpr auto operator<=>(const HalfInt&) const = default;

  private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// j >= 0, |m| <= j and j - m integral.
constexpr bool is_valid_pair(HalfInt j, HalfInt m) {
    return j.twice() >= 0 && (m.twice() <= j.twice() && -m.twice() <= j.twice()) &&
           (j.twice() - m.twice()) % 2 == 0;
}

/// Throws InvalidQuantumNumber naming the pair when is_valid_pair fails.
void require_valid_pair(HalfInt j, HalfInt m, std::string_view label);

} // namespace he3oam
