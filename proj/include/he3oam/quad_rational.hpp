#pragma once

#include "he3oam/rational.hpp"
#include "he3oam/sqrt_rational.hpp"

#include <compare>
#include <string>

namespace he3oam {

/// Element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// Equality and ordering are exact. The representation is unique because
/// sqrt(2) is irrational, so (a, b) comparison is field equality.
class QuadRational {
  public:
    QuadRational() = default;
    QuadRational(Rational a) : a_(std::move(a)) {} // NOLINT(google-explicit-constructor)
    QuadRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    QuadRational(int a) : a_(a) {} // NOLINT(google-explicit-constructor)

    static QuadRational sqrt2() { return {0, 1}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Exact sign of a + b*sqrt(2).
    int sign() const;

    /// a - b*sqrt(2).
    QuadRational conjugate() const { return {a_, -b_}; }

    double to_double() const;

    /// "1/3", "2*sqrt(2)", "1/2 - 1/6*sqrt(2)".
    std::string str() const;

    QuadRational operator-() const { return {-a_, -b_}; }
    QuadRational& operator+=(const QuadRational& o);
    QuadRational& operator-=(const QuadRational& o);
    QuadRational& operator*=(const QuadRational& o);
    /// Division by a nonzero field element; throws DomainError on zero.
    QuadRational& operator/=(const QuadRational& o);

    friend QuadRational operator+(QuadRational x, const QuadRational& y) { return x += y; }
    friend QuadRational operator-(QuadRational x, const QuadRational& y) { return x -= y; }
    friend QuadRational operator*(QuadRational x, const QuadRational& y) { return x *= y; }
    friend QuadRational operator/(QuadRational x, const QuadRational& y) { return x /= y; }

    bool operator==(const QuadRational& o) const { return a_ == o.a_ && b_ == o.b_; }
    std::strong_ordering operator<=>(const QuadRational& o) const;

  private:
    Rational a_ = 0;
    Rational b_ = 0;
};

/// Exact x*y, provided sqrt(r_x * r_y) is rational or a rational multiple of
/// sqrt(2). Any other product throws UnsupportedRadicand.
QuadRational sqrt_product(const SqrtRational& x, const SqrtRational& y);

/// Correctly rounded decimal rendering with the given significant digits
/// (printf %g style, no exponent for moderate magnitudes).
std::string to_decimal(const QuadRational& x, int significant_digits = 15);
std::string to_decimal(const SqrtRational& x, int significant_digits = 15);

} // namespace he3oam
