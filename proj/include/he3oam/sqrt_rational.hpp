#pragma once

#include "he3oam/rational.hpp"

#include <string>

namespace he3oam {

/// sign * sqrt(radicand) with an exact nonnegative rational radicand.
/// The radicand is zero exactly when the sign is zero.
class SqrtRational {
  public:
    SqrtRational() = default;

    /// Throws DomainError for a negative radicand or a sign outside {-1, 0, 1}.
    SqrtRational(int sign, Rational radicand);

    /// The square root representation of an ordinary rational q.
    static SqrtRational from_rational(const Rational& q);

    int sign() const { return sign_; }
    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    /// x^2, always exact.
    const Rational& squared() const { return radicand_; }

    /// The rational value when the radicand is a perfect square.
    bool as_rational(Rational* out) const;

    double to_double() const;

    /// "0", "+1", "-2/3" for perfect squares; "+sqrt(1/3)" otherwise.
    std::string str() const;

    SqrtRational operator-() const { return SqrtRational(-sign_, radicand_); }
    SqrtRational operator*(const SqrtRational& o) const;

    bool operator==(const SqrtRational& o) const {
        return sign_ == o.sign_ && radicand_ == o.radicand_;
    }

  private:
    int sign_ = 0;
    Rational radicand_ = 0;
};

} // namespace he3oam
