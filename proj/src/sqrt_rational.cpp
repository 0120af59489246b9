#include "he3oam/sqrt_rational.hpp"

#include "he3oam/errors.hpp"

#include <cmath>

namespace he3oam {

SqrtRational::SqrtRational(int sign, Rational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
    if (sign_ < -1 || sign_ > 1) throw DomainError("sign must be -1, 0 or +1");
    if (radicand_ < 0) throw DomainError("negative radicand " + to_string(radicand_));
    if (sign_ == 0 || radicand_ == 0) {
        sign_ = 0;
        radicand_ = 0;
    }
}

SqrtRational SqrtRational::from_rational(const Rational& q) {
    return SqrtRational(q > 0 ? 1 : (q < 0 ? -1 : 0), q * q);
}

bool SqrtRational::as_rational(Rational* out) const {
    Rational root;
    if (!rational_sqrt(radicand_, &root)) return false;
    if (out) *out = sign_ < 0 ? Rational(-root) : root;
    return true;
}

double SqrtRational::to_double() const { return sign_ * std::sqrt(he3oam::to_double(radicand_)); }

std::string SqrtRational::str() const {
    if (sign_ == 0) return "0";
    const char* s = sign_ > 0 ? "+" : "-";
    Rational root;
    if (rational_sqrt(radicand_, &root)) return s + to_string(root);
    return std::string(s) + "sqrt(" + to_string(radicand_) + ")";
}

SqrtRational SqrtRational::operator*(const SqrtRational& o) const {
    return SqrtRational(sign_ * o.sign_, radicand_ * o.radicand_);
}

} // namespace he3oam
