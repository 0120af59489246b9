#include "he3oam/quad_rational.hpp"

#include "he3oam/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace he3oam {

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

using Wide = boost::multiprecision::cpp_bin_float_100;

Wide widen(const Rational& r) {
    return Wide(boost::multiprecision::numerator(r)) / Wide(boost::multiprecision::denominator(r));
}

std::string render(const Wide& x, int digits) {
    if (x == 0) return "0";
    return x.str(digits, std::ios_base::fmtflags(0));
}

} // namespace

int QuadRational::sign() const {
    const int sa = sign_of(a_), sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 against 2 b^2.
    const int cmp = sign_of(a_ * a_ - 2 * b_ * b_);
    return sa > 0 ? cmp : -cmp;
}

double QuadRational::to_double() const {
    return (widen(a_) + widen(b_) * boost::multiprecision::sqrt(Wide(2))).convert_to<double>();
}

std::string QuadRational::str() const {
    if (b_ == 0) return to_string(a_);
    auto sqrt_term = [](const Rational& b) {
        if (b == 1) return std::string("sqrt(2)");
        return to_string(b) + "*sqrt(2)";
    };
    if (a_ == 0) return b_ < 0 ? "-" + sqrt_term(-b_) : sqrt_term(b_);
    return to_string(a_) + (b_ < 0 ? " - " + sqrt_term(-b_) : " + " + sqrt_term(b_));
}

QuadRational& QuadRational::operator+=(const QuadRational& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadRational& QuadRational::operator-=(const QuadRational& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadRational& QuadRational::operator*=(const QuadRational& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadRational& QuadRational::operator/=(const QuadRational& o) {
    const Rational norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
    if (norm == 0) throw DomainError("division by zero in Q(sqrt 2)");
    *this *= o.conjugate();
    a_ /= norm;
    b_ /= norm;
    return *this;
}

std::strong_ordering QuadRational::operator<=>(const QuadRational& o) const {
    const int s = (*this - o).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadRational sqrt_product(const SqrtRational& x, const SqrtRational& y) {
    const int s = x.sign() * y.sign();
    if (s == 0) return {};
    const Rational r = x.radicand() * y.radicand();
    Rational root;
    if (rational_sqrt(r, &root)) return {s * root, 0};
    if (rational_sqrt(r / 2, &root)) return {0, s * root};
    throw UnsupportedRadicand("sqrt(" + to_string(r) + ") is not in Q(sqrt 2)");
}

std::string to_decimal(const QuadRational& x, int significant_digits) {
    Wide v = widen(x.rational_part()) + widen(x.sqrt2_part()) * boost::multiprecision::sqrt(Wide(2));
    return render(v, significant_digits);
}

std::string to_decimal(const SqrtRational& x, int significant_digits) {
    Wide v = boost::multiprecision::sqrt(widen(x.radicand()));
    return render(x.sign() < 0 ? Wide(-v) : v, significant_digits);
}

} // namespace he3oam
