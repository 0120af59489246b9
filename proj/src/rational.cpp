#include "he3oam/rational.hpp"

#include "he3oam/errors.hpp"

#include <cctype>

namespace he3oam {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix.
BigInt decimal_integer(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return BigInt{std::string(digits.substr(first))};
}

BigInt pow10(long n) {
    BigInt r = 1;
    for (long i = 0; i < n; ++i) r *= 10;
    return r;
}

[[noreturn]] void malformed(std::string_view text) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) malformed(text);

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) malformed(text);
        const BigInt d = decimal_integer(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(decimal_integer(num), d);
    } else {
        std::string_view mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = s.substr(0, e);
            auto exp_text = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 4) malformed(text);
            exponent = std::stol(std::string(exp_text));
            if (exp_negative) exponent = -exponent;
        }
        std::string_view int_part = mantissa, frac_part;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            int_part = mantissa.substr(0, dot);
            frac_part = mantissa.substr(dot + 1);
            if (int_part.empty() && frac_part.empty()) malformed(text);
            if (!int_part.empty() && !all_digits(int_part)) malformed(text);
            if (!frac_part.empty() && !all_digits(frac_part)) malformed(text);
        } else if (!all_digits(int_part)) {
            malformed(text);
        }
        const std::string digits = std::string(int_part) + std::string(frac_part);
        const BigInt num = decimal_integer(digits);
        exponent -= static_cast<long>(frac_part.size());
        value = exponent >= 0 ? Rational(num * pow10(exponent))
                              : Rational(num, pow10(-exponent));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool rational_sqrt(const Rational& r, Rational* root) {
    if (r < 0) return false;
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    if (root) *root = Rational(sn, sd);
    return true;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace he3oam
