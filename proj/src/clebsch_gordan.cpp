#include "he3oam/clebsch_gordan.hpp"

#include "he3oam/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace he3oam {

BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    require_valid_pair(j1, m1, "(j1, m1)");
    require_valid_pair(j2, m2, "(j2, m2)");
    require_valid_pair(J, M, "(J, M)");

    const int t1 = j1.twice(), t2 = j2.twice(), tj = J.twice();
    const int u1 = m1.twice(), u2 = m2.twice(), um = M.twice();
    if (u1 + u2 != um) return {};
    if (tj < std::abs(t1 - t2) || tj > t1 + t2) return {};
    if ((t1 + t2 + tj) % 2 != 0) return {};

    // All of these are integers once the checks above pass.
    const int a = (t1 + t2 - tj) / 2;  // j1 + j2 - J
    const int b = (t1 - t2 + tj) / 2;  // j1 - j2 + J
    const int c = (-t1 + t2 + tj) / 2; // -j1 + j2 + J
    const int d = (t1 + t2 + tj) / 2 + 1;
    const int j1_minus_m1 = (t1 - u1) / 2, j1_plus_m1 = (t1 + u1) / 2;
    const int j2_minus_m2 = (t2 - u2) / 2, j2_plus_m2 = (t2 + u2) / 2;
    const int J_minus_M = (tj - um) / 2, J_plus_M = (tj + um) / 2;
    const int shift1 = (tj - t2 + u1) / 2; // J - j2 + m1
    const int shift2 = (tj - t1 - u2) / 2; // J - j1 - m2

    const int k_min = std::max({0, -shift1, -shift2});
    const int k_max = std::min({a, j1_minus_m1, j2_plus_m2});

    Rational sum = 0;
    for (int k = k_min; k <= k_max; ++k) {
        BigInt den = factorial(k) * factorial(a - k) * factorial(j1_minus_m1 - k) *
                     factorial(j2_plus_m2 - k) * factorial(shift1 + k) * factorial(shift2 + k);
        sum += Rational(k % 2 == 0 ? 1 : -1, den);
    }
    if (sum == 0) return {};

    const Rational prefactor =
        Rational((tj + 1) * factorial(a) * factorial(b) * factorial(c), factorial(d)) *
        Rational(factorial(j1_plus_m1) * factorial(j1_minus_m1) * factorial(j2_plus_m2) *
                 factorial(j2_minus_m2) * factorial(J_plus_M) * factorial(J_minus_M));
    return SqrtRational(sum > 0 ? 1 : -1, sum * sum * prefactor);
}

} // namespace he3oam
