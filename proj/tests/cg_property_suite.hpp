#pragma once

#include "he3oam/clebsch_gordan.hpp"

#include <cstdlib>
#include <string>

namespace he3oam::testing {

struct PropertyTally {
    int orthonormality = 0;
    int completeness = 0;
    int symmetry = 0;
    int failures = 0;
    std::string first_failure;

    int cases() const { return orthonormality + completeness + symmetry; }

    void record(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
};

/// Exhaustive exact checks of the CG unitarity sums and the exchange-of-sign
/// symmetry for every j1, j2 up to max_twice_j / 2.
inline PropertyTally check_cg_properties(int max_twice_j) {
    auto H = HalfInt::from_twice;
    PropertyTally tally;
    auto label = [](int a, int b, int c, int d, int e, int f) {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
               std::to_string(d) + "," + std::to_string(e) + "," + std::to_string(f) + ")/2";
    };
    for (int j1 = 0; j1 <= max_twice_j; ++j1) {
        for (int j2 = 0; j2 <= max_twice_j; ++j2) {
            const int j_lo = std::abs(j1 - j2), j_hi = j1 + j2;

            // Sum over (J, M) at fixed (m1, m2).
            for (int m1 = -j1; m1 <= j1; m1 += 2) {
                for (int m2 = -j2; m2 <= j2; m2 += 2) {
                    Rational sum = 0;
                    for (int J = j_lo; J <= j_hi; J += 2)
                        for (int M = -J; M <= J; M += 2)
                            sum += clebsch_gordan(H(j1), H(m1), H(j2), H(m2), H(J), H(M)).squared();
                    ++tally.orthonormality;
                    tally.record(sum == 1, "orthonormality at j1,m1,j2,m2=" + label(j1, m1, j2, m2, 0, 0));
                }
            }

            for (int J = j_lo; J <= j_hi; J += 2) {
                for (int M = -J; M <= J; M += 2) {
                    // Sum over (m1, m2) at fixed (J, M).
                    Rational sum = 0;
                    for (int m1 = -j1; m1 <= j1; m1 += 2)
                        for (int m2 = -j2; m2 <= j2; m2 += 2)
                            sum += clebsch_gordan(H(j1), H(m1), H(j2), H(m2), H(J), H(M)).squared();
                    ++tally.completeness;
                    tally.record(sum == 1, "completeness at J,M=" + label(j1, 0, j2, 0, J, M));

                    for (int m1 = -j1; m1 <= j1; m1 += 2) {
                        const int m2 = M - m1;
                        if (std::abs(m2) > j2) continue;
                        const auto lhs = clebsch_gordan(H(j1), H(m1), H(j2), H(m2), H(J), H(M));
                        const auto rhs = clebsch_gordan(H(j1), H(-m1), H(j2), H(-m2), H(J), H(-M));
                        const int phase = ((j1 + j2 - J) / 2) % 2 == 0 ? 1 : -1;
                        ++tally.symmetry;
                        tally.record(lhs == (phase > 0 ? rhs : -rhs), "symmetry at " + label(j1, m1, j2, m2, J, M));
                    }
                }
            }
        }
    }
    return tally;
}

} // namespace he3oam::testing
