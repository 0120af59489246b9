#pragma once

#include "he3oam/half_int.hpp"
#include "he3oam/sqrt_rational.hpp"

namespace he3oam {

/// Exact Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the
/// Condon-Shortley phase convention, from the Racah single-sum formula.
///
/// Returns zero when M != m1 + m2, when J is outside |j1-j2| .. j1+j2, or
/// when j1 + j2 + J is not an integer. Throws InvalidQuantumNumber when any
/// (j, m) pair is itself invalid.
SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// n! over big integers. n must be nonnegative.
BigInt factorial(int n);

} // namespace he3oam
