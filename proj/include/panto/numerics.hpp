#pragma once

#include <span>

#include "panto/rational.hpp"

namespace panto {

/// Hard ceiling for factorial arguments; the pipeline never needs more than
/// the moment depth plus a couple of levels.
inline constexpr int kFactorialBound = 64;

/// Exact n!. Throws std::invalid_argument when n < 0 or n > bound.
BigInt factorial(int n, int bound = kFactorialBound);

/// Exact binomial coefficient C(n, k), zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Exact base^e for base >= 1; negative exponents give 1/base^|e|.
Rational pow_int(int base, long long e);

/// Composite trapezoid over uniformly spaced samples. Needs at least two.
double trapezoid(std::span<const double> samples, double h);

/// Same rule in exact arithmetic; used by the verifier when both the samples
/// and the spacing are rational so residuals stay exact until reporting.
Rational trapezoid_exact(std::span<const Rational> samples, const Rational& h);

}  // namespace panto
