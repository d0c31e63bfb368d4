#ifndef VWSTACK_ORACLES_HPP
#define VWSTACK_ORACLES_HPP

// Reference implementations used only to check the library. Each one takes
// a different road to the same numbers and shares no code with the routine
// it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "vwstack/qseries.hpp"
#include "vwstack/rational.hpp"

namespace vwstack::oracle {

/// p(0..N) by Euler's pentagonal-number recurrence.
std::vector<BigInt> partition_numbers(std::int64_t order);

/// Coefficients of ∏(1-q^n)^{-chi} through q^N from the recurrence
/// m·a(m) = chi Σ_{k=1}^{m} σ₁(k) a(m-k).
std::vector<BigInt> colored_partitions(std::int64_t chi, std::int64_t order);

/// H(delta) from every positive definite form with A, C <= delta: each form
/// is reduced by explicit SL₂(Z) steps, and each class is weighted by
/// 2 / #{γ ∈ SL₂(Z), entries in {-1,0,1}, fixing its reduced form}.
Rational hurwitz_nonreduced(std::int64_t delta);

/// Θ₁ through q^N: q^{k²} weighted by 1 for k = 0 and by
/// ζ^k + ζ^{-k} = 2cos(2πk/3) ∈ {2, -1} for each pair ±k.
std::vector<Rational> theta1_cosine(std::int64_t order);

/// Number of (x, y) ∈ Z² with x² + y² = n.
std::int64_t r2(std::int64_t n);

/// Random series with small integer coefficients on the window [lo, lo+len].
QSeries random_series(std::mt19937_64& rng, std::int64_t unit_den, std::int64_t lo,
                      std::int64_t len, bool nonzero_leading);

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

} // namespace vwstack::oracle

#endif
