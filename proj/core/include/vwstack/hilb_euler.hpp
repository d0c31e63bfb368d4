#ifndef VWSTACK_HILB_EULER_HPP
#define VWSTACK_HILB_EULER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "vwstack/cyclotomic.hpp"
#include "vwstack/qseries.hpp"

namespace vwstack {

/// Q(k) = Σ_{1<=i<=j<=n} k_i k_j = ((Σk_i)² + Σk_i²) / 2.
struct AnQuadraticForm {
    std::int64_t n = 1;

    std::int64_t operator()(std::span<const std::int64_t> k) const;
};

/// Coefficients of Θ_n(q) = Σ_{k∈Z^n} ζ_{n+2}^{k_1+2k_2+...+nk_n} q^{Q(k)} as
/// elements of Q[ζ_{n+2}], one per power q^0 .. q^N.
std::vector<CyclotomicElement> theta_An_cyclotomic(std::int64_t n, std::int64_t order);

/// Θ_n(q) to order N with rational coefficients. Throws
/// NonRationalCoefficient if some accumulated coefficient is irrational.
QSeries theta_An(std::int64_t n, std::int64_t order);

/// η(q)^{-χ} ∏_i Θ_{n_i}(q) to order N: the Euler characteristics of the
/// Hilbert schemes, coefficient of q^{m - χ/24}, on the 1/24 lattice.
QSeries hilb_euler_series(std::int64_t chi_resolution, std::span<const std::int64_t> an_points,
                          std::int64_t order);

/// Number of χ-colored partitions of m for m = 0 .. N.
std::vector<BigInt> colored_partition_counts(std::int64_t chi, std::int64_t order);

/// Compares the smooth case of hilb_euler_series with colored_partition_counts.
bool gottsche_check(std::int64_t chi, std::int64_t order);

} // namespace vwstack

#endif
