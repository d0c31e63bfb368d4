#ifndef VWSTACK_ROOT_STACK_HPP
#define VWSTACK_ROOT_STACK_HPP

#include <cstdint>
#include <string>

#include "vwstack/bi_series.hpp"
#include "vwstack/qseries.hpp"
#include "vwstack/taut_hilb.hpp"

namespace vwstack {

enum class PerNSign {
    kConstant,     // +1 for every n
    kAlternating,  // (-1)^n
};

/// Reconciles the monopole integrals with the closed form:
///     direct_n = global_constant · sign(n) · [q^n] closed_form(A = 1).
struct NormalizationRecord {
    Rational global_constant = 1;
    PerNSign per_n_sign = PerNSign::kConstant;

    friend bool operator==(const NormalizationRecord&, const NormalizationRecord&) = default;
};

std::string describe(const NormalizationRecord& record);

struct MonopoleSeriesConfig {
    std::int64_t g = 6;      // genus of the canonical curve (6 for the quintic)
    std::int64_t order = 12; // truncation order N in q
    std::int64_t r = 1;      // gerbe order
    NormalizationRecord normalization;
};

/// (ω-2)^{n+1-2g} (1+ω)^{n-g} (1-ω)^{-(n+g)} (1-2ω)^g to order ω^n, with the
/// θ-exponentials already resolved (theta_coeff = 0).
TautIntegrand monopole_integrand(std::int64_t n, std::int64_t g);

/// Σ_{n<=N} q^n ∫_{C^[n]} monopole_integrand(n, g), integrated on the
/// r-gerby Hilbert schemes (the value does not depend on r).
QSeries monopole_series_direct(const MonopoleSeriesConfig& cfg);

/// The integrand of the virtual-normal-bundle reciprocal before any
/// simplification:
///     2^n c_{1/2}((K²)^[n]) c_{-1}(T) c_{-1}(K^[n]) / (c(K^[n]) c((K²)^[n]))
/// on the canonical curve (deg K|_C = g-1, deg K²|_C = 2g-2).
TautIntegrand localization_integrand(std::int64_t n, std::int64_t g, std::int64_t r);

/// Σ_{n<=N} q^n ∫ localization_integrand(n, g, r). Equals
/// (-2)^{2g-1} · monopole_series_direct evaluated at -q.
QSeries localization_series(const MonopoleSeriesConfig& cfg);

/// F(x, t) = (1-2x)^g / ((x-2)^{2g-1} (1-x²)^g) · (1-x) / (1 - x - t(x²-x-2)),
/// expanded with BiSeries arithmetic only.
BiSeries bivariate_rational(std::int64_t g, std::int64_t nx, std::int64_t nt);

/// Roots of (1+q)x² - (1+q)x - 2q: x0 tends to zero as q -> 0, x1 to one.
struct ResidueRoots {
    QSeries x0;
    QSeries x1;
    QSeries discriminant_root;  // sqrt(1 + 8q/(1+q))
};
ResidueRoots residue_roots(std::int64_t order);

/// Diagonal of F via the residue at x0:
///     (1-2x0)^g / ((x0-2)^{2g-1} (1+x0)^g (1-x0)^{g-1}) · (-1) / ((1+q)(x0-x1)).
QSeries diagonal_via_residue(std::int64_t g, std::int64_t order);

/// global_constant · (1-q)^{g-1} · (1 + (1-3q)/sqrt((1-q)(1-9q)))^{1-g},
/// with the coefficient of q^n further multiplied by the per-n sign.
QSeries closed_form(std::int64_t g, std::int64_t order, const NormalizationRecord& normalization);

/// Determines the normalization from orders 0, 1, 2. Throws
/// NoConsistentNormalization unless exactly one of the four candidates
/// {±c} x {+1, (-1)^n} reconciles all three.
NormalizationRecord sign_normalization_probe(std::int64_t g);

} // namespace vwstack

#endif
