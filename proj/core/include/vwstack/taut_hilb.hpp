#ifndef VWSTACK_TAUT_HILB_HPP
#define VWSTACK_TAUT_HILB_HPP

#include <cstdint>

#include "vwstack/qseries.hpp"
#include "vwstack/rational.hpp"

namespace vwstack {

/// Integrand over the Hilbert scheme C^[n] of a genus-g curve, written as
///     omega_part(ω) · exp(theta_coeff(ω) · θ),
/// where ω is the class of C^[n-1] ⊂ C^[n] and θ the pulled-back theta
/// divisor. On a μ_r-gerby curve both series are expressed in the
/// pulled-back classes r^n·ω and r^n·θ.
struct TautIntegrand {
    QSeries omega_part = QSeries::constant(Rational(1));
    QSeries theta_coeff;

    /// Product of integrands: ω-parts multiply, θ-exponents add.
    friend TautIntegrand operator*(const TautIntegrand& a, const TautIntegrand& b);
    /// Reciprocal: invert the ω-part, negate the θ-exponent.
    TautIntegrand inverse() const;
    /// Forget everything above ω^order.
    TautIntegrand truncated(std::int64_t order) const;
};

struct GenusParams {
    std::int64_t g = 0;  // curve genus
    std::int64_t n = 0;  // number of points
    std::int64_t r = 1;  // gerbe order, 1 for an ordinary curve
};

/// ∫_{C^[n]} θ^i/i! · ω^{n-i} = C(g, i). Throws IndexOutOfRange unless 0 <= i <= n.
Rational pair_theta_omega(std::int64_t g, std::int64_t n, std::int64_t i);

/// Evaluates the integrand by substituting exp(αθ) ~ (1 + αω)^g and reading
/// off the coefficient of ω^n. Throws WindowTooSmall if either series is not
/// known through ω^n.
Rational integrate(const TautIntegrand& integrand, const GenusParams& params);

/// Independent route: expands exp(αθ) = Σ α^i θ^i/i! and pairs termwise.
Rational integrate_direct(const TautIntegrand& integrand, const GenusParams& params);

/// Integrates the r-scaled integrand over the gerby Hilbert scheme, i.e.
/// expands in the classes ω, θ of the (μ_r)^n-gerbe (ω -> r^n ω,
/// θ -> r^n θ) and pairs with ∫ θ^i/i! ω^{n-i} = C(g, i) / r^{n·n}; returns
/// whether that equals the unscaled integral.
bool gerby_scaling_check(const TautIntegrand& integrand, std::int64_t g, std::int64_t n,
                         std::int64_t r);
Rational integrate_gerby_expanded(const TautIntegrand& integrand, std::int64_t g,
                                  std::int64_t n, std::int64_t r);

/// c_t(T_{C^[n]}) = (1 + ωt)^{n+1-g} · exp(-tθ / (1 + ωt)), to order ω^n.
/// For r > 1 the classes are the pulled-back ones (see TautIntegrand).
TautIntegrand chern_tangent(std::int64_t g, std::int64_t n, std::int64_t r,
                            const Rational& t_scalar);

/// c_t(L^[n]) = (1 - ωt)^{n+g-1-deg L} · exp(tθ / (1 - ωt)), to order ω^n.
TautIntegrand chern_taut_bundle(std::int64_t g, std::int64_t n, std::int64_t r,
                                std::int64_t deg_l, const Rational& t_scalar);

} // namespace vwstack

#endif
