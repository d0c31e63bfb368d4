#include "vwstack/taut_hilb.hpp"

#include <stdexcept>
#include <string>

#include "vwstack/errors.hpp"

namespace vwstack {

namespace {

void require_params(std::int64_t g, std::int64_t n, std::int64_t r) {
    if (g < 0 || n < 0 || r < 1) {
        throw std::invalid_argument("genus and point count must be nonnegative, gerbe order >= 1");
    }
}

/// Brings a series in ω onto integral exponents and checks it is known
/// through ω^n.
QSeries in_omega(const QSeries& s, std::int64_t n, const char* what) {
    QSeries out = s.normalized();
    if (out.unit_den() != 1) {
        throw std::invalid_argument(std::string(what) + " must have integral ω-exponents");
    }
    if (out.hi() < n) {
        throw WindowTooSmall(std::string(what) + " is known only through ω^" +
                             std::to_string(out.hi()) + ", need ω^" + std::to_string(n));
    }
    if (!out.terms().empty() && out.terms().begin()->first < 0) {
        throw std::invalid_argument(std::string(what) + " has negative powers of ω");
    }
    return out;
}

QSeries omega_line(const Rational& constant, const Rational& slope, std::int64_t order) {
    std::vector<Rational> c{constant, slope};
    return QSeries::polynomial(c, order);
}

} // namespace

TautIntegrand operator*(const TautIntegrand& a, const TautIntegrand& b) {
    return {a.omega_part * b.omega_part, a.theta_coeff + b.theta_coeff};
}

TautIntegrand TautIntegrand::inverse() const { return {invert(omega_part), -theta_coeff}; }

TautIntegrand TautIntegrand::truncated(std::int64_t order) const {
    return {omega_part.truncated(order), theta_coeff.truncated(order)};
}

Rational pair_theta_omega(std::int64_t g, std::int64_t n, std::int64_t i) {
    require_params(g, n, 1);
    if (i < 0 || i > n) {
        throw IndexOutOfRange("pair_theta_omega: need 0 <= i <= n, got i = " + std::to_string(i));
    }
    return Rational(binomial(g, i));
}

Rational integrate(const TautIntegrand& integrand, const GenusParams& p) {
    require_params(p.g, p.n, p.r);
    const QSeries omega = in_omega(integrand.omega_part, p.n, "omega_part");
    const QSeries alpha = in_omega(integrand.theta_coeff, p.n, "theta_coeff");
    // exp(α θ) ~ (1 + α ω)^g under the pairing.
    const QSeries base = QSeries::constant(Rational(1)) + alpha * QSeries::monomial(Rational(1), 1);
    const QSeries full = omega * int_pow(base.truncated(p.n), p.g);
    return full.coefficient(p.n);
}

Rational integrate_direct(const TautIntegrand& integrand, const GenusParams& p) {
    require_params(p.g, p.n, p.r);
    const QSeries omega = in_omega(integrand.omega_part, p.n, "omega_part");
    const QSeries alpha = in_omega(integrand.theta_coeff, p.n, "theta_coeff").truncated(p.n);
    Rational total = 0;
    QSeries alpha_pow = QSeries::constant(Rational(1));
    for (std::int64_t i = 0; i <= p.n; ++i) {
        if (i > 0) {
            alpha_pow = alpha_pow * alpha;
        }
        const Rational pairing = pair_theta_omega(p.g, p.n, i);
        if (pairing != 0) {
            total += pairing * (omega * alpha_pow).coefficient(p.n - i);
        }
    }
    return total;
}

Rational integrate_gerby_expanded(const TautIntegrand& integrand, std::int64_t g,
                                  std::int64_t n, std::int64_t r) {
    require_params(g, n, r);
    const QSeries omega = in_omega(integrand.omega_part, n, "omega_part").truncated(n);
    const QSeries alpha = in_omega(integrand.theta_coeff, n, "theta_coeff").truncated(n);
    const BigInt scale = pow(BigInt(r), static_cast<std::uint64_t>(n));
    const QSeries scaled_omega = QSeries::monomial(Rational(scale), 1);

    // Integrand in the gerby classes: Ω(ω) · exp(A(ω) θ).
    const QSeries big_omega = compose(omega, scaled_omega);
    const QSeries big_alpha = compose(alpha, scaled_omega).scaled(Rational(scale));

    // ∫ θ^i/i! ω^{n-i} over the gerby Hilbert scheme is C(g, i) / scale^n.
    const Rational volume = Rational(1) / Rational(pow(scale, static_cast<std::uint64_t>(n)));
    Rational total = 0;
    QSeries alpha_pow = QSeries::constant(Rational(1));
    for (std::int64_t i = 0; i <= n; ++i) {
        if (i > 0) {
            alpha_pow = alpha_pow * big_alpha;
        }
        const Rational pairing = Rational(binomial(g, i)) * volume;
        if (pairing != 0) {
            total += pairing * (big_omega * alpha_pow).coefficient(n - i);
        }
    }
    return total;
}

bool gerby_scaling_check(const TautIntegrand& integrand, std::int64_t g, std::int64_t n,
                         std::int64_t r) {
    return integrate_gerby_expanded(integrand, g, n, r) == integrate(integrand, {g, n, 1});
}

TautIntegrand chern_tangent(std::int64_t g, std::int64_t n, std::int64_t r,
                            const Rational& t_scalar) {
    require_params(g, n, r);
    const QSeries line = omega_line(Rational(1), t_scalar, n);
    TautIntegrand out;
    out.omega_part = int_pow(line, n + 1 - g).truncated(n);
    out.theta_coeff = invert(line).scaled(-t_scalar).truncated(n);
    return out;
}

TautIntegrand chern_taut_bundle(std::int64_t g, std::int64_t n, std::int64_t r,
                                std::int64_t deg_l, const Rational& t_scalar) {
    require_params(g, n, r);
    const QSeries line = omega_line(Rational(1), -t_scalar, n);
    TautIntegrand out;
    out.omega_part = int_pow(line, n + g - 1 - deg_l).truncated(n);
    out.theta_coeff = invert(line).scaled(t_scalar).truncated(n);
    return out;
}

} // namespace vwstack
