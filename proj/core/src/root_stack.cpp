#include "vwstack/root_stack.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "vwstack/errors.hpp"

namespace vwstack {

namespace {

/// a + b·q known through q^order.
QSeries linear(std::int64_t a, std::int64_t b, std::int64_t order) {
    return QSeries::polynomial({a, b}, order);
}

void require_config(const MonopoleSeriesConfig& cfg) {
    if (cfg.g < 2 || cfg.order < 0 || cfg.r < 1) {
        throw std::invalid_argument("monopole series needs g >= 2, order >= 0, r >= 1");
    }
}

Rational integrate_on_gerby_hilbert_scheme(const TautIntegrand& integrand, std::int64_t g,
                                           std::int64_t n, std::int64_t r) {
    if (r == 1) {
        return integrate(integrand, {g, n, 1});
    }
    return integrate_gerby_expanded(integrand, g, n, r);
}

Rational sign_for(PerNSign s, std::int64_t n) {
    return (s == PerNSign::kAlternating && n % 2 != 0) ? Rational(-1) : Rational(1);
}

} // namespace

std::string describe(const NormalizationRecord& record) {
    std::ostringstream out;
    out << "global_constant = " << to_string(record.global_constant) << ", per_n_sign = "
        << (record.per_n_sign == PerNSign::kAlternating ? "(-1)^n" : "+1");
    return out.str();
}

TautIntegrand monopole_integrand(std::int64_t n, std::int64_t g) {
    if (n < 0 || g < 0) {
        throw std::invalid_argument("monopole_integrand: n and g must be nonnegative");
    }
    const QSeries product = int_pow(linear(-2, 1, n), n + 1 - 2 * g) *
                            int_pow(linear(1, 1, n), n - g) *
                            int_pow(linear(1, -1, n), -(n + g)) *
                            int_pow(linear(1, -2, n), g);
    TautIntegrand out;
    out.omega_part = product.truncated(n);
    return out;
}

QSeries monopole_series_direct(const MonopoleSeriesConfig& cfg) {
    require_config(cfg);
    QSeries out(1, 0, cfg.order);
    for (std::int64_t n = 0; n <= cfg.order; ++n) {
        out.set_coefficient(
            n, integrate_on_gerby_hilbert_scheme(monopole_integrand(n, cfg.g), cfg.g, n, cfg.r));
    }
    return out;
}

TautIntegrand localization_integrand(std::int64_t n, std::int64_t g, std::int64_t r) {
    const std::int64_t deg_k = g - 1;
    const std::int64_t deg_k2 = 2 * g - 2;
    const Rational half(BigInt(1), BigInt(2));

    const TautIntegrand numerator = chern_taut_bundle(g, n, r, deg_k2, half) *
                                    chern_tangent(g, n, r, Rational(-1)) *
                                    chern_taut_bundle(g, n, r, deg_k, Rational(-1));
    const TautIntegrand denominator =
        chern_taut_bundle(g, n, r, deg_k, Rational(1)) *
        chern_taut_bundle(g, n, r, deg_k2, Rational(1));

    TautIntegrand out = (numerator * denominator.inverse()).truncated(n);
    out.omega_part = out.omega_part.scaled(pow(Rational(2), n));
    return out;
}

QSeries localization_series(const MonopoleSeriesConfig& cfg) {
    require_config(cfg);
    QSeries out(1, 0, cfg.order);
    for (std::int64_t n = 0; n <= cfg.order; ++n) {
        out.set_coefficient(n, integrate_on_gerby_hilbert_scheme(
                                   localization_integrand(n, cfg.g, cfg.r), cfg.g, n, cfg.r));
    }
    return out;
}

BiSeries bivariate_rational(std::int64_t g, std::int64_t nx, std::int64_t nt) {
    if (g < 0) {
        throw std::invalid_argument("bivariate_rational: g must be nonnegative");
    }
    const BiSeries one = BiSeries::constant(Rational(1), nx, nt);
    const BiSeries two = BiSeries::constant(Rational(2), nx, nt);
    const BiSeries x = BiSeries::x(nx, nt);
    const BiSeries t = BiSeries::t(nx, nt);

    const BiSeries numerator = (one - x.scaled(Rational(2))).pow(g) * (one - x);
    const BiSeries denominator = (x - two).pow(2 * g - 1) * (one - x * x).pow(g) *
                                 (one - x - t * (x * x - x - two));
    return numerator * denominator.inverse();
}

ResidueRoots residue_roots(std::int64_t order) {
    if (order < 0) {
        throw std::invalid_argument("residue_roots: order must be nonnegative");
    }
    const QSeries one = QSeries::constant(Rational(1), order);
    const QSeries radicand = one + linear(0, 8, order) * invert(linear(1, 1, order));
    const QSeries root = sqrt(radicand);
    const Rational half(BigInt(1), BigInt(2));
    return {(one - root).scaled(half), (one + root).scaled(half), root};
}

QSeries diagonal_via_residue(std::int64_t g, std::int64_t order) {
    if (g < 0) {
        throw std::invalid_argument("diagonal_via_residue: g must be nonnegative");
    }
    const ResidueRoots roots = residue_roots(order);

    // The rational part as a power series in x; x0 has positive valuation.
    const QSeries in_x = int_pow(linear(1, -2, order), g) *
                         int_pow(linear(-2, 1, order), -(2 * g - 1)) *
                         int_pow(linear(1, 1, order), -g) *
                         int_pow(linear(1, -1, order), -(g - 1));
    const QSeries at_x0 = compose(in_x.truncated(order), roots.x0);
    const QSeries denominator = linear(1, 1, order) * (roots.x0 - roots.x1);
    return (at_x0 * invert(denominator)).scaled(Rational(-1)).truncated(order);
}

QSeries closed_form(std::int64_t g, std::int64_t order, const NormalizationRecord& normalization) {
    if (g < 0 || order < 0) {
        throw std::invalid_argument("closed_form: g and order must be nonnegative");
    }
    const QSeries one_minus_q = linear(1, -1, order);
    const QSeries root = sqrt(one_minus_q * linear(1, -9, order));
    const QSeries inner = QSeries::constant(Rational(1), order) + linear(1, -3, order) * invert(root);
    QSeries out = (int_pow(one_minus_q, g - 1) * int_pow(inner, 1 - g)).truncated(order);
    out = out.scaled(normalization.global_constant);
    if (normalization.per_n_sign == PerNSign::kAlternating) {
        out = out.alternated();
    }
    return out;
}

NormalizationRecord sign_normalization_probe(std::int64_t g) {
    constexpr std::int64_t kProbeOrder = 2;
    const QSeries direct = monopole_series_direct({g, kProbeOrder, 1, {}});
    const QSeries reference = closed_form(g, kProbeOrder, {});

    const Rational ref0 = reference.coefficient(0);
    if (ref0 == 0) {
        throw NoConsistentNormalization("closed form has a vanishing constant term");
    }
    const Rational c = direct.coefficient(0) / ref0;

    std::vector<NormalizationRecord> matches;
    for (const Rational& constant : {c, Rational(-c)}) {
        for (PerNSign sign : {PerNSign::kConstant, PerNSign::kAlternating}) {
            bool ok = true;
            for (std::int64_t n = 0; n <= kProbeOrder && ok; ++n) {
                ok = direct.coefficient(n) == constant * sign_for(sign, n) * reference.coefficient(n);
            }
            if (ok) {
                matches.push_back({constant, sign});
            }
        }
    }
    if (matches.size() != 1) {
        throw NoConsistentNormalization(
            "normalization probe at g = " + std::to_string(g) + " found " +
            std::to_string(matches.size()) + " consistent candidates (expected exactly one)");
    }
    return matches.front();
}

} // namespace vwstack
