#ifndef VWSTACK_QSERIES_HPP
#define VWSTACK_QSERIES_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <span>

#include "vwstack/rational.hpp"

namespace vwstack {

/// Truncated formal Laurent/Puiseux series in one variable q with exact
/// rational coefficients.
///
/// Exponents live on the lattice (1/unit_den)·Z and are stored by their
/// integer numerators. The validity window is [lo, hi]:
///   - every coefficient below lo is exactly zero,
///   - every coefficient in [lo, hi] is known (stored, or zero if absent),
///   - every coefficient above hi is unknown.
/// A series with hi == kUnbounded is exact (a Laurent polynomial).
///
/// Windows propagate through every operation, so a result never reports a
/// coefficient that its inputs do not determine.
class QSeries {
public:
    using TermMap = std::map<std::int64_t, Rational>;

    static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;
    /// Relative precision (in exponent units) used when an exact input must
    /// be expanded into an infinite series (invert, sqrt, exp, log).
    static constexpr std::int64_t kDefaultOrder = 24;

    /// The exact zero series.
    QSeries();
    /// All-zero series on the window [lo, hi] with the given exponent unit.
    QSeries(std::int64_t unit_den, std::int64_t lo, std::int64_t hi);

    static QSeries constant(const Rational& c, std::int64_t hi = kUnbounded);
    static QSeries monomial(const Rational& c, std::int64_t exp_num, std::int64_t unit_den = 1,
                            std::int64_t hi = kUnbounded);
    /// coeffs[i] is the coefficient of q^i.
    static QSeries polynomial(std::span<const Rational> coeffs, std::int64_t hi = kUnbounded);
    static QSeries polynomial(std::initializer_list<std::int64_t> coeffs,
                              std::int64_t hi = kUnbounded);

    std::int64_t unit_den() const noexcept { return unit_den_; }
    std::int64_t lo() const noexcept { return lo_; }
    std::int64_t hi() const noexcept { return hi_; }
    bool is_exact() const noexcept { return hi_ >= kUnbounded; }

    /// Exponent numerator of the lowest nonzero coefficient, if any.
    std::optional<std::int64_t> valuation() const;
    /// Largest stored exponent numerator, if any.
    std::optional<std::int64_t> degree() const;

    /// Coefficient of q^(exp_num/unit_den). Zero below lo; throws
    /// OutOfWindow above hi.
    Rational coefficient(std::int64_t exp_num) const;
    /// Coefficient at a rational exponent. Exponents off the lattice are zero.
    Rational coefficient_at(const Rational& exponent) const;

    /// Nonzero coefficients keyed by exponent numerator.
    const TermMap& terms() const noexcept { return terms_; }

    /// Sets a coefficient inside the window; extends the floor when exp_num < lo.
    void set_coefficient(std::int64_t exp_num, const Rational& c);
    void add_to_coefficient(std::int64_t exp_num, const Rational& c);

    /// Forgets every coefficient above new_hi (no-op if new_hi >= hi).
    QSeries truncated(std::int64_t new_hi) const;
    /// Re-expresses the series on the finer lattice (1/new_den)·Z.
    /// new_den must be a multiple of unit_den.
    QSeries rescaled(std::int64_t new_den) const;
    /// Smallest exponent unit that still represents every stored term.
    QSeries normalized() const;
    /// Multiplies by q^(by/unit_den).
    QSeries shifted(std::int64_t by) const;
    QSeries scaled(const Rational& c) const;
    /// Substitutes q -> -q. Requires unit_den == 1.
    QSeries alternated() const;

    /// Structural equality after normalization: same window and coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    std::int64_t unit_den_ = 1;
    std::int64_t lo_ = 0;
    std::int64_t hi_ = kUnbounded;
    TermMap terms_;

    void drop_above_hi();
};

QSeries operator+(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f);
QSeries operator*(const QSeries& f, const QSeries& g);

QSeries add(const QSeries& f, const QSeries& g);
QSeries mul(const QSeries& f, const QSeries& g);

/// Multiplicative inverse. Throws ZeroLeadingCoefficient if the window holds
/// no nonzero coefficient.
QSeries invert(const QSeries& f);

/// Square root with positive leading coefficient. Throws NotASquare unless f
/// is c·q^(2k)·(1 + h) with c the square of a rational.
QSeries sqrt(const QSeries& f);

/// exp(f) for valuation(f) > 0; log(f) for f = 1 + (positive valuation).
/// Both throw BadValuation outside their domain.
QSeries exp_series(const QSeries& f);
QSeries log_series(const QSeries& f);

/// f(g(q)). f must have unit_den 1; g must have strictly positive valuation.
QSeries compose(const QSeries& f, const QSeries& g);

/// f^n by repeated squaring; negative n goes through invert.
QSeries int_pow(const QSeries& f, std::int64_t n);

/// Formal derivative d/dq.
QSeries derivative(const QSeries& f);

Rational coefficient(const QSeries& f, std::int64_t exp_num);

/// True when both series agree on every exponent known to both of them.
bool agree_on_common_window(const QSeries& f, const QSeries& g);

/// The largest exponent numerator (in a common unit) known to both series.
std::int64_t common_hi(const QSeries& f, const QSeries& g);

/// Saturating addition for window bounds.
std::int64_t window_add(std::int64_t a, std::int64_t b);

} // namespace vwstack

#endif
