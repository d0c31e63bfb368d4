#include "vwstack/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "vwstack/errors.hpp"

namespace vwstack {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t window_mul(std::int64_t a, std::int64_t k) {
    if (a >= QSeries::kUnbounded) {
        return QSeries::kUnbounded;
    }
    return a * k;
}

std::pair<QSeries, QSeries> on_common_lattice(const QSeries& f, const QSeries& g) {
    const std::int64_t d = lcm_i64(f.unit_den(), g.unit_den());
    return {f.rescaled(d), g.rescaled(d)};
}

/// Lowest exponent that may carry a nonzero coefficient: the valuation when
/// one exists, else one past the known window.
std::int64_t effective_valuation(const QSeries& f) {
    if (auto v = f.valuation()) {
        return *v;
    }
    return window_add(f.hi(), 1);
}

bool has_nonpositive_term(const QSeries& f) {
    return !f.terms().empty() && f.terms().begin()->first <= 0;
}

std::int64_t relative_precision(const QSeries& f, std::int64_t valuation) {
    return f.is_exact() ? QSeries::kDefaultOrder : f.hi() - valuation;
}

} // namespace

std::int64_t window_add(std::int64_t a, std::int64_t b) {
    if (a >= QSeries::kUnbounded || b >= QSeries::kUnbounded) {
        return QSeries::kUnbounded;
    }
    return std::min(a + b, QSeries::kUnbounded);
}

QSeries::QSeries() = default;

QSeries::QSeries(std::int64_t unit_den, std::int64_t lo, std::int64_t hi)
    : unit_den_(unit_den), lo_(lo), hi_(std::min(hi, kUnbounded)) {
    if (unit_den <= 0) {
        throw std::invalid_argument("QSeries: unit_den must be positive");
    }
}

QSeries QSeries::constant(const Rational& c, std::int64_t hi) {
    QSeries s(1, 0, hi);
    if (hi >= 0) {
        s.set_coefficient(0, c);
    }
    return s;
}

QSeries QSeries::monomial(const Rational& c, std::int64_t exp_num, std::int64_t unit_den,
                          std::int64_t hi) {
    QSeries s(unit_den, std::min<std::int64_t>(exp_num, 0), hi);
    if (exp_num <= s.hi_) {
        s.set_coefficient(exp_num, c);
    }
    return s;
}

QSeries QSeries::polynomial(std::span<const Rational> coeffs, std::int64_t hi) {
    QSeries s(1, 0, hi);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto e = static_cast<std::int64_t>(i);
        if (e > s.hi_) {
            break;
        }
        s.set_coefficient(e, coeffs[i]);
    }
    return s;
}

QSeries QSeries::polynomial(std::initializer_list<std::int64_t> coeffs, std::int64_t hi) {
    std::vector<Rational> rs;
    rs.reserve(coeffs.size());
    for (auto c : coeffs) {
        rs.emplace_back(c);
    }
    return polynomial(rs, hi);
}

std::optional<std::int64_t> QSeries::valuation() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

std::optional<std::int64_t> QSeries::degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

Rational QSeries::coefficient(std::int64_t exp_num) const {
    if (exp_num > hi_) {
        throw OutOfWindow("coefficient requested at exponent " + std::to_string(exp_num) + "/" +
                          std::to_string(unit_den_) + " above the known window (hi = " +
                          std::to_string(hi_) + ")");
    }
    auto it = terms_.find(exp_num);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational QSeries::coefficient_at(const Rational& exponent) const {
    const Rational scaled = exponent * unit_den_;
    if (denominator_of(scaled) != 1) {
        // Off-lattice exponents are zero only if they lie inside the window.
        if (scaled > Rational(hi_)) {
            throw OutOfWindow("coefficient requested above the known window");
        }
        return 0;
    }
    return coefficient(numerator_of(scaled).convert_to<std::int64_t>());
}

void QSeries::set_coefficient(std::int64_t exp_num, const Rational& c) {
    if (exp_num > hi_) {
        throw OutOfWindow("cannot set a coefficient above the window");
    }
    lo_ = std::min(lo_, exp_num);
    if (c == 0) {
        terms_.erase(exp_num);
    } else {
        terms_[exp_num] = c;
    }
}

void QSeries::add_to_coefficient(std::int64_t exp_num, const Rational& c) {
    if (c == 0) {
        return;
    }
    if (exp_num > hi_) {
        throw OutOfWindow("cannot set a coefficient above the window");
    }
    lo_ = std::min(lo_, exp_num);
    auto [it, inserted] = terms_.try_emplace(exp_num, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void QSeries::drop_above_hi() {
    terms_.erase(terms_.upper_bound(hi_), terms_.end());
}

QSeries QSeries::truncated(std::int64_t new_hi) const {
    QSeries out = *this;
    out.hi_ = std::min(hi_, new_hi);
    out.drop_above_hi();
    return out;
}

QSeries QSeries::rescaled(std::int64_t new_den) const {
    if (new_den == unit_den_) {
        return *this;
    }
    if (new_den <= 0 || new_den % unit_den_ != 0) {
        throw std::invalid_argument("rescaled: new unit must be a multiple of the old one");
    }
    const std::int64_t k = new_den / unit_den_;
    QSeries out(new_den, lo_ * k, window_mul(hi_, k));
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e * k, c);
    }
    return out;
}

QSeries QSeries::normalized() const {
    std::int64_t g = unit_den_;
    for (const auto& [e, c] : terms_) {
        g = std::gcd(g, e);
    }
    if (g == 1) {
        return *this;
    }
    QSeries out(unit_den_ / g, floor_div(lo_, g), is_exact() ? kUnbounded : floor_div(hi_, g));
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e / g, c);
    }
    return out;
}

QSeries QSeries::shifted(std::int64_t by) const {
    QSeries out(unit_den_, lo_ + by, window_add(hi_, by));
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace(e + by, c);
    }
    return out;
}

QSeries QSeries::scaled(const Rational& c) const {
    QSeries out(unit_den_, lo_, hi_);
    if (c == 0) {
        return out;
    }
    for (const auto& [e, v] : terms_) {
        out.terms_.emplace(e, v * c);
    }
    return out;
}

QSeries QSeries::alternated() const {
    if (unit_den_ != 1) {
        throw std::invalid_argument("alternated: requires integral exponents");
    }
    QSeries out = *this;
    for (auto& [e, c] : out.terms_) {
        if (e % 2 != 0) {
            c = -c;
        }
    }
    return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
    const QSeries na = a.normalized();
    const QSeries nb = b.normalized();
    return na.unit_den() == nb.unit_den() && na.hi() == nb.hi() && na.terms() == nb.terms();
}

QSeries add(const QSeries& f, const QSeries& g) {
    auto [a, b] = on_common_lattice(f, g);
    QSeries out(a.unit_den(), std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
    for (const auto* s : {&a, &b}) {
        for (const auto& [e, c] : s->terms()) {
            if (e <= out.hi()) {
                out.add_to_coefficient(e, c);
            }
        }
    }
    return out;
}

QSeries mul(const QSeries& f, const QSeries& g) {
    auto [a, b] = on_common_lattice(f, g);
    const std::int64_t hi =
        std::min(window_add(a.hi(), effective_valuation(b)), window_add(b.hi(), effective_valuation(a)));
    QSeries out(a.unit_den(), a.lo() + b.lo(), hi);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            if (ea + eb > hi) {
                break;
            }
            out.add_to_coefficient(ea + eb, ca * cb);
        }
    }
    return out;
}

QSeries operator+(const QSeries& f, const QSeries& g) { return add(f, g); }
QSeries operator-(const QSeries& f) { return f.scaled(Rational(-1)); }
QSeries operator-(const QSeries& f, const QSeries& g) { return add(f, -g); }
QSeries operator*(const QSeries& f, const QSeries& g) { return mul(f, g); }

QSeries invert(const QSeries& f) {
    const auto v = f.valuation();
    if (!v) {
        throw ZeroLeadingCoefficient("invert: no nonzero coefficient in the known window");
    }
    if (f.is_exact() && f.terms().size() == 1) {
        return QSeries::monomial(Rational(1) / f.terms().begin()->second, -*v, f.unit_den());
    }
    const std::int64_t rel = relative_precision(f, *v);
    std::vector<Rational> a(static_cast<std::size_t>(rel) + 1);
    for (std::int64_t k = 0; k <= rel; ++k) {
        a[static_cast<std::size_t>(k)] = f.coefficient(*v + k);
    }
    std::vector<Rational> b(a.size());
    const Rational inv0 = Rational(1) / a[0];
    b[0] = inv0;
    for (std::size_t k = 1; k < a.size(); ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] != 0) {
                acc += a[j] * b[k - j];
            }
        }
        b[k] = -inv0 * acc;
    }
    QSeries out(f.unit_den(), -*v, -*v + rel);
    for (std::size_t k = 0; k < b.size(); ++k) {
        out.set_coefficient(-*v + static_cast<std::int64_t>(k), b[k]);
    }
    return out;
}

QSeries sqrt(const QSeries& f) {
    const auto v = f.valuation();
    if (!v) {
        if (f.is_exact()) {
            return QSeries();
        }
        throw NotASquare("sqrt: leading term is not determined by the known window");
    }
    if (*v % 2 != 0) {
        throw NotASquare("sqrt: leading exponent is odd in exponent units");
    }
    const auto root0 = rational_sqrt(f.terms().begin()->second);
    if (!root0) {
        throw NotASquare("sqrt: leading coefficient " + to_string(f.terms().begin()->second) +
                         " is not the square of a rational");
    }
    const std::int64_t half = *v / 2;
    if (f.is_exact() && f.terms().size() == 1) {
        return QSeries::monomial(*root0, half, f.unit_den());
    }
    const std::int64_t rel = relative_precision(f, *v);
    std::vector<Rational> a(static_cast<std::size_t>(rel) + 1);
    for (std::int64_t k = 0; k <= rel; ++k) {
        a[static_cast<std::size_t>(k)] = f.coefficient(*v + k);
    }
    std::vector<Rational> b(a.size());
    b[0] = *root0;
    const Rational inv_two_b0 = Rational(1) / (2 * b[0]);
    for (std::size_t k = 1; k < a.size(); ++k) {
        Rational acc = a[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= b[j] * b[k - j];
        }
        b[k] = acc * inv_two_b0;
    }
    QSeries out(f.unit_den(), half, half + rel);
    for (std::size_t k = 0; k < b.size(); ++k) {
        out.set_coefficient(half + static_cast<std::int64_t>(k), b[k]);
    }
    return out;
}

QSeries exp_series(const QSeries& f) {
    if (has_nonpositive_term(f) || f.hi() < 0) {
        throw BadValuation("exp_series: argument must have strictly positive valuation");
    }
    if (f.terms().empty() && f.is_exact()) {
        return QSeries::constant(Rational(1));
    }
    const std::int64_t n_max = f.is_exact() ? QSeries::kDefaultOrder : f.hi();
    std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
    for (const auto& [e, c] : f.terms()) {
        if (e <= n_max) {
            a[static_cast<std::size_t>(e)] = c;
        }
    }
    std::vector<Rational> g(a.size());
    g[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Rational acc = 0;
        for (std::int64_t k = 1; k <= n; ++k) {
            const auto& ak = a[static_cast<std::size_t>(k)];
            if (ak != 0) {
                acc += Rational(k) * ak * g[static_cast<std::size_t>(n - k)];
            }
        }
        g[static_cast<std::size_t>(n)] = acc / n;
    }
    QSeries out(f.unit_den(), 0, n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        out.set_coefficient(n, g[static_cast<std::size_t>(n)]);
    }
    return out;
}

QSeries log_series(const QSeries& f) {
    if (f.hi() < 0 || f.coefficient(0) != 1 ||
        (!f.terms().empty() && f.terms().begin()->first < 0)) {
        throw BadValuation("log_series: argument must be 1 + (positive valuation)");
    }
    if (f.is_exact() && f.terms().size() == 1) {
        return QSeries();
    }
    const std::int64_t n_max = f.is_exact() ? QSeries::kDefaultOrder : f.hi();
    std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
    for (const auto& [e, c] : f.terms()) {
        if (e <= n_max) {
            a[static_cast<std::size_t>(e)] = c;
        }
    }
    std::vector<Rational> l(a.size());
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Rational acc = Rational(n) * a[static_cast<std::size_t>(n)];
        for (std::int64_t k = 1; k < n; ++k) {
            const auto& an = a[static_cast<std::size_t>(n - k)];
            if (an != 0) {
                acc -= Rational(k) * l[static_cast<std::size_t>(k)] * an;
            }
        }
        l[static_cast<std::size_t>(n)] = acc / n;
    }
    QSeries out(f.unit_den(), 0, n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        out.set_coefficient(n, l[static_cast<std::size_t>(n)]);
    }
    return out;
}

QSeries compose(const QSeries& f, const QSeries& g) {
    if (f.unit_den() != 1) {
        throw BadValuation("compose: outer series must have integral exponents");
    }
    if (has_nonpositive_term(g) || g.hi() < 0) {
        throw BadValuation("compose: inner series must have strictly positive valuation");
    }
    const std::int64_t vg = effective_valuation(g);

    if (g.terms().empty() && g.is_exact()) {
        // g == 0 exactly: only the constant term of f survives.
        if (!f.terms().empty() && f.terms().begin()->first < 0) {
            throw BadValuation("compose: Laurent outer series evaluated at zero");
        }
        return f.hi() >= 0 ? QSeries::constant(f.coefficient(0)) : QSeries(1, 0, -1);
    }

    QSeries result;
    if (!f.terms().empty()) {
        const std::int64_t low = std::min<std::int64_t>(f.terms().begin()->first, 0);
        const std::int64_t top = f.terms().rbegin()->first;
        // Horner on x^{-low} f(x), then multiply back by g^{low}.
        QSeries acc = QSeries::constant(f.coefficient(top));
        for (std::int64_t k = top - 1; k >= low; --k) {
            acc = acc * g + QSeries::constant(f.coefficient(k));
        }
        result = low < 0 ? acc * int_pow(g, low) : acc;
    }
    result = result.rescaled(lcm_i64(result.unit_den(), g.unit_den()));
    if (!f.is_exact()) {
        // The unknown tail of f starts at x^{hi+1}, i.e. at q^{(hi+1)·v_g}.
        const std::int64_t tail = vg >= QSeries::kUnbounded
                                      ? QSeries::kUnbounded
                                      : (f.hi() + 1) * vg - 1;
        result = result.truncated(tail);
    }
    return result;
}

QSeries int_pow(const QSeries& f, std::int64_t n) {
    if (n == 0) {
        return QSeries::constant(Rational(1));
    }
    if (n < 0) {
        return int_pow(invert(f), -n);
    }
    QSeries base = f;
    QSeries result = QSeries::constant(Rational(1));
    auto e = static_cast<std::uint64_t>(n);
    while (e != 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e != 0) {
            base = base * base;
        }
    }
    return result;
}

QSeries derivative(const QSeries& f) {
    const std::int64_t d = f.unit_den();
    QSeries out(d, f.lo() - d, window_add(f.hi(), -d));
    for (const auto& [e, c] : f.terms()) {
        if (e != 0) {
            out.set_coefficient(e - d, c * Rational(BigInt(e), BigInt(d)));
        }
    }
    return out;
}

Rational coefficient(const QSeries& f, std::int64_t exp_num) { return f.coefficient(exp_num); }

std::int64_t common_hi(const QSeries& f, const QSeries& g) {
    auto [a, b] = on_common_lattice(f, g);
    return std::min(a.hi(), b.hi());
}

bool agree_on_common_window(const QSeries& f, const QSeries& g) {
    auto [a, b] = on_common_lattice(f, g);
    const std::int64_t hi = std::min(a.hi(), b.hi());
    for (const auto* s : {&a, &b}) {
        for (const auto& [e, c] : s->terms()) {
            if (e > hi) {
                break;
            }
            if (a.coefficient(e) != b.coefficient(e)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace vwstack
