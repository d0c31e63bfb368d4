#include "vwstack/modular.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "vwstack/errors.hpp"

namespace vwstack {

namespace {

std::int64_t floor_to_i64(const Rational& x) {
    const BigInt num = numerator_of(x);
    const BigInt den = denominator_of(x);
    BigInt q = num / den;
    if (num < 0 && q * den != num) {
        q -= 1;
    }
    return q.convert_to<std::int64_t>();
}

std::int64_t ceil_to_i64(const Rational& x) { return -floor_to_i64(-x); }

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) {
        return -1;
    }
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

std::int64_t mod2(std::int64_t x) { return ((x % 2) + 2) % 2; }

void require_order(std::int64_t order, const char* what) {
    if (order < 0) {
        throw std::invalid_argument(std::string(what) + ": order must be nonnegative");
    }
}

/// Largest shell s = Σw that can reach an exponent >= emin.
std::int64_t max_shell(std::int64_t c1, const Rational& emin, LatticeExponent reading) {
    const std::int64_t x = floor_to_i64(Rational(c1 * c1) - 4 * emin);
    if (reading == LatticeExponent::kDisplay) {
        return isqrt(x);
    }
    // With a = s - 2w1 etc. (all >= 1), ab + bc + ca >= 2s - 3.
    return x < 3 ? 0 : (x + 3) / 2;
}

void add_lattice_term(QSeries& out, const Rational& e) {
    const Rational scaled = 4 * e;
    if (denominator_of(scaled) != 1) {
        throw InvariantViolation("lattice exponent " + to_string(e) + " is off the 1/4 lattice");
    }
    out.add_to_coefficient(numerator_of(scaled).convert_to<std::int64_t>(), Rational(1));
}

QSeries theta3_times_product(std::int64_t order) {
    // ∏(1-q^k)^{-4} = ∏_k Σ_j C(j+3, 3) q^{kj}, multiplied factor by factor.
    QSeries product = QSeries::constant(Rational(1), order);
    for (std::int64_t k = 1; k <= order; ++k) {
        QSeries factor(1, 0, order);
        for (std::int64_t j = 0; k * j <= order; ++j) {
            factor.set_coefficient(k * j, Rational(binomial(j + 3, 3)));
        }
        product = product * factor;
    }
    return product * theta3(order);
}

} // namespace

QSeries eta_product_pow(std::int64_t k, std::int64_t order, bool track_offset) {
    require_order(order, "eta_product_pow");
    QSeries result = QSeries::constant(Rational(1), order);
    if (k != 0) {
        QSeries product = QSeries::constant(Rational(1), order);
        for (std::int64_t n = 1; n <= order; ++n) {
            QSeries factor(1, 0, order);
            factor.set_coefficient(0, Rational(1));
            factor.set_coefficient(n, Rational(-1));
            product = product * factor;
        }
        result = int_pow(product, k);
    }
    if (track_offset) {
        result = result.rescaled(24).shifted(k);
    }
    return result;
}

QSeries theta3(std::int64_t order) {
    require_order(order, "theta3");
    QSeries out(1, 0, order);
    for (std::int64_t k = 0; k * k <= order; ++k) {
        out.add_to_coefficient(k * k, Rational(k == 0 ? 1 : 2));
    }
    return out;
}

bool eta_theta_identity_holds(const QSeries& shifted_eta_inverse_fourth, std::int64_t order) {
    require_order(order, "eta_theta_identity_holds");
    const QSeries lhs = shifted_eta_inverse_fourth * theta3(order);
    const QSeries rhs = theta3_times_product(order);
    const std::int64_t d = lhs.unit_den();
    if (lhs.hi() < order * d) {
        return false;
    }
    for (const auto& [e, c] : lhs.terms()) {
        if (e <= order * d && rhs.coefficient_at(Rational(BigInt(e), BigInt(d))) != c) {
            return false;
        }
    }
    for (std::int64_t n = 0; n <= order; ++n) {
        if (lhs.coefficient_at(Rational(n)) != rhs.coefficient(n)) {
            return false;
        }
    }
    return true;
}

bool eta_theta_identity_check(std::int64_t order) {
    const QSeries shifted =
        QSeries::monomial(Rational(1), 4, 24) * eta_product_pow(-4, order, true);
    return eta_theta_identity_holds(shifted, order);
}

std::vector<QuadFormTriple> reduced_forms(std::int64_t delta) {
    if (delta <= 0) {
        throw InvalidDiscriminant("discriminant -" + std::to_string(delta) +
                                  " is not negative");
    }
    std::vector<QuadFormTriple> out;
    if (delta % 4 == 1 || delta % 4 == 2) {
        return out;
    }
    for (std::int64_t a = 1; 3 * a * a <= delta; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            const std::int64_t num = b * b + delta;
            if (num % (4 * a) != 0) {
                continue;
            }
            const std::int64_t c = num / (4 * a);
            if (c < a || (b < 0 && (-b == a || a == c))) {
                continue;
            }
            out.push_back({a, b, c});
        }
    }
    return out;
}

Rational hurwitz_H(std::int64_t delta) {
    Rational total = 0;
    for (const auto& f : reduced_forms(delta)) {
        if (f.a == f.b && f.b == f.c) {
            total += Rational(BigInt(1), BigInt(3));
        } else if (f.b == 0 && f.a == f.c) {
            total += Rational(BigInt(1), BigInt(2));
        } else {
            total += 1;
        }
    }
    return total;
}

std::int64_t sigma0(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("sigma0: n must be positive");
    }
    std::int64_t count = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            count += (d * d == n) ? 1 : 2;
        }
    }
    return count;
}

bool admissible(std::int64_t c1, const LatticeTriple& w) {
    if (w.w1 <= 0 || w.w2 <= 0 || w.w3 <= 0) {
        return false;
    }
    if (mod2(w.w2) != 0 || mod2(c1 + w.sum()) != 0) {
        return false;
    }
    return w.w1 < w.w2 + w.w3 && w.w2 < w.w1 + w.w3 && w.w3 < w.w1 + w.w2;
}

std::string to_string(LatticeExponent reading) {
    return reading == LatticeExponent::kDisplay ? "pairs i<=j" : "pairs i<j";
}

Rational lattice_exponent_literal(std::int64_t c1, const LatticeTriple& w,
                                  LatticeExponent reading) {
    const std::int64_t v[3] = {w.w1, w.w2, w.w3};
    Rational squares = 0;
    Rational pairs = 0;
    for (int i = 0; i < 3; ++i) {
        squares += Rational(v[i] * v[i]);
        for (int j = i; j < 3; ++j) {
            if (j == i && reading == LatticeExponent::kStrictPairs) {
                continue;
            }
            pairs += Rational(v[i] * v[j]);
        }
    }
    return Rational(c1 * c1) / 4 + squares / 4 - pairs / 2;
}

Rational lattice_exponent(std::int64_t c1, const LatticeTriple& w, LatticeExponent reading) {
    const std::int64_t s = w.sum();
    std::int64_t num = c1 * c1 - s * s;
    if (reading == LatticeExponent::kStrictPairs) {
        num += 2 * (w.w1 * w.w1 + w.w2 * w.w2 + w.w3 * w.w3);
    }
    return Rational(BigInt(num), BigInt(4));
}

QSeries lattice_sum_C(std::int64_t c1, const Rational& emin, LatticeExponent reading) {
    QSeries out(4, ceil_to_i64(4 * emin), QSeries::kUnbounded);
    const std::int64_t smax = max_shell(c1, emin, reading);
    for (std::int64_t s = 3; s <= smax; ++s) {
        if (mod2(c1 + s) != 0) {
            continue;
        }
        for (std::int64_t w1 = 1; w1 <= s - 2; ++w1) {
            for (std::int64_t w2 = 2; w1 + w2 <= s - 1; w2 += 2) {
                const LatticeTriple w{w1, w2, s - w1 - w2};
                if (!admissible(c1, w)) {
                    continue;
                }
                const Rational e = lattice_exponent(c1, w, reading);
                if (e >= emin) {
                    add_lattice_term(out, e);
                }
            }
        }
    }
    return out;
}

QSeries lattice_sum_C_bruteforce(std::int64_t c1, const Rational& emin,
                                 LatticeExponent reading) {
    QSeries out(4, ceil_to_i64(4 * emin), QSeries::kUnbounded);
    const std::int64_t bound = max_shell(c1, emin, reading);
    for (std::int64_t w1 = 1; w1 <= bound; ++w1) {
        for (std::int64_t w2 = 1; w2 <= bound; ++w2) {
            for (std::int64_t w3 = 1; w3 <= bound; ++w3) {
                const LatticeTriple w{w1, w2, w3};
                if (!admissible(c1, w)) {
                    continue;
                }
                const Rational literal = lattice_exponent_literal(c1, w, reading);
                if (literal != lattice_exponent(c1, w, reading)) {
                    throw InvariantViolation("lattice exponent simplification fails at (" +
                                             std::to_string(w1) + ", " + std::to_string(w2) +
                                             ", " + std::to_string(w3) + ")");
                }
                if (literal >= emin) {
                    add_lattice_term(out, literal);
                }
            }
        }
    }
    return out;
}

QSeries hurwitz_series(std::int64_t c1_parity, const Rational& emin) {
    QSeries out(4, ceil_to_i64(4 * emin), QSeries::kUnbounded);
    if (mod2(c1_parity) == 1) {
        for (std::int64_t n = 1; Rational(BigInt(1 - 8 * n), BigInt(4)) >= emin; ++n) {
            out.add_to_coefficient(1 - 8 * n, 2 * hurwitz_H(8 * n - 1));
        }
        return out;
    }
    for (std::int64_t n = 1; Rational(-n) >= emin; ++n) {
        out.add_to_coefficient(-4 * n, hurwitz_H(4 * n) + 2 * hurwitz_H(n) -
                                           Rational(BigInt(sigma0(n)), BigInt(2)));
    }
    for (std::int64_t n = 1; Rational(-4 * n) >= emin; ++n) {
        out.add_to_coefficient(-16 * n, Rational(-sigma0(n)));
    }
    return out;
}

QSeries p112_rhs(std::int64_t c1, const Rational& emin, std::int64_t order,
                 LatticeExponent reading) {
    if (order < 0) {
        throw WindowInconsistent("p112: order must be nonnegative");
    }
    const QSeries lattice = lattice_sum_C(c1, emin, reading);
    if (lattice.terms().empty()) {
        throw WindowInconsistent("p112: no lattice terms at or above emin = " + to_string(emin));
    }
    const QSeries eta_part =
        QSeries::monomial(Rational(1), 4, 24) * eta_product_pow(-4, order, true);
    const QSeries factor = eta_part * theta3(order);
    const QSeries product = (factor * factor * lattice).normalized();
    if (12 % product.unit_den() != 0) {
        throw InvariantViolation("p112: offsets did not cancel (unit_den " +
                                 std::to_string(product.unit_den()) + ")");
    }
    return product.rescaled(12);
}

P112Reconciliation reconcile_p112(std::int64_t c1, const Rational& emin) {
    constexpr std::int64_t kMaxShift = 16;  // quarter steps, so offsets in [-4, 4]
    P112Reconciliation out;
    out.c1 = c1;
    out.emin = emin;
    out.lattice = lattice_sum_C(c1, emin, LatticeExponent::kDisplay);
    out.hurwitz = hurwitz_series(c1, emin);
    const Rational top(BigInt(c1 * c1), BigInt(4));

    std::ostringstream report;
    report << "c1 = " << c1 << ", window [" << to_string(emin) << ", " << to_string(top)
           << "]\n";
    for (LatticeExponent reading : {LatticeExponent::kDisplay, LatticeExponent::kStrictPairs}) {
        // Enough lattice terms below emin to cover any shift.
        const QSeries lattice = lattice_sum_C(c1, emin - kMaxShift / 4, reading);
        bool any = false;
        for (std::int64_t k = -kMaxShift; k <= kMaxShift; ++k) {
            const Rational offset(BigInt(k), BigInt(4));
            std::set<std::int64_t> support;  // numerators over 4
            for (const auto& [e, c] : out.hurwitz.terms()) {
                const Rational x(BigInt(e), BigInt(4));
                if (x >= emin && x <= top) {
                    support.insert(e);
                }
            }
            for (const auto& [e, c] : lattice.terms()) {
                const Rational x = Rational(BigInt(e), BigInt(4)) + offset;
                if (x >= emin && x <= top) {
                    support.insert(e + k);
                }
            }
            bool ok = !support.empty();
            for (std::int64_t e : support) {
                const Rational x(BigInt(e), BigInt(4));
                if (out.hurwitz.coefficient_at(x) != lattice.coefficient_at(x - offset)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                any = true;
                out.matches.push_back({reading, offset, static_cast<std::int64_t>(support.size())});
                report << "  " << to_string(reading) << ": agrees after shifting exponents by "
                       << to_string(offset) << " (" << support.size()
                       << " nonzero coefficients compared)\n";
            }
        }
        if (!any) {
            report << "  " << to_string(reading)
                   << ": no quarter-step shift in [-4, 4] reproduces the Hurwitz series\n";
        }
    }
    out.report = report.str();
    return out;
}

} // namespace vwstack
