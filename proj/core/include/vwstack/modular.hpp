#ifndef VWSTACK_MODULAR_HPP
#define VWSTACK_MODULAR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vwstack/qseries.hpp"
#include "vwstack/rational.hpp"

namespace vwstack {

/// ∏_{n>=1} (1 - q^n)^k to order N. With track_offset the eta offset q^{k/24}
/// is included and the result lives on the 1/24 lattice.
QSeries eta_product_pow(std::int64_t k, std::int64_t order, bool track_offset = false);

/// θ₃(q) = Σ_{k∈Z} q^{k²} to order N.
QSeries theta3(std::int64_t order);

/// Checks q^{1/6} η(q)^{-4} θ₃(q) = ∏(1-q^k)^{-4} Σ q^{k²} to order N, with
/// the eta offset carried explicitly on the 1/24 lattice.
bool eta_theta_identity_check(std::int64_t order);

/// Same check with a caller-supplied q^{1/6} η^{-4} (used to confirm that the
/// check notices a corrupted coefficient).
bool eta_theta_identity_holds(const QSeries& shifted_eta_inverse_fourth, std::int64_t order);

/// A X² + B XY + C Y².
struct QuadFormTriple {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    friend bool operator==(const QuadFormTriple&, const QuadFormTriple&) = default;
};

/// Reduced positive definite forms of discriminant -delta:
/// |B| <= A <= C, and B >= 0 whenever |B| = A or A = C.
std::vector<QuadFormTriple> reduced_forms(std::int64_t delta);

/// Hurwitz class number: reduced forms of discriminant -delta, the classes
/// of λ(X²+Y²) and λ(X²+XY+Y²) weighted 1/2 and 1/3. Throws
/// InvalidDiscriminant for delta <= 0.
Rational hurwitz_H(std::int64_t delta);

/// Number of positive divisors of n (n >= 1).
std::int64_t sigma0(std::int64_t n);

struct LatticeTriple {
    std::int64_t w1 = 0;
    std::int64_t w2 = 0;
    std::int64_t w3 = 0;

    std::int64_t sum() const { return w1 + w2 + w3; }
};

/// w_i > 0, w2 even, c1 + Σw even, strict triangle inequalities.
bool admissible(std::int64_t c1, const LatticeTriple& w);

/// How the pair sum in q^{c1²/4 + Σw_i²/4 - (1/2)Σ w_i w_j} is read.
enum class LatticeExponent {
    kDisplay,      // Σ over i <= j, diagonal included
    kStrictPairs,  // Σ over i < j
};

std::string to_string(LatticeExponent reading);

/// The exponent evaluated term by term from the defining expression.
Rational lattice_exponent_literal(std::int64_t c1, const LatticeTriple& w,
                                  LatticeExponent reading);

/// The simplified exponent: (c1² - s²)/4 for kDisplay and
/// (c1² + 2Σw² - s²)/4 for kStrictPairs, where s = Σw.
Rational lattice_exponent(std::int64_t c1, const LatticeTriple& w, LatticeExponent reading);

/// Sum of q^{exponent} over admissible triples with exponent >= emin, by
/// shells of constant s = Σw. The partial sum is returned as an exact
/// Laurent polynomial on the 1/4 lattice: terms below emin are dropped,
/// not claimed to vanish.
QSeries lattice_sum_C(std::int64_t c1, const Rational& emin,
                      LatticeExponent reading = LatticeExponent::kDisplay);

/// Same sum by a bounded triple loop. Throws InvariantViolation if the
/// literal and simplified exponents of any triple differ.
QSeries lattice_sum_C_bruteforce(std::int64_t c1, const Rational& emin,
                                 LatticeExponent reading = LatticeExponent::kDisplay);

/// Odd parity: Σ_{n>=1} 2H(8n-1) q^{1/4-2n}.
/// Even parity: Σ_{n>=1} (H(4n) + 2H(n) - σ₀(n)/2) q^{-n} - Σ_{n>=1} σ₀(n) q^{-4n}.
/// Terms with exponent below emin are dropped; unit_den 4.
QSeries hurwitz_series(std::int64_t c1_parity, const Rational& emin);

/// (q^{1/6} η^{-4} θ₃)² · lattice_sum_C(c1, emin), with the first factor known
/// to order N. The lattice partial sum is treated as the exact Laurent
/// polynomial it is, so the result is known on [emin, v + N] where v is its
/// lowest exponent. Result on the 1/12 lattice. Throws WindowInconsistent
/// when N < 0 or the window would be empty.
QSeries p112_rhs(std::int64_t c1, const Rational& emin, std::int64_t order,
                 LatticeExponent reading = LatticeExponent::kDisplay);

struct OffsetMatch {
    LatticeExponent reading;
    Rational offset;        // hurwitz(e) = lattice(e - offset)
    std::int64_t compared;  // nonzero coefficients compared
};

struct P112Reconciliation {
    std::int64_t c1 = 0;
    Rational emin;
    QSeries lattice;   // display reading
    QSeries hurwitz;
    std::vector<OffsetMatch> matches;
    std::string report;
};

/// Compares the lattice sum (both readings, every quarter-step offset in
/// [-4, 4]) with the Hurwitz series on the window [emin, c1²/4] and reports
/// which combinations agree.
P112Reconciliation reconcile_p112(std::int64_t c1, const Rational& emin);

} // namespace vwstack

#endif
