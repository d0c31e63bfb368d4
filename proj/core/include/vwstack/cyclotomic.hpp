#ifndef VWSTACK_CYCLOTOMIC_HPP
#define VWSTACK_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "vwstack/rational.hpp"

namespace vwstack {

/// Coefficients (constant term first) of the m-th cyclotomic polynomial,
/// obtained by dividing x^m - 1 by Φ_d for every proper divisor d of m.
std::vector<BigInt> cyclotomic_polynomial(std::int64_t m);

/// Σ_j coords[j] ζ_m^j, an element of the group ring Q[Z/m]. Different
/// coordinate vectors can name the same number; reduced() picks the
/// representative of degree < φ(m) obtained modulo Φ_m.
class CyclotomicElement {
public:
    explicit CyclotomicElement(std::int64_t m);

    std::int64_t modulus() const noexcept { return m_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    /// Adds c·ζ_m^k for any integer k.
    void add_root(std::int64_t k, const Rational& c = Rational(1));

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);

    /// Coefficients of the remainder modulo Φ_m (length φ(m)).
    std::vector<Rational> reduced() const;
    bool is_rational() const;
    /// The rational value when is_rational().
    std::optional<Rational> rational_value() const;
    /// Image under ζ -> ζ^{-1}.
    CyclotomicElement conjugate() const;

    /// Equality as complex numbers.
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

private:
    std::int64_t m_;
    std::vector<Rational> coords_;
};

} // namespace vwstack

#endif
