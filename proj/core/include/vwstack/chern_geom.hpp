#ifndef VWSTACK_CHERN_GEOM_HPP
#define VWSTACK_CHERN_GEOM_HPP

#include <cstdint>
#include <vector>

#include "vwstack/rational.hpp"

namespace vwstack {

struct QuinticInvariants {
    std::int64_t g_c = 0;    // genus of the canonical curve, 1 + c1²
    std::int64_t p_g = 0;    // geometric genus, (c1² + c2)/12 - 1
    std::int64_t h0_k2 = 0;  // h^0(K²) = p_g + g_C

    friend bool operator==(const QuinticInvariants&, const QuinticInvariants&) = default;
};

/// Throws NotIntegral unless 12 divides c1² + c2.
QuinticInvariants quintic_invariants(std::int64_t c1_sq, std::int64_t c2_top);

/// Coordinates of a divisor class in a fixed basis of H².
using DivisorClass = std::vector<Rational>;

/// Symmetric intersection matrix on the chosen basis.
class IntersectionForm {
public:
    explicit IntersectionForm(std::vector<std::vector<Rational>> gram);

    std::size_t rank() const noexcept { return gram_.size(); }
    Rational dot(const DivisorClass& a, const DivisorClass& b) const;

private:
    std::vector<std::vector<Rational>> gram_;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Rational& s, const DivisorClass& a);

/// Chern classes of a rank-2 bundle: c1 as a divisor class, c2 as a number.
struct Rank2ChernPair {
    DivisorClass c1;
    Rational c2;

    friend bool operator==(const Rank2ChernPair&, const Rank2ChernPair&) = default;
};

/// E ⊗ L: c1 + 2 c1(L), c2 + c1·c1(L) + c1(L)².
Rank2ChernPair twist_chern_rank2(const Rank2ChernPair& e, const DivisorClass& l,
                                 const IntersectionForm& form);

/// Intersection data on the resolution S̃ of the stack. mixed is c̃1·c1 and
/// dim_param the exponent in the (-2)^{-dim} prefactor.
struct SurfaceChernData {
    std::int64_t c1_sq = 0;
    std::int64_t c2_top = 0;
    std::int64_t res_c1_sq = 0;
    std::int64_t res_c2 = 0;
    std::int64_t mixed = 0;
    std::int64_t dim_param = 0;
};

/// Element of H^0 ⊕ H^2 ⊕ H^4 of a surface with H^4 identified with Q by
/// integration; products above degree 4 vanish.
struct SurfaceCohomologyClass {
    Rational deg0;
    DivisorClass deg2;
    Rational deg4;
};

SurfaceCohomologyClass multiply(const SurfaceCohomologyClass& a, const SurfaceCohomologyClass& b,
                                const IntersectionForm& form);
/// Requires deg0 != 0.
SurfaceCohomologyClass inverse(const SurfaceCohomologyClass& a, const IntersectionForm& form);

/// The closed polynomial (-2)^{-dim} (c̃2 + 14 c̃1·c1 + 4 c̃1²).
Rational vertical_degree2_integral(const SurfaceChernData& data);

/// (-2)^{-dim} ∫ c_{-1}(T) · 4 c_{1/2}(T⊗K²) / c_{-1}(T⊗K^{-1}), evaluated by
/// degree-truncated division in the basis {c̃1, c1} with the twisted classes
/// from twist_chern_rank2.
Rational vertical_degree2_via_ratio(const SurfaceChernData& data);

/// Whether the two routes above give the same number.
bool vertical_degree2_routes_agree(const SurfaceChernData& data);

/// ∫_pt 1 for the length-one Hilbert scheme at an A_1 point.
Rational ade_point_contribution();

} // namespace vwstack

#endif
