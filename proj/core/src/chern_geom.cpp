#include "vwstack/chern_geom.hpp"

#include <stdexcept>
#include <string>

#include "vwstack/errors.hpp"

namespace vwstack {

namespace {

void require_rank(const DivisorClass& a, std::size_t rank) {
    if (a.size() != rank) {
        throw std::invalid_argument("divisor class has " + std::to_string(a.size()) +
                                    " coordinates, basis has " + std::to_string(rank));
    }
}

SurfaceCohomologyClass scalar(const Rational& c, std::size_t rank) {
    return {c, DivisorClass(rank, Rational(0)), Rational(0)};
}

} // namespace

QuinticInvariants quintic_invariants(std::int64_t c1_sq, std::int64_t c2_top) {
    if ((c1_sq + c2_top) % 12 != 0) {
        throw NotIntegral("c1² + c2 = " + std::to_string(c1_sq + c2_top) +
                          " is not divisible by 12");
    }
    QuinticInvariants out;
    out.g_c = 1 + c1_sq;
    out.p_g = (c1_sq + c2_top) / 12 - 1;
    out.h0_k2 = out.p_g + out.g_c;
    return out;
}

IntersectionForm::IntersectionForm(std::vector<std::vector<Rational>> gram)
    : gram_(std::move(gram)) {
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if (gram_[i].size() != gram_.size()) {
            throw std::invalid_argument("intersection matrix must be square");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gram_[i][j] != gram_[j][i]) {
                throw std::invalid_argument("intersection matrix must be symmetric");
            }
        }
    }
}

Rational IntersectionForm::dot(const DivisorClass& a, const DivisorClass& b) const {
    require_rank(a, rank());
    require_rank(b, rank());
    Rational total = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rank(); ++j) {
            total += a[i] * gram_[i][j] * b[j];
        }
    }
    return total;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_rank(b, a.size());
    DivisorClass out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

DivisorClass operator*(const Rational& s, const DivisorClass& a) {
    DivisorClass out = a;
    for (auto& x : out) {
        x *= s;
    }
    return out;
}

Rank2ChernPair twist_chern_rank2(const Rank2ChernPair& e, const DivisorClass& l,
                                 const IntersectionForm& form) {
    return {e.c1 + Rational(2) * l, e.c2 + form.dot(e.c1, l) + form.dot(l, l)};
}

SurfaceCohomologyClass multiply(const SurfaceCohomologyClass& a, const SurfaceCohomologyClass& b,
                                const IntersectionForm& form) {
    return {a.deg0 * b.deg0, a.deg0 * b.deg2 + b.deg0 * a.deg2,
            a.deg0 * b.deg4 + b.deg0 * a.deg4 + form.dot(a.deg2, b.deg2)};
}

SurfaceCohomologyClass inverse(const SurfaceCohomologyClass& a, const IntersectionForm& form) {
    if (a.deg0 == 0) {
        throw ZeroLeadingCoefficient("cohomology class with zero degree-0 part is not invertible");
    }
    // a = a0 (1 + x) with x nilpotent: 1/a = (1 - x + x²) / a0.
    const Rational inv0 = Rational(1) / a.deg0;
    const SurfaceCohomologyClass x{Rational(0), inv0 * a.deg2, inv0 * a.deg4};
    const SurfaceCohomologyClass x2 = multiply(x, x, form);
    const std::size_t rank = form.rank();
    SurfaceCohomologyClass out = scalar(Rational(1), rank);
    out.deg2 = Rational(-1) * x.deg2;
    out.deg4 = x2.deg4 - x.deg4;
    return {inv0 * out.deg0, inv0 * out.deg2, inv0 * out.deg4};
}

Rational vertical_degree2_integral(const SurfaceChernData& data) {
    const Rational poly = Rational(data.res_c2) + 14 * Rational(data.mixed) +
                          4 * Rational(data.res_c1_sq);
    return pow(Rational(-2), -data.dim_param) * poly;
}

Rational vertical_degree2_via_ratio(const SurfaceChernData& data) {
    // Basis {c̃1, c1}.
    const IntersectionForm form({{Rational(data.res_c1_sq), Rational(data.mixed)},
                                 {Rational(data.mixed), Rational(data.c1_sq)}});
    const Rank2ChernPair tangent{{Rational(1), Rational(0)}, Rational(data.res_c2)};
    const DivisorClass k2{Rational(0), Rational(-2)};
    const DivisorClass k_inv{Rational(0), Rational(1)};
    const Rank2ChernPair t_k2 = twist_chern_rank2(tangent, k2, form);
    const Rank2ChernPair t_k_inv = twist_chern_rank2(tangent, k_inv, form);

    const SurfaceCohomologyClass dual_tangent{Rational(1), Rational(-1) * tangent.c1, tangent.c2};
    const Rational half(BigInt(1), BigInt(2));
    const Rational quarter(BigInt(1), BigInt(4));
    const SurfaceCohomologyClass twisted_k2{Rational(4), Rational(4) * (half * t_k2.c1),
                                            4 * quarter * t_k2.c2};
    const SurfaceCohomologyClass twisted_k_inv{Rational(1), Rational(-1) * t_k_inv.c1,
                                               t_k_inv.c2};

    const SurfaceCohomologyClass ratio = multiply(
        multiply(dual_tangent, twisted_k2, form), inverse(twisted_k_inv, form), form);
    return pow(Rational(-2), -data.dim_param) * ratio.deg4;
}

bool vertical_degree2_routes_agree(const SurfaceChernData& data) {
    return vertical_degree2_integral(data) == vertical_degree2_via_ratio(data);
}

Rational ade_point_contribution() { return Rational(1); }

} // namespace vwstack
