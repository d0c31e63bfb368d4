#include "vwstack/hilb_euler.hpp"

#include <stdexcept>
#include <string>

#include "vwstack/errors.hpp"
#include "vwstack/modular.hpp"

namespace vwstack {

namespace {

/// Visits every k ∈ Z^n with Σk_i² <= 2N (which contains every k with
/// Q(k) <= N) and accumulates ζ^{Σ i·k_i} into the coefficient of q^{Q(k)}.
class ThetaWalk {
public:
    ThetaWalk(std::int64_t n, std::int64_t order, std::vector<CyclotomicElement>& out)
        : n_(n), order_(order), out_(out) {}

    void run() { visit(0, 0, 0, 0, 0); }

private:
    std::int64_t n_;
    std::int64_t order_;
    std::vector<CyclotomicElement>& out_;

    // q: Σ_{i<=j<=depth} k_i k_j, prefix: Σ k_i, squares: Σ k_i², weight: Σ i·k_i.
    void visit(std::int64_t depth, std::int64_t q, std::int64_t prefix, std::int64_t squares,
               std::int64_t weight) {
        if (depth == n_) {
            if (q <= order_) {
                out_[static_cast<std::size_t>(q)].add_root(weight);
            }
            return;
        }
        std::int64_t bound = 0;
        while (squares + (bound + 1) * (bound + 1) <= 2 * order_) {
            ++bound;
        }
        for (std::int64_t v = -bound; v <= bound; ++v) {
            const std::int64_t sum = prefix + v;
            visit(depth + 1, q + v * sum, sum, squares + v * v, weight + (depth + 1) * v);
        }
    }
};

void require_args(std::int64_t n, std::int64_t order) {
    if (n < 1 || order < 0) {
        throw std::invalid_argument("theta_An: need n >= 1 and order >= 0");
    }
}

} // namespace

std::int64_t AnQuadraticForm::operator()(std::span<const std::int64_t> k) const {
    if (static_cast<std::int64_t>(k.size()) != n) {
        throw std::invalid_argument("AnQuadraticForm: wrong number of coordinates");
    }
    std::int64_t q = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t j = i; j < k.size(); ++j) {
            q += k[i] * k[j];
        }
    }
    return q;
}

std::vector<CyclotomicElement> theta_An_cyclotomic(std::int64_t n, std::int64_t order) {
    require_args(n, order);
    std::vector<CyclotomicElement> coeffs(static_cast<std::size_t>(order) + 1,
                                          CyclotomicElement(n + 2));
    ThetaWalk(n, order, coeffs).run();
    return coeffs;
}

QSeries theta_An(std::int64_t n, std::int64_t order) {
    const std::vector<CyclotomicElement> coeffs = theta_An_cyclotomic(n, order);
    QSeries out(1, 0, order);
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const auto value = coeffs[e].rational_value();
        if (!value) {
            throw NonRationalCoefficient("Θ_" + std::to_string(n) + " coefficient of q^" +
                                         std::to_string(e) + " is not rational");
        }
        out.set_coefficient(static_cast<std::int64_t>(e), *value);
    }
    return out;
}

QSeries hilb_euler_series(std::int64_t chi_resolution, std::span<const std::int64_t> an_points,
                          std::int64_t order) {
    if (order < 0) {
        throw std::invalid_argument("hilb_euler_series: order must be nonnegative");
    }
    QSeries thetas = QSeries::constant(Rational(1), order);
    for (std::int64_t n : an_points) {
        if (n < 1) {
            throw std::invalid_argument("hilb_euler_series: A_n needs n >= 1");
        }
        thetas = thetas * theta_An(n, order);
    }
    return eta_product_pow(-chi_resolution, order, true) * thetas;
}

std::vector<BigInt> colored_partition_counts(std::int64_t chi, std::int64_t order) {
    if (chi < 0 || order < 0) {
        throw std::invalid_argument("colored_partition_counts: need chi >= 0 and order >= 0");
    }
    // Each of the chi colors of each part size is a separate coin.
    std::vector<BigInt> ways(static_cast<std::size_t>(order) + 1, BigInt(0));
    ways[0] = 1;
    for (std::int64_t part = 1; part <= order; ++part) {
        for (std::int64_t color = 0; color < chi; ++color) {
            for (std::int64_t m = part; m <= order; ++m) {
                ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - part)];
            }
        }
    }
    return ways;
}

bool gottsche_check(std::int64_t chi, std::int64_t order) {
    if (chi < 0) {
        throw std::invalid_argument("gottsche_check: chi must be nonnegative");
    }
    const QSeries series = hilb_euler_series(chi, {}, order).shifted(chi).normalized();
    const std::vector<BigInt> counts = colored_partition_counts(chi, order);
    if (series.unit_den() != 1 || series.hi() < order) {
        return false;
    }
    for (std::int64_t m = 0; m <= order; ++m) {
        if (series.coefficient(m) != Rational(counts[static_cast<std::size_t>(m)])) {
            return false;
        }
    }
    return true;
}

} // namespace vwstack
