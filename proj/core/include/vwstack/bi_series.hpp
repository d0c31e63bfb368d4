#ifndef VWSTACK_BI_SERIES_HPP
#define VWSTACK_BI_SERIES_HPP

#include <cstdint>
#include <vector>

#include "vwstack/qseries.hpp"
#include "vwstack/rational.hpp"

namespace vwstack {

/// Truncated power series in two variables x, t with a rectangular window
/// 0 <= i <= nx, 0 <= j <= nt (coefficient of x^i t^j). Used as a brute-force
/// oracle, so it deliberately shares no arithmetic with QSeries.
class BiSeries {
public:
    BiSeries(std::int64_t nx, std::int64_t nt);

    static BiSeries constant(const Rational& c, std::int64_t nx, std::int64_t nt);
    static BiSeries x(std::int64_t nx, std::int64_t nt);
    static BiSeries t(std::int64_t nx, std::int64_t nt);

    std::int64_t nx() const noexcept { return nx_; }
    std::int64_t nt() const noexcept { return nt_; }

    const Rational& coefficient(std::int64_t i, std::int64_t j) const;
    void set_coefficient(std::int64_t i, std::int64_t j, const Rational& c);

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries scaled(const Rational& c) const;

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    /// Requires a nonzero constant term.
    BiSeries inverse() const;
    BiSeries pow(std::int64_t n) const;

private:
    std::int64_t nx_;
    std::int64_t nt_;
    std::vector<Rational> c_;  // row-major, index i * (nt + 1) + j

    std::size_t index(std::int64_t i, std::int64_t j) const;
    void require_same_window(const BiSeries& o) const;
};

/// Diagonal extraction: sum over n of [x^n t^n] F · q^n, for n up to
/// min(nx, nt).
QSeries bi_diagonal(const BiSeries& f);

} // namespace vwstack

#endif
