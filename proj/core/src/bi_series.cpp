#include "vwstack/bi_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "vwstack/errors.hpp"

namespace vwstack {

BiSeries::BiSeries(std::int64_t nx, std::int64_t nt) : nx_(nx), nt_(nt) {
    if (nx < 0 || nt < 0) {
        throw std::invalid_argument("BiSeries: truncation orders must be nonnegative");
    }
    c_.resize(static_cast<std::size_t>((nx + 1) * (nt + 1)));
}

BiSeries BiSeries::constant(const Rational& c, std::int64_t nx, std::int64_t nt) {
    BiSeries s(nx, nt);
    s.set_coefficient(0, 0, c);
    return s;
}

BiSeries BiSeries::x(std::int64_t nx, std::int64_t nt) {
    BiSeries s(nx, nt);
    if (nx >= 1) {
        s.set_coefficient(1, 0, Rational(1));
    }
    return s;
}

BiSeries BiSeries::t(std::int64_t nx, std::int64_t nt) {
    BiSeries s(nx, nt);
    if (nt >= 1) {
        s.set_coefficient(0, 1, Rational(1));
    }
    return s;
}

std::size_t BiSeries::index(std::int64_t i, std::int64_t j) const {
    if (i < 0 || j < 0 || i > nx_ || j > nt_) {
        throw OutOfWindow("BiSeries: index outside the truncation window");
    }
    return static_cast<std::size_t>(i * (nt_ + 1) + j);
}

const Rational& BiSeries::coefficient(std::int64_t i, std::int64_t j) const {
    return c_[index(i, j)];
}

void BiSeries::set_coefficient(std::int64_t i, std::int64_t j, const Rational& c) {
    c_[index(i, j)] = c;
}

void BiSeries::require_same_window(const BiSeries& o) const {
    if (nx_ != o.nx_ || nt_ != o.nt_) {
        throw std::invalid_argument("BiSeries: mismatched truncation windows");
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    require_same_window(o);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    require_same_window(o);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    return *this;
}

BiSeries BiSeries::scaled(const Rational& c) const {
    BiSeries out = *this;
    for (auto& v : out.c_) {
        v *= c;
    }
    return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    a.require_same_window(b);
    BiSeries out(a.nx_, a.nt_);
    for (std::int64_t i1 = 0; i1 <= a.nx_; ++i1) {
        for (std::int64_t j1 = 0; j1 <= a.nt_; ++j1) {
            const Rational& ca = a.coefficient(i1, j1);
            if (ca == 0) {
                continue;
            }
            for (std::int64_t i2 = 0; i1 + i2 <= a.nx_; ++i2) {
                for (std::int64_t j2 = 0; j1 + j2 <= a.nt_; ++j2) {
                    const Rational& cb = b.coefficient(i2, j2);
                    if (cb != 0) {
                        out.c_[out.index(i1 + i2, j1 + j2)] += ca * cb;
                    }
                }
            }
        }
    }
    return out;
}

BiSeries BiSeries::inverse() const {
    const Rational& a00 = coefficient(0, 0);
    if (a00 == 0) {
        throw ZeroLeadingCoefficient("BiSeries::inverse: zero constant term");
    }
    const Rational inv0 = Rational(1) / a00;
    BiSeries out(nx_, nt_);
    // b_{ij} = -(1/a00) * sum_{(k,l) != (0,0)} a_{kl} b_{i-k, j-l}, filled in
    // lexicographic order so every referenced b is already known.
    for (std::int64_t i = 0; i <= nx_; ++i) {
        for (std::int64_t j = 0; j <= nt_; ++j) {
            if (i == 0 && j == 0) {
                out.set_coefficient(0, 0, inv0);
                continue;
            }
            Rational acc = 0;
            for (std::int64_t k = 0; k <= i; ++k) {
                for (std::int64_t l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) {
                        continue;
                    }
                    const Rational& akl = coefficient(k, l);
                    if (akl != 0) {
                        acc += akl * out.coefficient(i - k, j - l);
                    }
                }
            }
            out.set_coefficient(i, j, -inv0 * acc);
        }
    }
    return out;
}

BiSeries BiSeries::pow(std::int64_t n) const {
    if (n < 0) {
        return inverse().pow(-n);
    }
    BiSeries result = constant(Rational(1), nx_, nt_);
    BiSeries base = *this;
    while (n != 0) {
        if (n & 1) {
            result = result * base;
        }
        n >>= 1;
        if (n != 0) {
            base = base * base;
        }
    }
    return result;
}

QSeries bi_diagonal(const BiSeries& f) {
    const std::int64_t n = std::min(f.nx(), f.nt());
    QSeries out(1, 0, n);
    for (std::int64_t k = 0; k <= n; ++k) {
        out.set_coefficient(k, f.coefficient(k, k));
    }
    return out;
}

} // namespace vwstack
