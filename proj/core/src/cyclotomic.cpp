#include "vwstack/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace vwstack {

namespace {

/// Quotient of a by the monic polynomial b; the division must be exact.
std::vector<BigInt> exact_divide(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    std::vector<BigInt> q(a.size() - db, BigInt(0));
    for (std::size_t i = a.size(); i-- > db;) {
        const BigInt lead = a[i];
        q[i - db] = lead;
        for (std::size_t j = 0; j <= db; ++j) {
            a[i - db + j] -= lead * b[j];
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (a[i] != 0) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
    }
    return q;
}

std::int64_t mod(std::int64_t k, std::int64_t m) { return ((k % m) + m) % m; }

} // namespace

std::vector<BigInt> cyclotomic_polynomial(std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    }
    static std::mutex lock;
    static std::map<std::int64_t, std::vector<BigInt>> cache;
    {
        std::lock_guard<std::mutex> guard(lock);
        if (auto it = cache.find(m); it != cache.end()) {
            return it->second;
        }
    }
    std::vector<BigInt> p(static_cast<std::size_t>(m) + 1, BigInt(0));
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d == 0) {
            p = exact_divide(p, cyclotomic_polynomial(d));
        }
    }
    std::lock_guard<std::mutex> guard(lock);
    cache.emplace(m, p);
    return p;
}

CyclotomicElement::CyclotomicElement(std::int64_t m) : m_(m) {
    if (m < 1) {
        throw std::invalid_argument("CyclotomicElement: modulus must be positive");
    }
    coords_.assign(static_cast<std::size_t>(m), Rational(0));
}

void CyclotomicElement::add_root(std::int64_t k, const Rational& c) {
    coords_[static_cast<std::size_t>(mod(k, m_))] += c;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (o.m_ != m_) {
        throw std::invalid_argument("CyclotomicElement: modulus mismatch");
    }
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        coords_[j] += o.coords_[j];
    }
    return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.m_ != b.m_) {
        throw std::invalid_argument("CyclotomicElement: modulus mismatch");
    }
    CyclotomicElement out(a.m_);
    for (std::int64_t i = 0; i < a.m_; ++i) {
        if (a.coords_[i] == 0) {
            continue;
        }
        for (std::int64_t j = 0; j < a.m_; ++j) {
            out.coords_[static_cast<std::size_t>((i + j) % a.m_)] += a.coords_[i] * b.coords_[j];
        }
    }
    return out;
}

std::vector<Rational> CyclotomicElement::reduced() const {
    const std::vector<BigInt> phi = cyclotomic_polynomial(m_);
    const std::size_t deg = phi.size() - 1;
    std::vector<Rational> r = coords_;
    for (std::size_t i = r.size(); i-- > deg;) {
        const Rational lead = r[i];
        if (lead == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= deg; ++j) {
            r[i - deg + j] -= lead * Rational(phi[j]);
        }
    }
    r.resize(deg);
    return r;
}

bool CyclotomicElement::is_rational() const {
    const std::vector<Rational> r = reduced();
    for (std::size_t j = 1; j < r.size(); ++j) {
        if (r[j] != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> CyclotomicElement::rational_value() const {
    if (!is_rational()) {
        return std::nullopt;
    }
    return reduced().front();
}

CyclotomicElement CyclotomicElement::conjugate() const {
    CyclotomicElement out(m_);
    for (std::int64_t j = 0; j < m_; ++j) {
        out.coords_[static_cast<std::size_t>(mod(-j, m_))] = coords_[j];
    }
    return out;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.m_ == b.m_ && a.reduced() == b.reduced();
}

} // namespace vwstack
