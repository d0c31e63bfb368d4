#include "vwstack/coeff_table.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vwstack {

namespace {

std::string exponent_string(std::int64_t e, std::int64_t d) {
    return to_string(Rational(BigInt(e), BigInt(d)));
}

} // namespace

CoeffTable to_table(const QSeries& s) {
    CoeffTable t;
    t.unit_den = s.unit_den();
    t.lo = s.lo();
    if (!s.is_exact()) {
        t.hi = s.hi();
    }
    for (const auto& [e, c] : s.terms()) {
        t.coeffs.push_back({e, c});
    }
    return t;
}

QSeries from_table(const CoeffTable& t) {
    QSeries s(t.unit_den, t.lo, t.hi.value_or(QSeries::kUnbounded));
    for (const auto& entry : t.coeffs) {
        s.set_coefficient(entry.exp, entry.value);
    }
    return s;
}

std::string to_json(const CoeffTable& t, int indent) {
    nlohmann::ordered_json j;
    j["unit_den"] = t.unit_den;
    j["lo"] = t.lo;
    j["hi"] = t.hi ? nlohmann::ordered_json(*t.hi) : nlohmann::ordered_json(nullptr);
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& entry : t.coeffs) {
        nlohmann::ordered_json c;
        c["exp"] = entry.exp;
        c["num"] = numerator_of(entry.value).str();
        c["den"] = denominator_of(entry.value).str();
        coeffs.push_back(std::move(c));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump(indent);
}

CoeffTable table_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    CoeffTable t;
    t.unit_den = j.at("unit_den").get<std::int64_t>();
    if (t.unit_den <= 0) {
        throw std::invalid_argument("CoeffTable: unit_den must be positive");
    }
    t.lo = j.value("lo", std::int64_t{0});
    if (j.contains("hi") && !j.at("hi").is_null()) {
        t.hi = j.at("hi").get<std::int64_t>();
    }
    std::int64_t min_exp = t.lo;
    for (const auto& c : j.at("coeffs")) {
        const auto num = c.at("num").get<std::string>();
        const auto den = c.at("den").get<std::string>();
        const Rational value = parse_rational(num + "/" + den);
        const auto e = c.at("exp").get<std::int64_t>();
        min_exp = std::min(min_exp, e);
        t.coeffs.push_back({e, value});
    }
    t.lo = min_exp;
    return t;
}

std::string to_csv(const CoeffTable& t) {
    std::ostringstream out;
    out << "exp,exponent,num,den\n";
    for (const auto& entry : t.coeffs) {
        out << entry.exp << ',' << exponent_string(entry.exp, t.unit_den) << ','
            << numerator_of(entry.value).str() << ',' << denominator_of(entry.value).str() << '\n';
    }
    return out.str();
}

std::string to_text(const CoeffTable& t) {
    std::ostringstream out;
    for (const auto& entry : t.coeffs) {
        out << "q^(" << exponent_string(entry.exp, t.unit_den) << ")  " << to_string(entry.value)
            << '\n';
    }
    if (t.hi) {
        out << "+ O(q^(" << exponent_string(*t.hi + 1, t.unit_den) << "))\n";
    }
    return out.str();
}

} // namespace vwstack
