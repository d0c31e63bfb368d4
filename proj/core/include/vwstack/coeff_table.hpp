#ifndef VWSTACK_COEFF_TABLE_HPP
#define VWSTACK_COEFF_TABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vwstack/qseries.hpp"

namespace vwstack {

/// Exported coefficient list of a QSeries: (exponent numerator, coefficient)
/// pairs in ascending exponent order, zero coefficients omitted.
struct CoeffTable {
    struct Entry {
        std::int64_t exp;
        Rational value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    std::int64_t unit_den = 1;
    std::int64_t lo = 0;
    std::optional<std::int64_t> hi;  // nullopt for an exact series
    std::vector<Entry> coeffs;

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

CoeffTable to_table(const QSeries& s);
QSeries from_table(const CoeffTable& t);

/// {"unit_den": d, "lo": l, "hi": h|null,
///  "coeffs": [{"exp": e, "num": "p", "den": "q"}, ...]}
/// Big integers are written as decimal strings. Output is deterministic.
std::string to_json(const CoeffTable& t, int indent = 2);
CoeffTable table_from_json(const std::string& text);

/// "exp,exponent,num,den" with a header row.
std::string to_csv(const CoeffTable& t);
/// One "q^(e/d)  p/q" line per term.
std::string to_text(const CoeffTable& t);

} // namespace vwstack

#endif
