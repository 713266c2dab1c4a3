#pragma once

/// Exhaustive census of torus knot free periods and their equivariant
/// boundedness, as flat rows for CSV output.

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <vector>

#include "fpk/torus.hpp"

namespace fpk {

struct CensusRow {
    std::int64_t r;
    std::int64_t s;
    std::int64_t p;
    std::int64_t q_canonical;
    bool bounds;
    std::optional<std::int64_t> witness_divisor;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// One row per (r, s, p) with 2 <= r < s <= max_rs, gcd(r,s) = 1,
/// p in [2, max_p], gcd(p, rs) = 1, sorted lexicographically by (r, s, p).
/// With only_bounding, rows with bounds = false are dropped.
inline std::vector<CensusRow> generate_census(std::int64_t max_rs,
                                              std::int64_t max_p,
                                              bool only_bounding = false) {
    if (max_rs < 2 || max_p < 2) {
        throw InvalidParameters("census: bounds must be >= 2");
    }
    std::vector<CensusRow> rows;
    for (std::int64_t r = 2; r < max_rs; ++r) {
        for (std::int64_t s = r + 1; s <= max_rs; ++s) {
            if (std::gcd(r, s) != 1) continue;
            TorusKnot knot(r, s);
            for (std::int64_t p = 2; p <= max_p; ++p) {
                if (!has_free_period(knot, p)) continue;
                std::optional<std::int64_t> witness =
                    bounding_witness(knot, p);
                if (only_bounding && !witness) continue;
                rows.push_back(CensusRow{r, s, p,
                                         free_period(knot, p).q_canonical,
                                         witness.has_value(), witness});
            }
        }
    }
    return rows;
}

/// RFC-4180-style CSV: header always present, LF line endings, empty
/// witness field when the knot does not bound for that period.
inline void write_census_csv(std::ostream& out,
                             const std::vector<CensusRow>& rows) {
    out << "r,s,p,q_canonical,bounds,witness_divisor\n";
    for (const CensusRow& row : rows) {
        out << row.r << ',' << row.s << ',' << row.p << ',' << row.q_canonical
            << ',' << (row.bounds ? "true" : "false") << ',';
        if (row.witness_divisor) out << *row.witness_divisor;
        out << '\n';
    }
}

}  // namespace fpk
