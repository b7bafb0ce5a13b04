#pragma once

#include <string>

#include "pcc/census.hpp"

namespace pcc {

// JSON object with fixed key order (q, b, c, method, proportion, interval?,
// constants?, seed?, samples?).  Rationals travel as exact "num/den" strings,
// a_L as a plain integer string.  A constants block shares the row's interval:
// serialization drops constants.limit_interval and parsing restores it from
// the top-level "interval" field (falling back to the point proportion).
std::string report_to_json(const CensusReport& r, int indent = 2);
CensusReport report_from_json(const std::string& text);

// CSV row "c,method,proportion" with the proportion at 60 significant
// decimal digits (LIMIT rows carry the interval midpoint).
std::string report_csv_row(const CensusReport& r);

// Single line: the exact fraction for point values, the decimal interval for
// LIMIT rows.
std::string report_to_text(const CensusReport& r);

}  // namespace pcc
