#pragma once

#include <json.hpp>
#include <string>

#include "twinsieve/count_report.hpp"
#include "twinsieve/series_lab.hpp"

namespace twinsieve::cli {

using ordered_json = nlohmann::ordered_json;

// 128-bit values: a plain JSON number while the value fits in 64 bits, a
// decimal string beyond (a double would silently round).
ordered_json json_u128(u128 v);

// One CountReport as a JSON object with a fixed key order, as one CSV row
// under report_csv_header(), or as one key=value text line.  Formula fields
// that were refused (enumeration or factor-table budget) serialize as
// null / empty cell / "-".
ordered_json report_json(const CountReport& r);
std::string report_csv_header();
std::string report_csv_row(const CountReport& r);
std::string report_text_row(const CountReport& r);

// "%.15f" with negative zero normalized: the fixed-point form used for the
// double-precision series columns.
std::string format_fixed15(double v);

// Exact decimal expansion of a rational to 15 significant digits (round half
// away from zero), trailing zeros trimmed, plain notation (the values this
// serves all live in [0, 10)).
std::string format_rational_sig15(const ExactRational& v);

// 15-significant-digit form for doubles (series-E rows past the exact
// window): "%.15g" with negative zero normalized.
std::string format_double_sig15(double v);

}  // namespace twinsieve::cli
