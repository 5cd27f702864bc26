#ifndef WRZ_REPORT_HPP
#define WRZ_REPORT_HPP

#include <string>

#include <json.hpp>

#include "wrz/theorems.hpp"

namespace wrz {

// JSON with string-encoded rationals; schema documented in the README.
nlohmann::json report_to_json(const VerificationReport& rep);

// Fixed CSV layout:
// family,partition,k,d_lambda,predicted,exact,origin_mult,degenerate,pass
std::string csv_header();
std::string report_to_csv_row(const VerificationReport& rep);

std::string render_report_text(const VerificationReport& rep);

} // namespace wrz

#endif
