#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qss/analysis/efficiency.hpp"
#include "qss/analysis/security.hpp"
#include "qss/protocol/types.hpp"

namespace qss::cli {

// Doubles are rounded through a 12-significant-digit decimal representation
// before serialization so that emitted numbers are short and stable.
double round12(double v);
std::string format_g(double v);  // %.12g

nlohmann::ordered_json report_json(const protocol::SessionConfig& cfg,
                                   const std::string& attack_display,
                                   const protocol::SessionReport& report,
                                   const analysis::EfficiencyReport& eff);

// CSV bodies use %.12g numbers and LF line endings.
std::string curve_csv(const std::vector<analysis::CurvePoint>& curve);
std::string efficiency_csv(const protocol::SessionConfig& cfg,
                           const analysis::EfficiencyReport& eff);
std::string table_text(const std::vector<analysis::DenseCodingCase>& rows);

void write_file(const std::string& path, const std::string& content);  // throws on failure

}  // namespace qss::cli
