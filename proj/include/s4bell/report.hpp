#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "s4bell/analysis.hpp"

namespace s4bell {

/// Seed, cover count, and the labeled vectors with their group elements in cycle notation.
nlohmann::json orbit_json(const Orbit& orbit, const GroupTable& group);
std::string orbit_text(const Orbit& orbit, const GroupTable& group);

nlohmann::json histogram_json(const StrategyHistogram& histogram);
/// "c,count" rows for c = 0 .. max(20, c_max).
std::string histogram_csv(const StrategyHistogram& histogram);

/// Keys "s,t" mapping to answer strings "ab".
nlohmann::json winning_table_json(const WinningTable& table);

nlohmann::json analysis_json(const Analysis& analysis);
/// Human-readable report; eigenvalues are rounded to two decimals.
std::string analysis_text(const Analysis& analysis);
std::string game_text(const Analysis& analysis);

nlohmann::json scan_json(const std::vector<ScanEntry>& entries, std::size_t top);
std::string scan_text(const std::vector<ScanEntry>& entries, std::size_t top);

}  // namespace s4bell
