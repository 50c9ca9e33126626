#pragma once

// JSON reports (schema 1) and their plain-text renderings.  Every integer is
// written as a decimal string.

#include "taurank/classify.hpp"
#include "taurank/database.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace taurank {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
    Integer p = 7;
    std::optional<Integer> selmer_rank;
    std::optional<Integer> lambda;
    std::string input_text;
};

Json analysis_report(const CurveRecord& rec, const AnalysisOptions& opts);
std::string render_analysis_text(const Json& report);

Json x07_points_report();
std::string render_x07_text(const Json& report);

/// Twist scans of the minimal representatives of the four exceptional
/// j-invariants, matched against `db`.
Json classify_exceptions_report(const std::vector<CurveRecord>& db);
std::string render_classify_text(const Json& report);

Json twist_scan_report(const CurveRecord& rec, const Integer& p, const std::vector<CurveRecord>& db);
std::string render_twist_scan_text(const Json& report);

Json reason_json(const Reason& r);

}  // namespace taurank
