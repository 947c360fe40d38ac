#pragma once

// JSON/CSV renderings shared by the CLI and the HTTP service.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "synergy/app/run_config.hpp"
#include "synergy/empirical/matrices.hpp"
#include "synergy/recommend/recommend.hpp"
#include "synergy/search/outliers.hpp"
#include "synergy/search/topk.hpp"
#include "synergy/tcg/scan.hpp"

namespace synergy::app {

using nlohmann::json;

/// Shortest round-trip decimal; "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double x);
/// Finite doubles as numbers, everything else as null.
json number_or_null(double x);

json config_json(const RunConfig& config);
json value_json(const Value& value);
json set_json(const SynergySet& set);
json score_json(const SynergyScore& score);
json estimate_json(const empirical::WinRateEstimate& estimate);

json matrix_json(const empirical::PairSynergyMatrix& matrix);
std::string matrix_csv(const empirical::PairSynergyMatrix& matrix);
json counters_json(const empirical::CounterMatrix& counters);
std::string counters_csv(const empirical::CounterMatrix& counters);

json topk_json(const search::TopKResult& result);
json outliers_json(const search::OutlierReport& report);
json scan_json(const tcg::ScanResult& scan);

json recommendations_json(const std::vector<recommend::Recommendation>& recs);
json recommendation_json(const recommend::Recommendation& rec);
json whatif_json(const recommend::WhatIf& whatif);

json sequence_table_json(const std::map<ElementId, empirical::WinRateEstimate>& table);

/// Stable text form: two-space indent, sorted keys, trailing newline.
std::string render(const json& doc);

}  // namespace synergy::app
