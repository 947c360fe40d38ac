#include "synergy/app/run_config.hpp"

#include <cmath>

#include "app/reports.hpp"
#include "json.hpp"
#include "synergy/error.hpp"

namespace synergy::app {

using nlohmann::json;

void RunConfig::validate() const {
  auto fail = [](const std::string& why) { throw Error(Errc::InvalidConfig, why); };
  if (!(z > 0.0) || !std::isfinite(z)) fail("z must be a positive number");
  if (threshold && !(*threshold >= 0.0)) fail("threshold must be >= 0");
  if (k < 1) fail("k must be >= 1");
  if (!(ally_weight >= 0.0) || !(counter_weight >= 0.0)) fail("weights must be >= 0");
  if (ally_weight == 0.0 && counter_weight == 0.0) fail("weights cannot both be zero");
  if (copy_cap && *copy_cap < 1) fail("copy cap must be >= 1");
  if (size_min < 2) fail("min size must be >= 2");
  if (size_max < size_min) fail("max size must be >= min size");
  try {
    search::parse_strategy(strategy, seed);
  } catch (const Error& e) {
    fail(e.detail());
  }
}

RunConfig RunConfig::resolved(BaselineKind default_baseline, std::uint32_t default_copy_cap) const {
  RunConfig out = *this;
  if (!out.baseline) out.baseline = default_baseline;
  if (!out.copy_cap) out.copy_cap = default_copy_cap;
  if (!out.threshold) out.threshold = search::default_threshold(outlier);
  return out;
}

double RunConfig::effective_threshold() const { return threshold.value_or(search::default_threshold(outlier)); }

search::SearchStrategy RunConfig::search_strategy() const { return search::parse_strategy(strategy, seed); }

std::string RunConfig::to_json() const { return config_json(*this).dump(2) + "\n"; }

RunConfig RunConfig::from_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw Error(Errc::InvalidConfig, "config is not a json object");
  if (doc.contains("config") && doc["config"].is_object()) doc = doc["config"];
  RunConfig c;
  try {
    if (auto it = doc.find("baseline"); it != doc.end() && !it->is_null()) c.baseline = parse_baseline(it->get<std::string>());
    if (auto it = doc.find("min_games"); it != doc.end()) c.min_games = it->get<std::uint64_t>();
    if (auto it = doc.find("z"); it != doc.end()) c.z = it->get<double>();
    if (auto it = doc.find("outlier"); it != doc.end()) c.outlier = search::parse_outlier_method(it->get<std::string>());
    if (auto it = doc.find("threshold"); it != doc.end() && !it->is_null()) c.threshold = it->get<double>();
    if (auto it = doc.find("seed"); it != doc.end()) c.seed = it->get<std::uint64_t>();
    if (auto it = doc.find("strategy"); it != doc.end()) c.strategy = it->get<std::string>();
    if (auto it = doc.find("k"); it != doc.end()) c.k = it->get<std::size_t>();
    if (auto it = doc.find("ally_weight"); it != doc.end()) c.ally_weight = it->get<double>();
    if (auto it = doc.find("counter_weight"); it != doc.end()) c.counter_weight = it->get<double>();
    if (auto it = doc.find("copy_cap"); it != doc.end() && !it->is_null()) c.copy_cap = it->get<std::uint32_t>();
    if (auto it = doc.find("size_min"); it != doc.end()) c.size_min = it->get<std::size_t>();
    if (auto it = doc.find("size_max"); it != doc.end()) c.size_max = it->get<std::size_t>();
    if (auto it = doc.find("skip_first"); it != doc.end()) c.skip_first = it->get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidConfig, e.what());
  } catch (const Error& e) {
    throw Error(Errc::InvalidConfig, e.detail());
  }
  c.validate();
  return c;
}

}  // namespace synergy::app
