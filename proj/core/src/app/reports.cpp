#include "app/reports.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace synergy::app {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json config_json(const RunConfig& c) {
  json j;
  j["baseline"] = c.baseline ? json(std::string(to_string(*c.baseline))) : json(nullptr);
  j["min_games"] = c.min_games;
  j["z"] = c.z;
  j["outlier"] = std::string(search::to_string(c.outlier));
  j["threshold"] = c.threshold ? json(*c.threshold) : json(nullptr);
  j["seed"] = c.seed;
  j["strategy"] = c.strategy;
  j["k"] = c.k;
  j["ally_weight"] = c.ally_weight;
  j["counter_weight"] = c.counter_weight;
  j["copy_cap"] = c.copy_cap ? json(*c.copy_cap) : json(nullptr);
  j["size_min"] = c.size_min;
  j["size_max"] = c.size_max;
  j["skip_first"] = c.skip_first;
  return j;
}

json value_json(const Value& v) {
  json j;
  j["scale"] = std::string(to_string(v.kind()));
  switch (v.kind()) {
    case ScaleKind::Numeric:
      j["value"] = number_or_null(v.number());
      break;
    case ScaleKind::Ratio:
      j["numerator"] = number_or_null(v.numerator());
      j["denominator"] = number_or_null(v.denominator());
      j["value"] = v.denominator() != 0.0 ? number_or_null(v.embedded()) : json(nullptr);
      break;
    case ScaleKind::Ordinal:
      j["rank"] = v.rank();
      j["label"] = v.label();
      j["value"] = static_cast<double>(v.rank());
      break;
  }
  return j;
}

json set_json(const SynergySet& set) { return set.expanded_strings(); }

json score_json(const SynergyScore& s) {
  json j;
  j["set"] = set_json(s.set);
  j["set_value"] = value_json(s.set_value);
  j["baseline_value"] = value_json(s.baseline_value);
  j["baseline"] = std::string(to_string(s.baseline));
  j["synergy"] = number_or_null(s.synergy);
  return j;
}

json estimate_json(const empirical::WinRateEstimate& e) {
  return json{{"wins", e.wins}, {"games", e.games}, {"rate", e.rate}, {"ci_low", e.ci_low}, {"ci_high", e.ci_high}};
}

json matrix_json(const empirical::PairSynergyMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) {
    entries.push_back({{"first", e.first.str()},
                       {"second", e.second.str()},
                       {"synergy", number_or_null(e.score.synergy)},
                       {"baseline_value", number_or_null(e.score.baseline_value.embedded())},
                       {"joint", estimate_json(e.joint)},
                       {"sufficient", e.sufficient}});
  }
  json j;
  j["baseline"] = std::string(to_string(m.baseline()));
  j["min_games"] = m.min_games();
  j["log_digest"] = m.log_digest();
  j["entries"] = std::move(entries);
  return j;
}

std::string matrix_csv(const empirical::PairSynergyMatrix& m) {
  std::ostringstream out;
  out << "first,second,synergy,joint_rate,joint_games,joint_ci_low,joint_ci_high,sufficient\n";
  for (const auto& e : m.entries()) {
    out << e.first.str() << ',' << e.second.str() << ',' << format_double(e.score.synergy) << ','
        << format_double(e.joint.rate) << ',' << e.joint.games << ',' << format_double(e.joint.ci_low) << ','
        << format_double(e.joint.ci_high) << ',' << (e.sufficient ? "true" : "false") << '\n';
  }
  return out.str();
}

json counters_json(const empirical::CounterMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) {
    entries.push_back({{"subject", e.subject.str()},
                       {"opponent", e.opponent.str()},
                       {"score", number_or_null(e.score)},
                       {"versus", estimate_json(e.versus)},
                       {"overall", estimate_json(e.overall)},
                       {"sufficient", e.sufficient}});
  }
  json j;
  j["min_games"] = m.min_games();
  j["log_digest"] = m.log_digest();
  j["entries"] = std::move(entries);
  return j;
}

std::string counters_csv(const empirical::CounterMatrix& m) {
  std::ostringstream out;
  out << "subject,opponent,score,versus_rate,versus_games,overall_rate,overall_games,sufficient\n";
  for (const auto& e : m.entries()) {
    out << e.subject.str() << ',' << e.opponent.str() << ',' << format_double(e.score) << ','
        << format_double(e.versus.rate) << ',' << e.versus.games << ',' << format_double(e.overall.rate) << ','
        << e.overall.games << ',' << (e.sufficient ? "true" : "false") << '\n';
  }
  return out.str();
}

json topk_json(const search::TopKResult& r) {
  json entries = json::array();
  for (const auto& s : r.entries) entries.push_back(score_json(s));
  json j;
  j["k"] = r.k;
  j["strategy"] = search::to_string(r.strategy);
  j["exhaustive"] = r.exhaustive;
  j["sets_examined"] = r.sets_examined;
  j["sets_skipped"] = r.sets_skipped;
  j["entries"] = std::move(entries);
  return j;
}

json outliers_json(const search::OutlierReport& r) {
  json flagged = json::array();
  for (const auto& f : r.flagged) {
    json item = score_json(f.score);
    item["deviation"] = number_or_null(f.deviation);
    if (std::isinf(f.deviation)) item["deviation_unbounded"] = true;
    flagged.push_back(std::move(item));
  }
  json stats;
  stats["population"] = r.stats.population;
  stats["median"] = r.stats.median;
  if (r.stats.mad) stats["mad"] = *r.stats.mad;
  if (r.stats.q1) stats["q1"] = *r.stats.q1;
  if (r.stats.q3) stats["q3"] = *r.stats.q3;
  stats["degenerate"] = r.stats.degenerate;
  json j;
  j["method"] = std::string(search::to_string(r.method));
  j["threshold"] = r.threshold;
  j["stats"] = std::move(stats);
  j["flagged"] = std::move(flagged);
  return j;
}

json scan_json(const tcg::ScanResult& s) {
  json j = outliers_json(s.report);
  j["sets_examined"] = s.sets_examined;
  j["exhaustive"] = s.exhaustive;
  j["pool_version"] = s.pool_version;
  return j;
}

json recommendation_json(const recommend::Recommendation& r) {
  return json{{"candidate", r.candidate.str()},
              {"total_score", number_or_null(r.total_score)},
              {"ally_component", number_or_null(r.ally_component)},
              {"counter_component", number_or_null(r.counter_component)},
              {"low_confidence", r.low_confidence}};
}

json recommendations_json(const std::vector<recommend::Recommendation>& recs) {
  json out = json::array();
  for (const auto& r : recs) out.push_back(recommendation_json(r));
  return out;
}

namespace {

json contributions_json(const std::vector<recommend::Contribution>& cs) {
  json out = json::array();
  for (const auto& c : cs) {
    out.push_back({{"other", c.other.str()},
                   {"value", c.value ? number_or_null(*c.value) : json(nullptr)},
                   {"low_confidence", c.low_confidence}});
  }
  return out;
}

}  // namespace

json whatif_json(const recommend::WhatIf& w) {
  json j = recommendation_json(w.recommendation);
  j["allies"] = contributions_json(w.allies);
  j["enemies"] = contributions_json(w.enemies);
  return j;
}

json sequence_table_json(const std::map<ElementId, empirical::WinRateEstimate>& table) {
  json out = json::array();
  for (const auto& [bigram, est] : table) {
    json item = estimate_json(est);
    item["bigram"] = bigram.str();
    out.push_back(std::move(item));
  }
  return out;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace synergy::app
