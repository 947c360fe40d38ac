#include "synergy/search/outliers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "synergy/error.hpp"

namespace synergy::search {

namespace {

constexpr double kMadToSigma = 1.4826;

}  // namespace

std::string_view to_string(OutlierMethod method) noexcept {
  return method == OutlierMethod::MadZ ? "madz" : "iqr";
}

OutlierMethod parse_outlier_method(std::string_view name) {
  if (name == "madz") return OutlierMethod::MadZ;
  if (name == "iqr") return OutlierMethod::Iqr;
  throw Error(Errc::InvalidArgument, "unknown outlier method '" + std::string(name) + "'");
}

double default_threshold(OutlierMethod method) noexcept { return method == OutlierMethod::MadZ ? 3.5 : 1.5; }

double median_of(std::vector<double> values) {
  if (values.empty()) throw Error(Errc::TooFewScores, "median of nothing");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double quantile_of(std::vector<double> values, double q) {
  if (values.empty()) throw Error(Errc::TooFewScores, "quantile of nothing");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + (values[hi] - values[lo]) * frac;
}

OutlierReport detect_outliers(std::span<const SynergyScore> scores, OutlierMethod method, double threshold) {
  const std::size_t needed = method == OutlierMethod::MadZ ? 2 : 4;
  if (scores.size() < needed) {
    throw Error(Errc::TooFewScores, std::string(to_string(method)) + " needs at least " + std::to_string(needed) +
                                        " scores, got " + std::to_string(scores.size()));
  }
  if (!(threshold >= 0.0)) throw Error(Errc::InvalidArgument, "outlier threshold must be >= 0");
  for (const auto& s : scores) {
    if (!(s.set_value.scale() == scores.front().set_value.scale()) || s.baseline != scores.front().baseline) {
      throw Error(Errc::MixedScales, "outlier population mixes scales or baselines");
    }
  }

  std::vector<double> values;
  values.reserve(scores.size());
  for (const auto& s : scores) values.push_back(s.synergy);

  OutlierReport report;
  report.method = method;
  report.threshold = threshold;
  report.stats.population = scores.size();
  report.stats.median = median_of(values);
  const double median = report.stats.median;
  constexpr double inf = std::numeric_limits<double>::infinity();

  auto deviation = [&](double x) -> std::optional<double> {
    if (method == OutlierMethod::MadZ) {
      const double mad = *report.stats.mad;
      if (mad == 0.0) return x != median ? std::optional(inf) : std::nullopt;
      const double z = std::abs(x - median) / (kMadToSigma * mad);
      return z > threshold ? std::optional(z) : std::nullopt;
    }
    const double q1 = *report.stats.q1;
    const double q3 = *report.stats.q3;
    const double iqr = q3 - q1;
    if (iqr == 0.0) return x != median ? std::optional(inf) : std::nullopt;
    const double d = x > q3 ? (x - q3) / iqr : (x < q1 ? (q1 - x) / iqr : 0.0);
    return d > threshold ? std::optional(d) : std::nullopt;
  };

  if (method == OutlierMethod::MadZ) {
    std::vector<double> spread;
    spread.reserve(values.size());
    for (double v : values) spread.push_back(std::abs(v - median));
    report.stats.mad = median_of(std::move(spread));
    report.stats.degenerate = *report.stats.mad == 0.0;
  } else {
    report.stats.q1 = quantile_of(values, 0.25);
    report.stats.q3 = quantile_of(values, 0.75);
    report.stats.degenerate = *report.stats.q3 == *report.stats.q1;
  }

  for (const auto& s : scores) {
    if (auto d = deviation(s.synergy)) report.flagged.push_back(OutlierFlag{s, *d});
  }
  std::sort(report.flagged.begin(), report.flagged.end(), [](const OutlierFlag& a, const OutlierFlag& b) {
    if (a.deviation != b.deviation) return a.deviation > b.deviation;
    return ranks_before(a.score, b.score);
  });
  return report;
}

}  // namespace synergy::search
