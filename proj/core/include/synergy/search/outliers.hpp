#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "synergy/core/synergy.hpp"

namespace synergy::search {

enum class OutlierMethod { MadZ, Iqr };

std::string_view to_string(OutlierMethod method) noexcept;
/// Accepts "madz" and "iqr".
OutlierMethod parse_outlier_method(std::string_view name);
/// 3.5 for MAD-z, 1.5 for IQR.
double default_threshold(OutlierMethod method) noexcept;

struct OutlierFlag {
  SynergyScore score;
  /// Robust z for MAD-z, fence distance in IQR units for IQR. Infinite when
  /// the population has zero dispersion.
  double deviation;
};

struct PopulationStats {
  std::size_t population = 0;
  double median = 0.0;
  std::optional<double> mad;  // MAD-z only
  std::optional<double> q1;   // IQR only
  std::optional<double> q3;
  bool degenerate = false;
};

struct OutlierReport {
  OutlierMethod method = OutlierMethod::MadZ;
  double threshold = 3.5;
  std::vector<OutlierFlag> flagged;  ///< deviation descending, then report order
  PopulationStats stats;
};

/// Median of the values (mean of the middle pair for even counts).
double median_of(std::vector<double> values);
/// Linear-interpolated quantile (numpy's default) of the values.
double quantile_of(std::vector<double> values, double q);

/// Flags scores whose synergy is far from the population.
///   MAD-z: |s - median| / (1.4826 * MAD) > threshold
///   IQR:   s outside [Q1 - t*IQR, Q3 + t*IQR]
/// With zero dispersion every score different from the median is flagged.
/// Throws TooFewScores (MAD-z needs 2, IQR needs 4) and MixedScales.
OutlierReport detect_outliers(std::span<const SynergyScore> scores, OutlierMethod method, double threshold);

}  // namespace synergy::search
