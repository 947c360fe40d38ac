#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "synergy/core/synergy.hpp"
#include "synergy/search/outliers.hpp"
#include "synergy/search/topk.hpp"

namespace synergy::app {

/// Every knob that can change an analysis result. Serialized into each
/// report so an iteration can be rerun exactly. Worker count is not part of
/// it: results are identical for any number of workers.
struct RunConfig {
  std::optional<BaselineKind> baseline;  ///< unset: per-command default
  std::uint64_t min_games = 30;
  double z = 1.96;
  search::OutlierMethod outlier = search::OutlierMethod::MadZ;
  std::optional<double> threshold;       ///< unset: 3.5 (madz) / 1.5 (iqr)
  std::uint64_t seed = 0;
  std::string strategy = "exhaustive";   ///< "exhaustive" | "sample:<n>"
  std::size_t k = 10;
  double ally_weight = 1.0;
  double counter_weight = 0.5;
  std::optional<std::uint32_t> copy_cap; ///< unset: per-command default
  std::size_t size_min = 2;
  std::size_t size_max = 3;
  std::size_t skip_first = 0;            ///< chess: moves dropped per side

  /// Throws InvalidConfig.
  void validate() const;

  /// Fills the per-command defaults.
  RunConfig resolved(BaselineKind default_baseline, std::uint32_t default_copy_cap) const;

  double effective_threshold() const;
  search::SearchStrategy search_strategy() const;

  /// Canonical JSON (sorted keys, unset optionals as null).
  std::string to_json() const;
  /// Accepts a RunConfig object or any report carrying one under "config".
  static RunConfig from_json(std::string_view text);
};

}  // namespace synergy::app
