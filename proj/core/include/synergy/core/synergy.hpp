#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "synergy/core/element.hpp"
#include "synergy/core/value.hpp"
#include "synergy/core/value_function.hpp"

namespace synergy {

/// How the non-synergic expectation is formed from singleton values.
///
///  - Sum: plain sum (Numeric, Ordinal ranks, Ratio embeddings).
///  - Mean: Sum / cardinality (Numeric, Ordinal ranks).
///  - IndependentUnion: 1 - prod(1 - p) for probabilities in [0, 1].
///  - PooledRatio: sum of numerators over sum of denominators (Ratio only).
enum class BaselineKind { Sum, Mean, IndependentUnion, PooledRatio };

std::string_view to_string(BaselineKind kind) noexcept;
/// Accepts "sum", "mean", "independent", "pooled".
BaselineKind parse_baseline(std::string_view name);

bool baseline_compatible(BaselineKind kind, const ValueScale& scale) noexcept;

/// Combines singleton values (one entry per copy) into the baseline. Ordinal
/// and Sum-over-Ratio baselines are reported as Numeric values in embedding
/// units; ordinal rank sums are never clamped to the top label.
Value combine_baseline(BaselineKind kind, const ValueScale& scale, std::span<const Value> singles);

struct SynergyScore {
  SynergySet set;
  Value set_value;
  Value baseline_value;
  double synergy;  ///< set_value.embedded() - baseline_value.embedded()
  BaselineKind baseline;
};

/// Synergy of one set: its value minus the baseline of its elements' solo values.
SynergyScore compute_synergy(const SynergySet& set, const ValueFunction& vf, BaselineKind baseline);

/// compute_synergy over each set in order. The first failure is rethrown
/// with the offending set's index attached.
std::vector<SynergyScore> batch_synergy(std::span<const SynergySet> sets, const ValueFunction& vf,
                                        BaselineKind baseline);

/// Report order: synergy descending, ties by canonical set order.
bool ranks_before(const SynergyScore& a, const SynergyScore& b) noexcept;

/// Sorts into report order. All scores must share scale and baseline kind.
std::vector<SynergyScore> rank_sets(std::vector<SynergyScore> scores);

}  // namespace synergy
