#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "synergy/core/value_function.hpp"
#include "synergy/empirical/match_log.hpp"

namespace synergy::empirical {

inline constexpr double kDefaultZ = 1.96;
inline constexpr std::uint64_t kDefaultMinGames = 30;

struct WinRateEstimate {
  std::uint64_t wins = 0;
  std::uint64_t games = 0;
  double rate = 0.0;
  double ci_low = 0.0;   ///< Wilson score interval
  double ci_high = 0.0;
};

/// Point rate plus Wilson score interval at normal quantile `z`. The bounds
/// are clamped into [0, 1] and widened (by rounding only) to contain the rate.
WinRateEstimate wilson_estimate(std::uint64_t wins, std::uint64_t games, double z = kDefaultZ);

/// Win rate over every match the element played on either side.
WinRateEstimate solo_win_rate(const MatchLog& log, const ElementId& e, double z = kDefaultZ);

/// Win rate of sides that field every element of `set` together.
/// Multiplicity is ignored. Throws CardinalityError, NeverCoOccurred.
WinRateEstimate joint_win_rate(const MatchLog& log, const SynergySet& set, double z = kDefaultZ);

struct Tally {
  std::uint64_t wins = 0;
  std::uint64_t games = 0;
};

using ElementPair = std::pair<ElementId, ElementId>;

/// Precomputed tallies over one log: solo, same-side pairs, and opposed
/// ordered pairs. Larger sets are answered from per-element appearance lists.
class WinRateIndex {
 public:
  explicit WinRateIndex(MatchLog log);

  const MatchLog& log() const noexcept { return log_; }

  std::optional<Tally> solo(const ElementId& e) const;
  /// Same-side tally for the set's distinct elements (games may be 0).
  Tally joint(const SynergySet& set) const;
  /// Wins of `subject` in matches where `opponent` was on the other side.
  std::optional<Tally> versus(const ElementId& subject, const ElementId& opponent) const;

  const std::map<ElementId, Tally>& solos() const noexcept { return solo_; }
  /// Keyed by canonical (first < second) pairs.
  const std::map<ElementPair, Tally>& pairs() const noexcept { return pair_; }
  /// Keyed by (subject, opponent).
  const std::map<ElementPair, Tally>& opposed() const noexcept { return opposed_; }

 private:
  struct Appearance {
    std::uint32_t record;
    std::uint8_t side;
  };

  MatchLog log_;
  std::map<ElementId, Tally> solo_;
  std::map<ElementPair, Tally> pair_;
  std::map<ElementPair, Tally> opposed_;
  std::map<ElementId, std::vector<Appearance>> appearances_;
};

/// Numeric value function in [0, 1]: singletons -> solo win rate, larger
/// sets -> joint win rate. Sets that never played together raise
/// EvaluationGap. Sets with fewer than `min_games` games still evaluate but
/// report low_confidence().
class WinRateValueFunction final : public ValueFunction {
 public:
  WinRateValueFunction(std::shared_ptr<const WinRateIndex> index, std::uint64_t min_games, double z);

  const ValueScale& scale() const noexcept override { return scale_; }
  bool in_pool(const ElementId& id) const override;
  std::vector<ElementId> pool() const override;
  Value evaluate(const SynergySet& set) const override;

  WinRateEstimate estimate(const SynergySet& set) const;
  bool low_confidence(const SynergySet& set) const;

  std::uint64_t min_games() const noexcept { return min_games_; }
  double z() const noexcept { return z_; }
  const WinRateIndex& index() const noexcept { return *index_; }

 private:
  std::shared_ptr<const WinRateIndex> index_;
  ValueScale scale_ = ValueScale::numeric();
  std::uint64_t min_games_;
  double z_;
};

/// Throws EmptyLog.
std::shared_ptr<const WinRateValueFunction> winrate_value_function(const MatchLog& log,
                                                                   std::uint64_t min_games = kDefaultMinGames,
                                                                   double z = kDefaultZ);

}  // namespace synergy::empirical
