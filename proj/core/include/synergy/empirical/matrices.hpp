#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synergy/core/synergy.hpp"
#include "synergy/empirical/win_rate.hpp"

namespace synergy::empirical {

struct PairEntry {
  ElementId first;   ///< first < second
  ElementId second;
  SynergyScore score;
  WinRateEstimate joint;
  bool sufficient;  ///< joint.games >= min_games
};

/// Same-team synergy for every pair that ever shared a roster.
class PairSynergyMatrix {
 public:
  PairSynergyMatrix(std::vector<PairEntry> entries, BaselineKind baseline, std::uint64_t min_games,
                    std::string log_digest);

  const std::vector<PairEntry>& entries() const noexcept { return entries_; }
  BaselineKind baseline() const noexcept { return baseline_; }
  std::uint64_t min_games() const noexcept { return min_games_; }
  const std::string& log_digest() const noexcept { return log_digest_; }

  /// Order-insensitive lookup.
  const PairEntry* find(const ElementId& a, const ElementId& b) const;
  /// Highest-synergy entry (report order on ties), if any.
  const PairEntry* argmax() const;

 private:
  std::vector<PairEntry> entries_;  // sorted by (first, second)
  BaselineKind baseline_;
  std::uint64_t min_games_;
  std::string log_digest_;
};

/// Throws EmptyLog, ScaleMismatch (baseline not usable on win rates).
PairSynergyMatrix pair_synergy_matrix(const MatchLog& log, BaselineKind baseline = BaselineKind::Mean,
                                      std::uint64_t min_games = kDefaultMinGames, double z = kDefaultZ);
PairSynergyMatrix pair_synergy_matrix(const WinRateValueFunction& vf, BaselineKind baseline);

struct CounterEntry {
  ElementId subject;
  ElementId opponent;
  /// winrate(subject | opponent on the other side) - winrate(subject).
  /// Negative means the opponent counters the subject.
  double score;
  WinRateEstimate versus;
  WinRateEstimate overall;
  bool sufficient;  ///< versus.games >= min_games
};

/// Throws UnknownElement, NeverOpposed.
CounterEntry counter_score(const MatchLog& log, const ElementId& subject, const ElementId& opponent,
                           std::uint64_t min_games = kDefaultMinGames, double z = kDefaultZ);

/// Counter scores for every ordered pair that met as opponents.
class CounterMatrix {
 public:
  CounterMatrix(std::vector<CounterEntry> entries, std::uint64_t min_games, std::string log_digest);

  const std::vector<CounterEntry>& entries() const noexcept { return entries_; }
  std::uint64_t min_games() const noexcept { return min_games_; }
  const std::string& log_digest() const noexcept { return log_digest_; }

  const CounterEntry* find(const ElementId& subject, const ElementId& opponent) const;

 private:
  std::vector<CounterEntry> entries_;  // sorted by (subject, opponent)
  std::uint64_t min_games_;
  std::string log_digest_;
};

CounterMatrix counter_matrix(const MatchLog& log, std::uint64_t min_games = kDefaultMinGames,
                             double z = kDefaultZ);
CounterMatrix counter_matrix(const WinRateIndex& index, std::uint64_t min_games, double z);

}  // namespace synergy::empirical
