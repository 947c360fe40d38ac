#include "synergy/empirical/matrices.hpp"

#include <algorithm>

#include "synergy/error.hpp"

namespace synergy::empirical {

PairSynergyMatrix::PairSynergyMatrix(std::vector<PairEntry> entries, BaselineKind baseline, std::uint64_t min_games,
                                     std::string log_digest)
    : entries_(std::move(entries)), baseline_(baseline), min_games_(min_games), log_digest_(std::move(log_digest)) {
  std::sort(entries_.begin(), entries_.end(), [](const PairEntry& a, const PairEntry& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
}

const PairEntry* PairSynergyMatrix::find(const ElementId& a, const ElementId& b) const {
  const auto& lo = a < b ? a : b;
  const auto& hi = a < b ? b : a;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::tie(lo, hi), [](const PairEntry& e, const auto& key) {
    return std::tie(e.first, e.second) < key;
  });
  if (it == entries_.end() || !(it->first == lo) || !(it->second == hi)) return nullptr;
  return &*it;
}

const PairEntry* PairSynergyMatrix::argmax() const {
  const PairEntry* best = nullptr;
  for (const auto& e : entries_) {
    if (!best || ranks_before(e.score, best->score)) best = &e;
  }
  return best;
}

PairSynergyMatrix pair_synergy_matrix(const WinRateValueFunction& vf, BaselineKind baseline) {
  if (!baseline_compatible(baseline, vf.scale())) {
    throw Error(Errc::ScaleMismatch, std::string(to_string(baseline)) + " baseline is not defined on win rates");
  }
  std::vector<PairEntry> entries;
  entries.reserve(vf.index().pairs().size());
  for (const auto& [pair, tally] : vf.index().pairs()) {
    const std::vector<ElementId> members{pair.first, pair.second};
    SynergySet set(members);
    SynergyScore score = compute_synergy(set, vf, baseline);
    entries.push_back(PairEntry{pair.first, pair.second, std::move(score), wilson_estimate(tally.wins, tally.games, vf.z()),
                                tally.games >= vf.min_games()});
  }
  return PairSynergyMatrix(std::move(entries), baseline, vf.min_games(), vf.index().log().digest());
}

PairSynergyMatrix pair_synergy_matrix(const MatchLog& log, BaselineKind baseline, std::uint64_t min_games, double z) {
  auto vf = winrate_value_function(log, min_games, z);
  return pair_synergy_matrix(*vf, baseline);
}

CounterEntry counter_score(const MatchLog& log, const ElementId& subject, const ElementId& opponent,
                           std::uint64_t min_games, double z) {
  if (!log.contains(subject)) throw Error(Errc::UnknownElement, "'" + subject.str() + "' appears in no match");
  if (!log.contains(opponent)) throw Error(Errc::UnknownElement, "'" + opponent.str() + "' appears in no match");
  std::uint64_t wins = 0;
  std::uint64_t games = 0;
  for (const auto& r : log.records()) {
    for (int s = 0; s < 2; ++s) {
      const auto& mine = r.sides[s];
      const auto& theirs = r.sides[1 - s];
      if (std::binary_search(mine.begin(), mine.end(), subject) &&
          std::binary_search(theirs.begin(), theirs.end(), opponent)) {
        ++games;
        if (r.winner == s) ++wins;
      }
    }
  }
  if (games == 0) {
    throw Error(Errc::NeverOpposed, "'" + subject.str() + "' never met '" + opponent.str() + "' as an opponent");
  }
  const auto versus = wilson_estimate(wins, games, z);
  const auto overall = solo_win_rate(log, subject, z);
  return CounterEntry{subject, opponent, versus.rate - overall.rate, versus, overall, games >= min_games};
}

CounterMatrix::CounterMatrix(std::vector<CounterEntry> entries, std::uint64_t min_games, std::string log_digest)
    : entries_(std::move(entries)), min_games_(min_games), log_digest_(std::move(log_digest)) {
  std::sort(entries_.begin(), entries_.end(), [](const CounterEntry& a, const CounterEntry& b) {
    return std::tie(a.subject, a.opponent) < std::tie(b.subject, b.opponent);
  });
}

const CounterEntry* CounterMatrix::find(const ElementId& subject, const ElementId& opponent) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::tie(subject, opponent),
                             [](const CounterEntry& e, const auto& key) { return std::tie(e.subject, e.opponent) < key; });
  if (it == entries_.end() || !(it->subject == subject) || !(it->opponent == opponent)) return nullptr;
  return &*it;
}

CounterMatrix counter_matrix(const WinRateIndex& index, std::uint64_t min_games, double z) {
  std::vector<CounterEntry> entries;
  entries.reserve(index.opposed().size());
  for (const auto& [pair, tally] : index.opposed()) {
    const auto solo = index.solo(pair.first).value();
    const auto versus = wilson_estimate(tally.wins, tally.games, z);
    const auto overall = wilson_estimate(solo.wins, solo.games, z);
    entries.push_back(
        CounterEntry{pair.first, pair.second, versus.rate - overall.rate, versus, overall, tally.games >= min_games});
  }
  return CounterMatrix(std::move(entries), min_games, index.log().digest());
}

CounterMatrix counter_matrix(const MatchLog& log, std::uint64_t min_games, double z) {
  if (log.empty()) throw Error(Errc::EmptyLog, "cannot build counters from an empty log");
  return counter_matrix(WinRateIndex(log), min_games, z);
}

}  // namespace synergy::empirical
