#include "synergy/empirical/win_rate.hpp"

#include <algorithm>
#include <cmath>

#include "synergy/error.hpp"

namespace synergy::empirical {

WinRateEstimate wilson_estimate(std::uint64_t wins, std::uint64_t games, double z) {
  if (games == 0) throw Error(Errc::InvalidArgument, "win rate over zero games");
  if (wins > games) throw Error(Errc::InvalidArgument, "more wins than games");
  const double n = static_cast<double>(games);
  const double p = static_cast<double>(wins) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  WinRateEstimate est;
  est.wins = wins;
  est.games = games;
  est.rate = p;
  est.ci_low = std::clamp(center - half, 0.0, p);
  est.ci_high = std::clamp(center + half, p, 1.0);
  return est;
}

WinRateEstimate solo_win_rate(const MatchLog& log, const ElementId& e, double z) {
  std::uint64_t wins = 0;
  std::uint64_t games = 0;
  for (const auto& r : log.records()) {
    for (int s = 0; s < 2; ++s) {
      const auto& roster = r.sides[s];
      if (std::binary_search(roster.begin(), roster.end(), e)) {
        ++games;
        if (r.winner == s) ++wins;
      }
    }
  }
  if (games == 0) throw Error(Errc::UnknownElement, "'" + e.str() + "' appears in no match");
  return wilson_estimate(wins, games, z);
}

namespace {

bool roster_has_all(const std::vector<ElementId>& roster, const SynergySet& set) {
  return std::all_of(set.entries().begin(), set.entries().end(), [&](const SynergySet::Entry& entry) {
    return std::binary_search(roster.begin(), roster.end(), entry.first);
  });
}

}  // namespace

WinRateEstimate joint_win_rate(const MatchLog& log, const SynergySet& set, double z) {
  if (set.cardinality() < 2) throw Error(Errc::CardinalityError, "joint win rate needs two or more elements");
  std::uint64_t wins = 0;
  std::uint64_t games = 0;
  for (const auto& r : log.records()) {
    for (int s = 0; s < 2; ++s) {
      if (roster_has_all(r.sides[s], set)) {
        ++games;
        if (r.winner == s) ++wins;
      }
    }
  }
  if (games == 0) throw Error(Errc::NeverCoOccurred, set.to_string() + " never appeared on one side");
  return wilson_estimate(wins, games, z);
}

WinRateIndex::WinRateIndex(MatchLog log) : log_(std::move(log)) {
  const auto records = log_.records();
  for (std::uint32_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    for (std::uint8_t s = 0; s < 2; ++s) {
      const auto& roster = r.sides[s];
      const auto& other = r.sides[1 - s];
      const std::uint64_t won = r.winner == s ? 1 : 0;
      for (std::size_t a = 0; a < roster.size(); ++a) {
        auto& t = solo_[roster[a]];
        t.wins += won;
        ++t.games;
        appearances_[roster[a]].push_back(Appearance{i, s});
        // Rosters are sorted, so (roster[a], roster[b]) is canonical.
        for (std::size_t b = a + 1; b < roster.size(); ++b) {
          auto& p = pair_[ElementPair(roster[a], roster[b])];
          p.wins += won;
          ++p.games;
        }
        for (const auto& o : other) {
          auto& v = opposed_[ElementPair(roster[a], o)];
          v.wins += won;
          ++v.games;
        }
      }
    }
  }
}

std::optional<Tally> WinRateIndex::solo(const ElementId& e) const {
  auto it = solo_.find(e);
  if (it == solo_.end()) return std::nullopt;
  return it->second;
}

Tally WinRateIndex::joint(const SynergySet& set) const {
  const auto entries = set.entries();
  if (entries.size() == 1) return solo(entries[0].first).value_or(Tally{});
  if (entries.size() == 2) {
    auto it = pair_.find(ElementPair(entries[0].first, entries[1].first));
    return it == pair_.end() ? Tally{} : it->second;
  }
  const std::vector<Appearance>* rarest = nullptr;
  for (const auto& [id, n] : entries) {
    auto it = appearances_.find(id);
    if (it == appearances_.end()) return Tally{};
    if (!rarest || it->second.size() < rarest->size()) rarest = &it->second;
  }
  Tally t;
  const auto records = log_.records();
  for (const auto& a : *rarest) {
    const auto& r = records[a.record];
    if (roster_has_all(r.sides[a.side], set)) {
      ++t.games;
      if (r.winner == a.side) ++t.wins;
    }
  }
  return t;
}

std::optional<Tally> WinRateIndex::versus(const ElementId& subject, const ElementId& opponent) const {
  auto it = opposed_.find(ElementPair(subject, opponent));
  if (it == opposed_.end()) return std::nullopt;
  return it->second;
}

WinRateValueFunction::WinRateValueFunction(std::shared_ptr<const WinRateIndex> index, std::uint64_t min_games,
                                           double z)
    : index_(std::move(index)), min_games_(min_games), z_(z) {}

bool WinRateValueFunction::in_pool(const ElementId& id) const { return index_->log().contains(id); }

std::vector<ElementId> WinRateValueFunction::pool() const { return index_->log().pool(); }

WinRateEstimate WinRateValueFunction::estimate(const SynergySet& set) const {
  for (const auto& [id, n] : set.entries()) {
    if (!in_pool(id)) throw Error(Errc::UnknownElement, "'" + id.str() + "' appears in no match");
  }
  const Tally t = index_->joint(set);
  if (t.games == 0) throw Error(Errc::EvaluationGap, set.to_string() + " never appeared on one side");
  return wilson_estimate(t.wins, t.games, z_);
}

Value WinRateValueFunction::evaluate(const SynergySet& set) const { return Value::numeric(estimate(set).rate); }

bool WinRateValueFunction::low_confidence(const SynergySet& set) const {
  return index_->joint(set).games < min_games_;
}

std::shared_ptr<const WinRateValueFunction> winrate_value_function(const MatchLog& log, std::uint64_t min_games,
                                                                   double z) {
  if (log.empty()) throw Error(Errc::EmptyLog, "cannot build a win-rate value function from an empty log");
  return std::make_shared<const WinRateValueFunction>(std::make_shared<const WinRateIndex>(log), min_games, z);
}

}  // namespace synergy::empirical
