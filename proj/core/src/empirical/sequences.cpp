#include "synergy/empirical/sequences.hpp"

#include <algorithm>

#include "synergy/error.hpp"

namespace synergy::empirical {

std::vector<ElementId> extract_sequence_elements(const MatchRecord& record, int side, std::size_t skip_first) {
  if (!record.moves) throw Error(Errc::NoMoveLog, "match '" + record.match_id + "' has no move log");
  if (side != 0 && side != 1) throw Error(Errc::InvalidArgument, "side must be 0 or 1");
  std::vector<const std::string*> pieces;
  for (const auto& m : *record.moves) {
    if (m.side == side) pieces.push_back(&m.piece);
  }
  std::vector<ElementId> out;
  if (pieces.size() <= skip_first) return out;
  for (std::size_t i = skip_first + 1; i < pieces.size(); ++i) {
    out.emplace_back("seq:" + *pieces[i - 1] + "->" + *pieces[i]);
  }
  return out;
}

MatchLog sequence_log(const MatchLog& log, std::size_t skip_first) {
  std::vector<MatchRecord> out;
  for (const auto& r : log.records()) {
    if (!r.moves) continue;
    MatchRecord derived;
    derived.match_id = r.match_id;
    derived.winner = r.winner;
    for (int s = 0; s < 2; ++s) derived.sides[s] = extract_sequence_elements(r, s, skip_first);
    out.push_back(std::move(derived));
  }
  return MatchLog(std::move(out), MatchLog::Rules::Derived);
}

std::map<ElementId, WinRateEstimate> sequence_win_rates(const MatchLog& log, std::size_t skip_first, double z) {
  std::map<ElementId, Tally> tallies;
  bool any = false;
  for (const auto& r : log.records()) {
    if (!r.moves) continue;
    any = true;
    for (int s = 0; s < 2; ++s) {
      auto grams = extract_sequence_elements(r, s, skip_first);
      std::sort(grams.begin(), grams.end());
      grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
      for (const auto& g : grams) {
        auto& t = tallies[g];
        ++t.games;
        if (r.winner == s) ++t.wins;
      }
    }
  }
  if (!any) throw Error(Errc::NoSequencedRecords, "no record carries a move log");
  std::map<ElementId, WinRateEstimate> out;
  for (const auto& [gram, t] : tallies) out.emplace(gram, wilson_estimate(t.wins, t.games, z));
  return out;
}

}  // namespace synergy::empirical
