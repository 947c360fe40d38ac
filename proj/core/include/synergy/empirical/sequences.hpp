#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "synergy/empirical/match_log.hpp"
#include "synergy/empirical/win_rate.hpp"

namespace synergy::empirical {

/// Consecutive piece-class bigrams of one side's moves, in order of
/// occurrence, as elements named "seq:<X>-><Y>". The first `skip_first`
/// moves of that side are dropped before pairing (a crude opening cut).
/// Throws NoMoveLog.
std::vector<ElementId> extract_sequence_elements(const MatchRecord& record, int side, std::size_t skip_first = 0);

/// For every bigram: games = sides whose moves contain it, wins = those
/// sides that won. Throws NoSequencedRecords.
std::map<ElementId, WinRateEstimate> sequence_win_rates(const MatchLog& log, std::size_t skip_first = 0,
                                                        double z = kDefaultZ);

/// Rewrites a log so each side's roster is its set of bigram elements.
/// Records without moves are dropped. The result feeds the ordinary
/// win-rate value function, matrices and search.
MatchLog sequence_log(const MatchLog& log, std::size_t skip_first = 0);

}  // namespace synergy::empirical
