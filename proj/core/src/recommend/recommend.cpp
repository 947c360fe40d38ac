#include "synergy/recommend/recommend.hpp"

#include <algorithm>
#include <set>

#include "synergy/error.hpp"

namespace synergy::recommend {

void Weights::validate() const {
  if (!(ally_weight >= 0.0) || !(counter_weight >= 0.0)) throw Error(Errc::InvalidArgument, "weights must be >= 0");
  if (ally_weight == 0.0 && counter_weight == 0.0) throw Error(Errc::InvalidArgument, "weights cannot both be zero");
}

namespace {

constexpr std::size_t kMaxAllies = 4;
constexpr std::size_t kMaxEnemies = 5;

struct Checked {
  std::set<ElementId> allies;
  std::set<ElementId> enemies;
  std::set<ElementId> unavailable;
  std::set<ElementId> pool;
};

Checked check(const empirical::PairSynergyMatrix& matrix, const empirical::CounterMatrix& counters,
              const DraftState& state, const Weights& weights) {
  weights.validate();
  if (matrix.log_digest() != counters.log_digest()) {
    throw Error(Errc::MatrixLogMismatch, "synergy and counter matrices come from different logs");
  }
  if (state.pool.empty()) throw Error(Errc::EmptyPool, "draft pool is empty");
  Checked c;
  c.allies.insert(state.allies.begin(), state.allies.end());
  c.enemies.insert(state.enemies.begin(), state.enemies.end());
  c.pool.insert(state.pool.begin(), state.pool.end());
  if (c.allies.size() != state.allies.size() || c.enemies.size() != state.enemies.size()) {
    throw Error(Errc::InvalidDraft, "a character is picked twice");
  }
  if (c.allies.size() > kMaxAllies) throw Error(Errc::InvalidDraft, "at most 4 allies may already be picked");
  if (c.enemies.size() > kMaxEnemies) throw Error(Errc::InvalidDraft, "at most 5 enemies may be picked");
  for (const auto& a : c.allies) {
    if (c.enemies.contains(a)) throw Error(Errc::InvalidDraft, "'" + a.str() + "' is on both teams");
  }
  c.unavailable.insert(state.unavailable.begin(), state.unavailable.end());
  c.unavailable.insert(c.allies.begin(), c.allies.end());
  c.unavailable.insert(c.enemies.begin(), c.enemies.end());
  return c;
}

WhatIf score(const empirical::PairSynergyMatrix& matrix, const empirical::CounterMatrix& counters,
             const Checked& draft, const ElementId& candidate, const Weights& weights) {
  WhatIf out{Recommendation{candidate, 0.0, 0.0, 0.0, false}, {}, {}};
  auto& rec = out.recommendation;

  double ally_sum = 0.0;
  for (const auto& ally : draft.allies) {
    const auto* entry = matrix.find(candidate, ally);
    Contribution c{ally, std::nullopt, true};
    if (entry) {
      c.value = entry->score.synergy;
      c.low_confidence = !entry->sufficient;
      ally_sum += entry->score.synergy;
    }
    rec.low_confidence = rec.low_confidence || c.low_confidence;
    out.allies.push_back(std::move(c));
  }
  double counter_sum = 0.0;
  for (const auto& enemy : draft.enemies) {
    const auto* entry = counters.find(candidate, enemy);
    Contribution c{enemy, std::nullopt, true};
    if (entry) {
      c.value = entry->score;
      c.low_confidence = !entry->sufficient;
      counter_sum += entry->score;
    }
    rec.low_confidence = rec.low_confidence || c.low_confidence;
    out.enemies.push_back(std::move(c));
  }
  if (!draft.allies.empty()) rec.ally_component = ally_sum / static_cast<double>(draft.allies.size());
  if (!draft.enemies.empty()) rec.counter_component = counter_sum / static_cast<double>(draft.enemies.size());
  rec.total_score = weights.ally_weight * rec.ally_component + weights.counter_weight * rec.counter_component;
  return out;
}

}  // namespace

std::vector<Recommendation> recommend(const empirical::PairSynergyMatrix& matrix,
                                      const empirical::CounterMatrix& counters, const DraftState& state,
                                      std::size_t k, const Weights& weights) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  const Checked draft = check(matrix, counters, state, weights);
  std::vector<Recommendation> ranked;
  for (const auto& candidate : draft.pool) {
    if (draft.unavailable.contains(candidate)) continue;
    ranked.push_back(score(matrix, counters, draft, candidate, weights).recommendation);
  }
  std::sort(ranked.begin(), ranked.end(), [](const Recommendation& a, const Recommendation& b) {
    if (a.total_score != b.total_score) return a.total_score > b.total_score;
    return a.candidate < b.candidate;
  });
  if (ranked.size() > k) ranked.erase(ranked.begin() + static_cast<std::ptrdiff_t>(k), ranked.end());
  return ranked;
}

WhatIf what_if(const empirical::PairSynergyMatrix& matrix, const empirical::CounterMatrix& counters,
               const DraftState& state, const ElementId& candidate, const Weights& weights) {
  const Checked draft = check(matrix, counters, state, weights);
  if (!draft.pool.contains(candidate) || draft.unavailable.contains(candidate)) {
    throw Error(Errc::UnavailableCandidate, "'" + candidate.str() + "' cannot be picked");
  }
  return score(matrix, counters, draft, candidate, weights);
}

}  // namespace synergy::recommend
