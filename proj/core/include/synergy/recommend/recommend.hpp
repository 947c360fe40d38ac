#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "synergy/empirical/matrices.hpp"

namespace synergy::recommend {

struct DraftState {
  std::vector<ElementId> allies;       ///< 0..4 already on the team
  std::vector<ElementId> enemies;      ///< 0..5 on the other team
  std::vector<ElementId> unavailable;  ///< bans; picks are added implicitly
  std::vector<ElementId> pool;         ///< every candidate character
};

struct Weights {
  double ally_weight = 1.0;
  double counter_weight = 0.5;

  /// Throws InvalidArgument when negative or both zero.
  void validate() const;
};

struct Recommendation {
  ElementId candidate;
  double total_score;      ///< ally_weight * ally + counter_weight * counter
  double ally_component;   ///< mean pair synergy with the allies
  double counter_component;///< mean counter score against the enemies
  bool low_confidence;     ///< a pair was missing or under-sampled
};

struct Contribution {
  ElementId other;
  std::optional<double> value;  ///< empty when the matrices have no entry
  bool low_confidence;
};

struct WhatIf {
  Recommendation recommendation;
  std::vector<Contribution> allies;
  std::vector<Contribution> enemies;
};

/// Ranks the available candidates: total descending, ties by id.
/// Throws EmptyPool, MatrixLogMismatch, InvalidDraft.
std::vector<Recommendation> recommend(const empirical::PairSynergyMatrix& matrix,
                                      const empirical::CounterMatrix& counters, const DraftState& state,
                                      std::size_t k, const Weights& weights = {});

/// The score recommend() would give `candidate`, with its per-ally and
/// per-enemy breakdown. Throws UnavailableCandidate.
WhatIf what_if(const empirical::PairSynergyMatrix& matrix, const empirical::CounterMatrix& counters,
               const DraftState& state, const ElementId& candidate, const Weights& weights = {});

}  // namespace synergy::recommend
