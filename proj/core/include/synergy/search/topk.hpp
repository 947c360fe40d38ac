#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "synergy/core/synergy.hpp"
#include "synergy/search/space.hpp"

namespace synergy::search {

struct Exhaustive {
  friend bool operator==(const Exhaustive&, const Exhaustive&) = default;
};

struct UniformSample {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  friend bool operator==(const UniformSample&, const UniformSample&) = default;
};

using SearchStrategy = std::variant<Exhaustive, UniformSample>;

/// "exhaustive" or "sample:<n>".
std::string to_string(const SearchStrategy& strategy);
SearchStrategy parse_strategy(std::string_view text, std::uint64_t seed);

struct SearchOptions {
  /// Evaluation threads. Results do not depend on this.
  std::size_t workers = 1;
  /// Count sets whose evaluation raises EvaluationGap as skipped instead of
  /// failing the whole search (win-rate functions have gaps for sets that
  /// never played together).
  bool skip_gaps = false;
};

struct TopKResult {
  std::size_t k = 0;
  std::vector<SynergyScore> entries;  ///< report order, at most k
  std::uint64_t sets_examined = 0;    ///< candidates that passed the filter
  std::uint64_t sets_skipped = 0;     ///< of those, evaluation gaps
  SearchStrategy strategy;
  bool exhaustive = false;
};

/// Every scored candidate, in report order.
struct ScoredPopulation {
  std::vector<SynergyScore> scores;
  std::uint64_t sets_examined = 0;
  std::uint64_t sets_skipped = 0;
  SearchStrategy strategy;
  bool exhaustive = false;
};

/// Exhaustive: the k best sets of the whole space. UniformSample: the k best
/// among the distinct sampled sets. Ties at the cut are resolved by
/// canonical set order, so the result is identical for any worker count.
TopKResult top_k_synergy(const CandidateSpace& space, const ValueFunction& vf, BaselineKind baseline,
                         std::size_t k, const SearchStrategy& strategy, const SearchOptions& options = {});

ScoredPopulation score_space(const CandidateSpace& space, const ValueFunction& vf, BaselineKind baseline,
                             const SearchStrategy& strategy, const SearchOptions& options = {});

}  // namespace synergy::search
