#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "synergy/search/outliers.hpp"
#include "synergy/search/topk.hpp"
#include "synergy/tcg/evaluate.hpp"

namespace synergy::tcg {

struct ScanSpec {
  std::size_t size_min = 2;
  std::size_t size_max = 3;
  std::uint32_t copy_cap = kDeckCopyCap;
  search::SearchStrategy strategy = search::Exhaustive{};
  search::OutlierMethod method = search::OutlierMethod::MadZ;
  double threshold = 3.5;
  BaselineKind baseline = BaselineKind::PooledRatio;
  BoardState state;
  std::size_t workers = 1;
};

struct ScanResult {
  search::OutlierReport report;
  std::uint64_t sets_examined = 0;
  bool exhaustive = false;
  std::uint64_t pool_version = 0;
};

/// Scores every candidate combo that includes at least one card from
/// `new_ids` and flags the outliers of the synergy population.
/// Throws UnknownCard, InvalidSpace, TooFewScores (propagated from search).
ScanResult scan_pool(const CardPool& pool, std::span<const ElementId> new_ids, const ScanSpec& spec);

/// scan_pool over existing + new cards (ids must not collide).
ScanResult scan_new_set(std::span<const Card> new_cards, std::span<const Card> existing, const ScanSpec& spec);

using EditValue = std::variant<std::int64_t, bool, std::string>;

/// One designer edit to a card field.
///
/// Fields: name, mana, damage, types, keywords (comma-separated),
/// effects.<i>.{amount, stat_cap, excludes_self, keyword, flag, value, filter}.
struct CardEdit {
  ElementId card;
  std::string field;
  EditValue value;

  /// "<card id>:<field>=<value>"; the value is read as an integer, then
  /// true/false, then a string.
  static CardEdit parse(std::string_view text);
};

/// A new pool version with the edits applied (the version is bumped only if
/// there is at least one edit). Throws UnknownCard, InvalidEdit.
CardPool apply_edits(const CardPool& pool, std::span<const CardEdit> edits);

struct RebalanceResult {
  CardPool pool;
  ScanResult scan;
};

/// Applies the edits and rescans against the same new-card ids.
RebalanceResult rebalance_iterate(const CardPool& pool, std::span<const ElementId> new_ids,
                                  std::span<const CardEdit> edits, const ScanSpec& spec);

}  // namespace synergy::tcg
