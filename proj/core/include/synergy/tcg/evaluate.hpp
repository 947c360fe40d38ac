#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "synergy/core/synergy.hpp"
#include "synergy/tcg/card.hpp"

namespace synergy::tcg {

/// Copies of one card allowed in a deck (and so in any evaluated combo).
inline constexpr std::uint32_t kDeckCopyCap = 4;

/// Flat damage bonus for an "islandwalk" card while the opponent has an island.
inline constexpr int kIslandwalkBonus = 2;
inline constexpr const char* kIslandFlag = "opponent_has_island";

struct ComboEvaluation {
  SynergySet cards;
  std::int64_t total_damage = 0;
  std::int64_t total_mana = 0;
  /// damage / max(mana, 1)
  Value dpm;
  /// Set iff total_mana == 0 (the denominator was floored to 1).
  bool free_combo = false;
};

/// Damage-per-mana of a set of cards played together.
///
/// Fixed single pass, independent of card order:
///  1. StateModifiers resolve the opponent flags (a flag any card sets true
///     is true; otherwise one any card sets false is false; otherwise the
///     initial state).
///  2. Each copy's damage = printed damage + FlatBuffs + ThresholdBuffs from
///     the other copies (and itself when excludes_self is false). Thresholds
///     test printed damage, so buffs never re-trigger them.
///  3. A copy holding islandwalk, innate or granted, gains +2 while the
///     opponent has an island.
///  4. Per-copy damage is floored at 0 and summed; mana is summed.
///
/// Throws UnknownCard, CopyCapExceeded.
ComboEvaluation evaluate_combo(const CardPool& pool, const SynergySet& cards, const BoardState& initial = {},
                               std::uint32_t copy_cap = kDeckCopyCap);

/// Same rules over explicit card copies in any order.
ComboEvaluation evaluate_cards(std::span<const Card> copies, const BoardState& initial = {});

/// Damage per mana of the card alone on an empty board.
Value card_strength(const Card& card);

/// Ratio-scale value function over a card pool.
class DpmValueFunction final : public ValueFunction {
 public:
  DpmValueFunction(std::shared_ptr<const CardPool> pool, BoardState state = {}, std::uint32_t copy_cap = kDeckCopyCap);

  const ValueScale& scale() const noexcept override { return scale_; }
  bool in_pool(const ElementId& id) const override { return pool_->find(id) != nullptr; }
  std::vector<ElementId> pool() const override { return pool_->ids(); }
  Value evaluate(const SynergySet& set) const override;

  const CardPool& cards() const noexcept { return *pool_; }

 private:
  std::shared_ptr<const CardPool> pool_;
  BoardState state_;
  std::uint32_t copy_cap_;
  ValueScale scale_ = ValueScale::ratio();
};

/// compute_synergy under damage-per-mana; PooledRatio by default.
SynergyScore combo_synergy(const CardPool& pool, const SynergySet& cards, const BoardState& state = {},
                           BaselineKind baseline = BaselineKind::PooledRatio);

}  // namespace synergy::tcg
