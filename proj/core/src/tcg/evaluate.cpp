#include "synergy/tcg/evaluate.hpp"

#include <algorithm>
#include <set>

#include "synergy/error.hpp"

namespace synergy::tcg {

namespace {

BoardState resolve_state(std::span<const Card> copies, const BoardState& initial) {
  std::map<std::string, std::pair<bool, bool>> setters;  // flag -> (any true, any false)
  for (const auto& card : copies) {
    for (const auto& effect : card.effects) {
      if (const auto* s = std::get_if<StateModifier>(&effect)) {
        auto& [t, f] = setters[s->flag];
        (s->value ? t : f) = true;
      }
    }
  }
  BoardState state = initial;
  for (const auto& [flag, tf] : setters) state.opponent_flags[flag] = tf.first ? true : (tf.second ? false : state.flag(flag));
  return state;
}

std::int64_t copy_damage(std::span<const Card> copies, std::size_t target, const BoardState& state) {
  const Card& card = copies[target];
  std::int64_t damage = card.base_damage;
  bool islandwalk = card.has_keyword("islandwalk");
  for (std::size_t j = 0; j < copies.size(); ++j) {
    for (const auto& effect : copies[j].effects) {
      std::visit(
          [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, StateModifier>) {
              return;
            } else {
              if (j == target && e.excludes_self) return;
              if (!e.filter.matches(card)) return;
              if constexpr (std::is_same_v<T, FlatBuff>) {
                damage += e.amount;
              } else if constexpr (std::is_same_v<T, ThresholdBuff>) {
                if (card.base_damage <= e.stat_cap) damage += e.amount;
              } else if constexpr (std::is_same_v<T, KeywordGrant>) {
                if (e.keyword == "islandwalk") islandwalk = true;
              }
            }
          },
          effect);
    }
  }
  if (islandwalk && state.flag(kIslandFlag)) damage += kIslandwalkBonus;
  return std::max<std::int64_t>(damage, 0);
}

}  // namespace

ComboEvaluation evaluate_cards(std::span<const Card> copies, const BoardState& initial) {
  if (copies.empty()) throw Error(Errc::CardinalityError, "cannot evaluate an empty combo");
  const BoardState state = resolve_state(copies, initial);
  std::int64_t damage = 0;
  std::int64_t mana = 0;
  std::vector<ElementId> ids;
  ids.reserve(copies.size());
  for (std::size_t i = 0; i < copies.size(); ++i) {
    damage += copy_damage(copies, i, state);
    mana += copies[i].mana_cost;
    ids.push_back(copies[i].id);
  }
  const bool free = mana == 0;
  return ComboEvaluation{SynergySet(ids), damage, mana,
                         Value::ratio(static_cast<double>(damage), static_cast<double>(free ? 1 : mana)), free};
}

ComboEvaluation evaluate_combo(const CardPool& pool, const SynergySet& cards, const BoardState& initial,
                               std::uint32_t copy_cap) {
  std::vector<Card> copies;
  copies.reserve(cards.cardinality());
  for (const auto& [id, n] : cards.entries()) {
    const Card& card = pool.at(id);
    if (n > copy_cap) {
      throw Error(Errc::CopyCapExceeded, std::to_string(n) + " copies of '" + id.str() + "' exceed the cap of " +
                                             std::to_string(copy_cap));
    }
    copies.insert(copies.end(), n, card);
  }
  return evaluate_cards(copies, initial);
}

Value card_strength(const Card& card) {
  card.validate();
  return evaluate_cards(std::span<const Card>(&card, 1)).dpm;
}

DpmValueFunction::DpmValueFunction(std::shared_ptr<const CardPool> pool, BoardState state, std::uint32_t copy_cap)
    : pool_(std::move(pool)), state_(std::move(state)), copy_cap_(copy_cap) {}

Value DpmValueFunction::evaluate(const SynergySet& set) const {
  return evaluate_combo(*pool_, set, state_, copy_cap_).dpm;
}

SynergyScore combo_synergy(const CardPool& pool, const SynergySet& cards, const BoardState& state,
                           BaselineKind baseline) {
  // Non-owning view; the value function does not outlive this call.
  DpmValueFunction vf(std::shared_ptr<const CardPool>(&pool, [](const CardPool*) {}), state);
  return compute_synergy(cards, vf, baseline);
}

}  // namespace synergy::tcg
