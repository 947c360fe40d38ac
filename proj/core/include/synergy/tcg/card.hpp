#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "synergy/core/element.hpp"

namespace synergy::tcg {

struct Card;

/// Type-tag predicate: matches a card holding any listed tag. Empty matches all.
struct CardFilter {
  std::vector<std::string> any_of_types;

  bool matches(const Card& card) const noexcept;
  friend bool operator==(const CardFilter&, const CardFilter&) = default;
};

/// +amount damage to matching cards (may be negative).
struct FlatBuff {
  int amount = 0;
  CardFilter filter;
  bool excludes_self = true;
  friend bool operator==(const FlatBuff&, const FlatBuff&) = default;
};

/// Grants a keyword (e.g. "islandwalk") to matching cards.
struct KeywordGrant {
  std::string keyword;
  CardFilter filter;
  bool excludes_self = true;
  friend bool operator==(const KeywordGrant&, const KeywordGrant&) = default;
};

/// Sets an opponent-board flag (e.g. "opponent_has_island").
struct StateModifier {
  std::string flag;
  bool value = true;
  friend bool operator==(const StateModifier&, const StateModifier&) = default;
};

/// +amount damage to matching cards whose printed damage is <= stat_cap.
struct ThresholdBuff {
  int amount = 0;
  int stat_cap = 0;
  CardFilter filter;
  bool excludes_self = true;
  friend bool operator==(const ThresholdBuff&, const ThresholdBuff&) = default;
};

using Effect = std::variant<FlatBuff, KeywordGrant, StateModifier, ThresholdBuff>;

struct Card {
  ElementId id;
  std::string name;
  int mana_cost = 0;
  std::vector<std::string> types;
  int base_damage = 0;
  std::vector<std::string> keywords;  ///< innate keywords
  std::vector<Effect> effects;

  bool has_type(std::string_view tag) const noexcept;
  bool has_keyword(std::string_view keyword) const noexcept;
  /// Throws InvalidCard.
  void validate() const;

  friend bool operator==(const Card&, const Card&) = default;
};

/// Opponent-side flags; anything unset reads as false.
struct BoardState {
  std::map<std::string, bool> opponent_flags;

  bool flag(std::string_view name) const noexcept;
};

/// An immutable, numbered version of a card pool.
class CardPool {
 public:
  /// Throws InvalidCard (including duplicate ids).
  explicit CardPool(std::vector<Card> cards, std::uint64_t version = 1);

  std::uint64_t version() const noexcept { return version_; }
  std::span<const Card> cards() const noexcept { return cards_; }  ///< sorted by id
  std::vector<ElementId> ids() const;

  /// nullptr when absent.
  const Card* find(const ElementId& id) const noexcept;
  /// Throws UnknownCard.
  const Card& at(const ElementId& id) const;

 private:
  std::vector<Card> cards_;
  std::uint64_t version_;
};

}  // namespace synergy::tcg
