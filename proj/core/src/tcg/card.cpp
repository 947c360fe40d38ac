#include "synergy/tcg/card.hpp"

#include <algorithm>

#include "synergy/error.hpp"

namespace synergy::tcg {

bool CardFilter::matches(const Card& card) const noexcept {
  if (any_of_types.empty()) return true;
  return std::any_of(any_of_types.begin(), any_of_types.end(),
                     [&](const std::string& tag) { return card.has_type(tag); });
}

bool Card::has_type(std::string_view tag) const noexcept {
  return std::find(types.begin(), types.end(), tag) != types.end();
}

bool Card::has_keyword(std::string_view keyword) const noexcept {
  return std::find(keywords.begin(), keywords.end(), keyword) != keywords.end();
}

void Card::validate() const {
  auto fail = [&](const std::string& why) { throw Error(Errc::InvalidCard, "card '" + id.str() + "': " + why); };
  if (mana_cost < 0) fail("mana cost must be >= 0");
  if (base_damage < 0) fail("damage must be >= 0");
  for (const auto& effect : effects) {
    if (const auto* k = std::get_if<KeywordGrant>(&effect); k && k->keyword.empty()) fail("keyword grant needs a keyword");
    if (const auto* s = std::get_if<StateModifier>(&effect); s && s->flag.empty()) fail("state modifier needs a flag");
  }
}

bool BoardState::flag(std::string_view name) const noexcept {
  auto it = opponent_flags.find(std::string(name));
  return it != opponent_flags.end() && it->second;
}

CardPool::CardPool(std::vector<Card> cards, std::uint64_t version) : cards_(std::move(cards)), version_(version) {
  std::sort(cards_.begin(), cards_.end(), [](const Card& a, const Card& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    cards_[i].validate();
    if (i > 0 && cards_[i].id == cards_[i - 1].id) {
      throw Error(Errc::InvalidCard, "duplicate card id '" + cards_[i].id.str() + "'");
    }
  }
}

std::vector<ElementId> CardPool::ids() const {
  std::vector<ElementId> out;
  out.reserve(cards_.size());
  for (const auto& c : cards_) out.push_back(c.id);
  return out;
}

const Card* CardPool::find(const ElementId& id) const noexcept {
  auto it = std::lower_bound(cards_.begin(), cards_.end(), id, [](const Card& c, const ElementId& key) { return c.id < key; });
  return (it != cards_.end() && it->id == id) ? &*it : nullptr;
}

const Card& CardPool::at(const ElementId& id) const {
  if (const Card* c = find(id)) return *c;
  throw Error(Errc::UnknownCard, "no card with id '" + id.str() + "'");
}

}  // namespace synergy::tcg
