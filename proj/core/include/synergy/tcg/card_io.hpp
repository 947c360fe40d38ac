#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synergy/tcg/card.hpp"

namespace synergy::tcg {

/// Parses a card-set document:
///
///   {"cards": [{"id": str, "name": str, "mana": int, "types": [str],
///               "damage": int, "keywords": [str], "effects": [...]}]}
///
/// Effects, by "kind":
///   flat_buff       amount:int, filter:[str], excludes_self:bool=true
///   keyword         keyword:str, filter:[str], excludes_self:bool=true
///   state           flag:str, value:bool=true
///   threshold_buff  amount:int, stat_cap:int, filter:[str], excludes_self:bool=true
///
/// An absent or empty filter matches every card. Unknown effect kinds and
/// malformed fields throw InvalidCard.
std::vector<Card> parse_cards(std::string_view json_text);

/// Canonical JSON for a card list (stable key order, 1-space indent).
std::string cards_to_json(std::span<const Card> cards);

}  // namespace synergy::tcg
