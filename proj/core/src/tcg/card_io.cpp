#include "synergy/tcg/card_io.hpp"

#include "json.hpp"
#include "synergy/error.hpp"

namespace synergy::tcg {

namespace {

using nlohmann::json;

class CardParser {
 public:
  explicit CardParser(std::string where) : where_(std::move(where)) {}

  [[noreturn]] void fail(const std::string& why) const { throw Error(Errc::InvalidCard, where_ + ": " + why); }

  int integer(const json& obj, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer()) fail(std::string("'") + key + "' must be an integer");
    return it->get<int>();
  }

  std::string text(const json& obj, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string() || it->get_ref<const std::string&>().empty()) {
      fail(std::string("'") + key + "' must be a non-empty string");
    }
    return it->get<std::string>();
  }

  bool flag(const json& obj, const char* key, bool fallback) const {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) fail(std::string("'") + key + "' must be a boolean");
    return it->get<bool>();
  }

  std::vector<std::string> strings(const json& obj, const char* key) const {
    std::vector<std::string> out;
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return out;
    if (!it->is_array()) fail(std::string("'") + key + "' must be a list of strings");
    for (const auto& s : *it) {
      if (!s.is_string()) fail(std::string("'") + key + "' must be a list of strings");
      out.push_back(s.get<std::string>());
    }
    return out;
  }

  Effect effect(const json& e) const {
    if (!e.is_object()) fail("effect must be an object");
    const std::string kind = text(e, "kind");
    if (kind == "flat_buff") {
      return FlatBuff{integer(e, "amount"), CardFilter{strings(e, "filter")}, flag(e, "excludes_self", true)};
    }
    if (kind == "keyword") {
      return KeywordGrant{text(e, "keyword"), CardFilter{strings(e, "filter")}, flag(e, "excludes_self", true)};
    }
    if (kind == "state") return StateModifier{text(e, "flag"), flag(e, "value", true)};
    if (kind == "threshold_buff") {
      return ThresholdBuff{integer(e, "amount"), integer(e, "stat_cap"), CardFilter{strings(e, "filter")},
                           flag(e, "excludes_self", true)};
    }
    fail("unknown effect kind '" + kind + "'");
  }

 private:
  std::string where_;
};

json filter_json(const CardFilter& f) { return f.any_of_types; }

json effect_json(const Effect& effect) {
  return std::visit(
      [](const auto& e) -> json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, FlatBuff>) {
          return {{"kind", "flat_buff"}, {"amount", e.amount}, {"filter", filter_json(e.filter)},
                  {"excludes_self", e.excludes_self}};
        } else if constexpr (std::is_same_v<T, KeywordGrant>) {
          return {{"kind", "keyword"}, {"keyword", e.keyword}, {"filter", filter_json(e.filter)},
                  {"excludes_self", e.excludes_self}};
        } else if constexpr (std::is_same_v<T, StateModifier>) {
          return {{"kind", "state"}, {"flag", e.flag}, {"value", e.value}};
        } else {
          return {{"kind", "threshold_buff"}, {"amount", e.amount}, {"stat_cap", e.stat_cap},
                  {"filter", filter_json(e.filter)}, {"excludes_self", e.excludes_self}};
        }
      },
      effect);
}

}  // namespace

std::vector<Card> parse_cards(std::string_view json_text) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw Error(Errc::InvalidCard, "card set is not valid json");
  if (!doc.is_object() || !doc.contains("cards") || !doc["cards"].is_array()) {
    throw Error(Errc::InvalidCard, "card set must be an object with a 'cards' list");
  }
  std::vector<Card> cards;
  std::size_t i = 0;
  for (const auto& c : doc["cards"]) {
    CardParser p("card #" + std::to_string(i++));
    if (!c.is_object()) p.fail("card must be an object");
    const std::string id = p.text(c, "id");
    CardParser named("card '" + id + "'");
    std::string name = c.contains("name") ? named.text(c, "name") : id;
    std::vector<Effect> effects;
    if (auto it = c.find("effects"); it != c.end() && !it->is_null()) {
      if (!it->is_array()) named.fail("'effects' must be a list");
      for (const auto& e : *it) effects.push_back(named.effect(e));
    }
    Card card{ElementId(id),           std::move(name),
              named.integer(c, "mana"), named.strings(c, "types"),
              named.integer(c, "damage"), named.strings(c, "keywords"),
              std::move(effects)};
    card.validate();
    cards.push_back(std::move(card));
  }
  return cards;
}

std::string cards_to_json(std::span<const Card> cards) {
  json list = json::array();
  for (const auto& c : cards) {
    json effects = json::array();
    for (const auto& e : c.effects) effects.push_back(effect_json(e));
    list.push_back({{"id", c.id.str()},
                    {"name", c.name},
                    {"mana", c.mana_cost},
                    {"types", c.types},
                    {"damage", c.base_damage},
                    {"keywords", c.keywords},
                    {"effects", std::move(effects)}});
  }
  return json{{"cards", std::move(list)}}.dump(1) + "\n";
}

}  // namespace synergy::tcg
