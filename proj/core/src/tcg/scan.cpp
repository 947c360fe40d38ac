#include "synergy/tcg/scan.hpp"

#include <algorithm>
#include <charconv>

#include "synergy/error.hpp"

namespace synergy::tcg {

ScanResult scan_pool(const CardPool& pool, std::span<const ElementId> new_ids, const ScanSpec& spec) {
  if (new_ids.empty()) throw Error(Errc::InvalidSpace, "a scan needs at least one new card");
  for (const auto& id : new_ids) pool.at(id);
  if (spec.copy_cap > kDeckCopyCap) {
    throw Error(Errc::InvalidSpace, "copy cap above " + std::to_string(kDeckCopyCap) + " is not a legal deck");
  }

  search::CandidateSpace space;
  space.pool = pool.ids();
  space.size_min = spec.size_min;
  space.size_max = spec.size_max;
  space.copy_cap = spec.copy_cap;
  space.filter = search::SetFilter::must_contain_any(std::vector<ElementId>(new_ids.begin(), new_ids.end()));

  auto shared = std::make_shared<const CardPool>(pool);
  DpmValueFunction vf(shared, spec.state, spec.copy_cap);
  search::SearchOptions options;
  options.workers = spec.workers;
  auto population = search::score_space(space, vf, spec.baseline, spec.strategy, options);

  ScanResult result;
  result.report = search::detect_outliers(population.scores, spec.method, spec.threshold);
  result.sets_examined = population.sets_examined;
  result.exhaustive = population.exhaustive;
  result.pool_version = pool.version();
  return result;
}

ScanResult scan_new_set(std::span<const Card> new_cards, std::span<const Card> existing, const ScanSpec& spec) {
  std::vector<Card> all(existing.begin(), existing.end());
  all.insert(all.end(), new_cards.begin(), new_cards.end());
  std::vector<ElementId> new_ids;
  for (const auto& c : new_cards) new_ids.push_back(c.id);
  return scan_pool(CardPool(std::move(all)), new_ids, spec);
}

CardEdit CardEdit::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto eq = text.find('=', colon == std::string_view::npos ? 0 : colon);
  if (colon == std::string_view::npos || eq == std::string_view::npos || colon == 0 || eq == colon + 1) {
    throw Error(Errc::InvalidEdit, "edit must look like <card>:<field>=<value>, got '" + std::string(text) + "'");
  }
  const auto raw = text.substr(eq + 1);
  EditValue value = std::string(raw);
  std::int64_t n = 0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), n);
  if (!raw.empty() && ec == std::errc() && ptr == raw.data() + raw.size()) {
    value = n;
  } else if (raw == "true" || raw == "false") {
    value = raw == "true";
  }
  return CardEdit{ElementId(text.substr(0, colon)), std::string(text.substr(colon + 1, eq - colon - 1)), value};
}

namespace {

[[noreturn]] void bad_edit(const CardEdit& edit, const std::string& why) {
  throw Error(Errc::InvalidEdit, edit.card.str() + ":" + edit.field + ": " + why);
}

std::int64_t as_int(const CardEdit& edit) {
  if (const auto* v = std::get_if<std::int64_t>(&edit.value)) return *v;
  bad_edit(edit, "expects an integer");
}

bool as_bool(const CardEdit& edit) {
  if (const auto* v = std::get_if<bool>(&edit.value)) return *v;
  bad_edit(edit, "expects true or false");
}

std::string as_text(const CardEdit& edit) {
  if (const auto* v = std::get_if<std::string>(&edit.value)) return *v;
  if (const auto* v = std::get_if<std::int64_t>(&edit.value)) return std::to_string(*v);
  return std::get<bool>(edit.value) ? "true" : "false";
}

std::vector<std::string> as_list(const CardEdit& edit) {
  std::vector<std::string> out;
  std::string_view rest = as_text(edit);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    if (auto token = rest.substr(0, comma); !token.empty()) out.emplace_back(token);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

int as_small_int(const CardEdit& edit) {
  const auto v = as_int(edit);
  if (v < -1'000'000 || v > 1'000'000) bad_edit(edit, "value out of range");
  return static_cast<int>(v);
}

void apply_effect_edit(Effect& effect, std::string_view key, const CardEdit& edit) {
  auto unsupported = [&] { bad_edit(edit, "effect has no field '" + std::string(key) + "'"); };
  std::visit(
      [&](auto& e) {
        using T = std::decay_t<decltype(e)>;
        if (key == "amount") {
          if constexpr (std::is_same_v<T, FlatBuff> || std::is_same_v<T, ThresholdBuff>) {
            e.amount = as_small_int(edit);
          } else {
            unsupported();
          }
        } else if (key == "stat_cap") {
          if constexpr (std::is_same_v<T, ThresholdBuff>) {
            e.stat_cap = as_small_int(edit);
          } else {
            unsupported();
          }
        } else if (key == "excludes_self") {
          if constexpr (std::is_same_v<T, StateModifier>) {
            unsupported();
          } else {
            e.excludes_self = as_bool(edit);
          }
        } else if (key == "filter") {
          if constexpr (std::is_same_v<T, StateModifier>) {
            unsupported();
          } else {
            e.filter.any_of_types = as_list(edit);
          }
        } else if (key == "keyword") {
          if constexpr (std::is_same_v<T, KeywordGrant>) {
            e.keyword = as_text(edit);
          } else {
            unsupported();
          }
        } else if (key == "flag") {
          if constexpr (std::is_same_v<T, StateModifier>) {
            e.flag = as_text(edit);
          } else {
            unsupported();
          }
        } else if (key == "value") {
          if constexpr (std::is_same_v<T, StateModifier>) {
            e.value = as_bool(edit);
          } else {
            unsupported();
          }
        } else {
          unsupported();
        }
      },
      effect);
}

void apply_edit(Card& card, const CardEdit& edit) {
  const std::string_view field = edit.field;
  if (field == "name") {
    card.name = as_text(edit);
  } else if (field == "mana") {
    card.mana_cost = as_small_int(edit);
  } else if (field == "damage") {
    card.base_damage = as_small_int(edit);
  } else if (field == "types") {
    card.types = as_list(edit);
  } else if (field == "keywords") {
    card.keywords = as_list(edit);
  } else if (field.starts_with("effects.")) {
    auto rest = field.substr(8);
    const auto dot = rest.find('.');
    if (dot == std::string_view::npos) bad_edit(edit, "expected effects.<index>.<field>");
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + dot, index);
    if (ec != std::errc() || ptr != rest.data() + dot) bad_edit(edit, "bad effect index");
    if (index >= card.effects.size()) bad_edit(edit, "card has no effect #" + std::to_string(index));
    apply_effect_edit(card.effects[index], rest.substr(dot + 1), edit);
  } else {
    bad_edit(edit, "unknown field");
  }
}

}  // namespace

CardPool apply_edits(const CardPool& pool, std::span<const CardEdit> edits) {
  if (edits.empty()) return pool;
  std::vector<Card> cards(pool.cards().begin(), pool.cards().end());
  for (const auto& edit : edits) {
    auto it = std::find_if(cards.begin(), cards.end(), [&](const Card& c) { return c.id == edit.card; });
    if (it == cards.end()) throw Error(Errc::UnknownCard, "no card with id '" + edit.card.str() + "'");
    apply_edit(*it, edit);
    try {
      it->validate();
    } catch (const Error& e) {
      bad_edit(edit, e.detail());
    }
  }
  return CardPool(std::move(cards), pool.version() + 1);
}

RebalanceResult rebalance_iterate(const CardPool& pool, std::span<const ElementId> new_ids,
                                  std::span<const CardEdit> edits, const ScanSpec& spec) {
  CardPool next = apply_edits(pool, edits);
  ScanResult scan = scan_pool(next, new_ids, spec);
  return RebalanceResult{std::move(next), std::move(scan)};
}

}  // namespace synergy::tcg
