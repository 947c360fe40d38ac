#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "synergy/error.hpp"
#include "synergy/search/space.hpp"
#include "synergy/tcg/card_io.hpp"
#include "synergy/tcg/evaluate.hpp"
#include "synergy/tcg/scan.hpp"

namespace synergy::tcg {
namespace {

using testing::fixture_path;
using testing::read_json;
using testing::read_text;

std::vector<Card> existing() { return parse_cards(read_text(fixture_path("cards.json"))); }
std::vector<Card> fresh() { return parse_cards(read_text(fixture_path("newset.json"))); }

CardPool full_pool() {
  auto all = existing();
  for (auto& c : fresh()) all.push_back(c);
  return CardPool(all);
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no synergy::Error thrown";
  return Errc::InvalidArgument;
}

Card vanilla(const std::string& id, int mana, int damage, std::vector<std::string> types = {"creature"}) {
  Card c{ElementId(id), id, mana, std::move(types), damage, {}, {}};
  return c;
}

const ElementId kLord("pearl-lord");
const ElementId kScout("merfolk-scout");
const ElementId kSeas("spreading-seas");

TEST(Evaluate, SingleBolt) {
  auto pool = full_pool();
  auto e = evaluate_combo(pool, SynergySet{"bolt"});
  EXPECT_EQ(e.total_damage, 3);
  EXPECT_EQ(e.total_mana, 1);
  EXPECT_EQ(e.dpm.embedded(), 3.0);
  EXPECT_FALSE(e.free_combo);
}

TEST(Evaluate, LordAndScout) {
  auto e = evaluate_combo(full_pool(), SynergySet{"pearl-lord", "merfolk-scout"});
  EXPECT_EQ(e.total_damage, 4);
  EXPECT_EQ(e.total_mana, 3);
  EXPECT_EQ(e.dpm.numerator(), 4.0);
  EXPECT_EQ(e.dpm.denominator(), 3.0);
}

TEST(Evaluate, LordScoutSeasGrantsIslandwalk) {
  auto e = evaluate_combo(full_pool(), SynergySet{"pearl-lord", "merfolk-scout", "spreading-seas"});
  EXPECT_EQ(e.total_damage, 6);
  EXPECT_EQ(e.total_mana, 4);
  EXPECT_EQ(e.dpm.embedded(), 1.5);
}

TEST(Evaluate, InitialBoardStateAndErrors) {
  auto pool = full_pool();
  BoardState island;
  island.opponent_flags[kIslandFlag] = true;
  EXPECT_EQ(evaluate_combo(pool, SynergySet{"coral-merfolk"}, island).total_damage,
            evaluate_combo(pool, SynergySet{"coral-merfolk"}).total_damage + kIslandwalkBonus);
  EXPECT_EQ(code_of([&] { evaluate_combo(pool, SynergySet{"bolt", "nope"}); }), Errc::UnknownCard);
  EXPECT_EQ(code_of([&] { evaluate_combo(pool, SynergySet{"bolt", "bolt", "bolt", "bolt", "bolt"}); }),
            Errc::CopyCapExceeded);
  EXPECT_NO_THROW(evaluate_combo(pool, SynergySet{"bolt", "bolt", "bolt", "bolt"}));
}

TEST(CardStrength, Examples) {
  auto pool = full_pool();
  auto bolt = card_strength(pool.at(ElementId("bolt")));
  EXPECT_EQ(bolt.numerator(), 3.0);
  EXPECT_EQ(bolt.denominator(), 1.0);
  auto seas = card_strength(pool.at(kSeas));
  EXPECT_EQ(seas.numerator(), 0.0);
  EXPECT_EQ(seas.denominator(), 1.0);
  Card free = vanilla("free", 0, 1);
  auto e = evaluate_cards(std::span<const Card>(&free, 1));
  EXPECT_TRUE(e.free_combo);
  EXPECT_EQ(e.dpm.numerator(), 1.0);
  EXPECT_EQ(e.dpm.denominator(), 1.0);
}

TEST(ComboSynergy, Examples) {
  auto pool = full_pool();
  auto bolts = combo_synergy(pool, SynergySet{"bolt", "bolt"});
  EXPECT_EQ(bolts.baseline_value.embedded(), 3.0);
  EXPECT_EQ(bolts.synergy, 0.0);
  auto pair = combo_synergy(pool, SynergySet{"pearl-lord", "merfolk-scout"});
  EXPECT_EQ(pair.baseline_value.embedded(), 1.0);
  EXPECT_DOUBLE_EQ(pair.synergy, 1.0 / 3.0);
  auto triple = combo_synergy(pool, SynergySet{"pearl-lord", "merfolk-scout", "spreading-seas"});
  EXPECT_EQ(triple.baseline_value.embedded(), 0.75);
  EXPECT_EQ(triple.synergy, 0.75);
  auto sum = combo_synergy(pool, SynergySet{"pearl-lord", "merfolk-scout"}, {}, BaselineKind::Sum);
  EXPECT_EQ(sum.baseline, BaselineKind::Sum);
  EXPECT_EQ(sum.baseline_value.embedded(), 2.0);
}

TEST(Evaluate, FixtureTableMatchesExactly) {
  auto pool = full_pool();
  auto table = read_json(fixture_path("cards.table.json"));
  ASSERT_EQ(table["combos"].size(), 363u);
  for (const auto& row : table["combos"]) {
    std::vector<ElementId> ids;
    for (const auto& c : row["cards"]) ids.emplace_back(c.get<std::string>());
    auto e = evaluate_combo(pool, SynergySet(ids));
    EXPECT_EQ(e.total_damage, row["damage"].get<std::int64_t>()) << row.dump();
    EXPECT_EQ(e.total_mana, row["mana"].get<std::int64_t>()) << row.dump();
  }
}

TEST(Properties, OrderIndependence) {
  auto pool = full_pool();
  std::vector<Card> cards(pool.cards().begin(), pool.cards().end());
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    std::vector<Card> combo;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) combo.push_back(cards[rng() % cards.size()]);
    auto base = evaluate_cards(combo);
    for (int p = 0; p < 5; ++p) {
      std::shuffle(combo.begin(), combo.end(), rng);
      auto e = evaluate_cards(combo);
      EXPECT_EQ(e.total_damage, base.total_damage);
      EXPECT_EQ(e.total_mana, base.total_mana);
      EXPECT_EQ(e.dpm, base.dpm);
      EXPECT_EQ(e.cards, base.cards);
    }
  }
}

TEST(Properties, StateModifierNeverLowersDamage) {
  auto pool = full_pool();
  std::vector<Card> cards(pool.cards().begin(), pool.cards().end());
  Card flip = vanilla("island-maker", 1, 0, {"enchantment"});
  flip.effects.push_back(StateModifier{kIslandFlag, true});
  std::mt19937_64 rng(23);
  for (int round = 0; round < 300; ++round) {
    std::vector<Card> combo;
    std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) combo.push_back(cards[rng() % cards.size()]);
    auto before = evaluate_cards(combo).total_damage;
    combo.push_back(flip);
    EXPECT_GE(evaluate_cards(combo).total_damage, before);
  }
}

TEST(Properties, InteractionFreeCardsHaveZeroPooledSynergy) {
  std::vector<Card> cards;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 8; ++i) cards.push_back(vanilla("v" + std::to_string(i), 1 + rng() % 6, rng() % 7));
  CardPool pool(cards);
  search::CandidateSpace space{pool.ids(), 2, 3, 4, std::nullopt};
  for (const auto& set : search::enumerate_sets(space)) EXPECT_EQ(combo_synergy(pool, set).synergy, 0.0);
}

TEST(Properties, NoEvaluatedSetExceedsCopyCap) {
  search::CandidateSpace space{full_pool().ids(), 2, 6, kDeckCopyCap, std::nullopt};
  for (const auto& set : search::enumerate_sets(space)) {
    for (const auto& [id, n] : set.entries()) ASSERT_LE(n, kDeckCopyCap);
  }
}

TEST(CardIo, ParseAndCanonicalRoundTrip) {
  auto cards = existing();
  EXPECT_EQ(cards.size(), 10u);
  auto again = parse_cards(cards_to_json(cards));
  EXPECT_EQ(again, cards);
  EXPECT_EQ(cards_to_json(again), cards_to_json(cards));
}

TEST(CardIo, Rejections) {
  EXPECT_EQ(code_of([] { parse_cards("[]"); }), Errc::InvalidCard);
  EXPECT_EQ(code_of([] { parse_cards(R"({"cards":[{"id":"x","mana":1,"damage":1,"types":[],
      "effects":[{"kind":"teleport"}]}]})"); }),
            Errc::InvalidCard);
  EXPECT_EQ(code_of([] { parse_cards(R"({"cards":[{"id":"x","mana":-1,"damage":1,"types":[]}]})"); }),
            Errc::InvalidCard);
  EXPECT_EQ(code_of([] { CardPool({vanilla("x", 1, 1), vanilla("x", 2, 2)}); }), Errc::InvalidCard);
}

/// The scan population and flags computed from the fixture's hand table
/// with plain arithmetic.
struct OracleFlag {
  std::vector<std::string> cards;
  double synergy;
};

std::vector<OracleFlag> oracle_scan(double threshold) {
  auto table = read_json(fixture_path("cards.table.json"));
  std::map<std::string, std::pair<double, double>> solo;
  for (const auto& row : table["combos"]) {
    if (row["cards"].size() == 1) {
      solo[row["cards"][0].get<std::string>()] = {row["damage"].get<double>(), row["mana"].get<double>()};
    }
  }
  std::vector<OracleFlag> pop;
  for (const auto& row : table["combos"]) {
    auto cards = row["cards"].get<std::vector<std::string>>();
    if (cards.size() < 2 || std::find(cards.begin(), cards.end(), "pearl-lord") == cards.end()) continue;
    double num = 0, den = 0;
    for (const auto& c : cards) {
      num += solo[c].first;
      den += solo[c].second;
    }
    double v = row["damage"].get<double>() / std::max(row["mana"].get<double>(), 1.0);
    pop.push_back({cards, v - num / den});
  }
  std::vector<double> s;
  for (const auto& p : pop) s.push_back(p.synergy);
  std::sort(s.begin(), s.end());
  auto med = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
  };
  double m = med(s);
  std::vector<double> dev;
  for (double x : s) dev.push_back(std::abs(x - m));
  double mad = med(dev);
  std::vector<OracleFlag> flagged;
  for (const auto& p : pop) {
    bool flag = mad == 0 ? p.synergy != m : std::abs(p.synergy - m) / (1.4826 * mad) > threshold;
    if (flag) flagged.push_back(p);
  }
  std::sort(flagged.begin(), flagged.end(), [&](const OracleFlag& a, const OracleFlag& b) {
    double da = mad == 0 ? 0 : std::abs(a.synergy - m), db = mad == 0 ? 0 : std::abs(b.synergy - m);
    if (da != db) return da > db;
    if (a.synergy != b.synergy) return a.synergy > b.synergy;
    return a.cards < b.cards;
  });
  return flagged;
}

TEST(Scan, ExhaustiveMatchesOracle) {
  ScanSpec spec;
  auto r = scan_new_set(fresh(), existing(), spec);
  auto want = oracle_scan(3.5);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.report.stats.population, 77u);
  ASSERT_EQ(r.report.flagged.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(r.report.flagged[i].score.set.expanded_strings(), want[i].cards) << i;
    EXPECT_EQ(r.report.flagged[i].score.synergy, want[i].synergy) << i;
  }
  EXPECT_EQ(r.report.flagged[0].score.set, (SynergySet{"pearl-lord", "merfolk-scout", "spreading-seas"}));
  auto table = read_json(fixture_path("cards.table.json"));
  ASSERT_EQ(table["scan_madz_flagged"].size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(table["scan_madz_flagged"][i].get<std::vector<std::string>>(), want[i].cards);
  }
}

TEST(Scan, SampledFlagsAreSubsetOfExhaustive) {
  ScanSpec spec;
  auto full = scan_new_set(fresh(), existing(), spec);
  std::set<SynergySet> all;
  for (const auto& f : full.report.flagged) all.insert(f.score.set);
  spec.strategy = search::UniformSample{500, 2024};
  auto sampled = scan_new_set(fresh(), existing(), spec);
  EXPECT_FALSE(sampled.exhaustive);
  EXPECT_FALSE(sampled.report.flagged.empty());
  for (const auto& f : sampled.report.flagged) EXPECT_TRUE(all.contains(f.score.set)) << f.score.set.to_string();
}

TEST(Scan, CardOrderPermutationChangesNothing) {
  ScanSpec spec;
  auto base = scan_new_set(fresh(), existing(), spec);
  auto cards = existing();
  std::mt19937_64 rng(8);
  for (int p = 0; p < 5; ++p) {
    std::shuffle(cards.begin(), cards.end(), rng);
    auto r = scan_new_set(fresh(), cards, spec);
    ASSERT_EQ(r.report.flagged.size(), base.report.flagged.size());
    for (std::size_t i = 0; i < r.report.flagged.size(); ++i) {
      EXPECT_EQ(r.report.flagged[i].score.set, base.report.flagged[i].score.set);
      EXPECT_EQ(r.report.flagged[i].score.synergy, base.report.flagged[i].score.synergy);
    }
  }
}

TEST(Scan, VanillaSetHasNoFlags) {
  std::vector<Card> pool;
  for (int i = 0; i < 5; ++i) pool.push_back(vanilla("old" + std::to_string(i), 1 + i, 2 * i));
  std::vector<Card> added{vanilla("new", 3, 3)};
  auto r = scan_new_set(added, pool, ScanSpec{});
  EXPECT_TRUE(r.report.flagged.empty());
}

TEST(Scan, WorkersDoNotChangeFlags) {
  ScanSpec spec;
  auto serial = scan_new_set(fresh(), existing(), spec);
  spec.workers = 4;
  auto par = scan_new_set(fresh(), existing(), spec);
  ASSERT_EQ(par.report.flagged.size(), serial.report.flagged.size());
  for (std::size_t i = 0; i < par.report.flagged.size(); ++i) {
    EXPECT_EQ(par.report.flagged[i].score.set, serial.report.flagged[i].score.set);
  }
}

TEST(Edits, ParseForms) {
  auto e = CardEdit::parse("pearl-lord:effects.0.amount=0");
  EXPECT_EQ(e.card, kLord);
  EXPECT_EQ(e.field, "effects.0.amount");
  EXPECT_EQ(std::get<std::int64_t>(e.value), 0);
  EXPECT_EQ(std::get<bool>(CardEdit::parse("x:effects.1.excludes_self=false").value), false);
  EXPECT_EQ(std::get<std::string>(CardEdit::parse("x:name=Big Guy").value), "Big Guy");
  EXPECT_EQ(code_of([] { CardEdit::parse("no-colon"); }), Errc::InvalidEdit);
}

TEST(Edits, ApplyIsImmutableAndVersioned) {
  auto pool = full_pool();
  std::vector<CardEdit> edits{CardEdit::parse("pearl-lord:effects.0.amount=0")};
  auto next = apply_edits(pool, edits);
  EXPECT_EQ(next.version(), pool.version() + 1);
  EXPECT_EQ(std::get<FlatBuff>(pool.at(kLord).effects[0]).amount, 1);
  EXPECT_EQ(std::get<FlatBuff>(next.at(kLord).effects[0]).amount, 0);
  EXPECT_EQ(apply_edits(pool, {}).version(), pool.version());
  std::vector<CardEdit> ghost{CardEdit::parse("ghost:mana=1")};
  EXPECT_EQ(code_of([&] { apply_edits(pool, ghost); }), Errc::UnknownCard);
  std::vector<CardEdit> bad_field{CardEdit::parse("pearl-lord:colour=blue")};
  EXPECT_EQ(code_of([&] { apply_edits(pool, bad_field); }), Errc::InvalidEdit);
  std::vector<CardEdit> negative{CardEdit::parse("pearl-lord:mana=-1")};
  EXPECT_EQ(code_of([&] { apply_edits(pool, negative); }), Errc::InvalidEdit);
  std::vector<CardEdit> out_of_range{CardEdit::parse("pearl-lord:effects.9.amount=1")};
  EXPECT_EQ(code_of([&] { apply_edits(pool, out_of_range); }), Errc::InvalidEdit);
}

TEST(Rebalance, NerfRemovesLordScoutFlag) {
  auto pool = full_pool();
  std::vector<ElementId> ids{kLord};
  ScanSpec spec;
  auto before = scan_pool(pool, ids, spec);
  auto has_pair = [](const ScanResult& r) {
    return std::any_of(r.report.flagged.begin(), r.report.flagged.end(), [](const search::OutlierFlag& f) {
      return f.score.set == SynergySet{"pearl-lord", "merfolk-scout"};
    });
  };
  EXPECT_TRUE(has_pair(before));
  std::vector<CardEdit> nerf{CardEdit::parse("pearl-lord:effects.0.amount=0")};
  auto after = rebalance_iterate(pool, ids, nerf, spec);
  EXPECT_FALSE(has_pair(after.scan));
  EXPECT_EQ(combo_synergy(after.pool, SynergySet{"pearl-lord", "merfolk-scout"}).synergy, 0.0);
  EXPECT_EQ(after.scan.pool_version, 2u);
}

}  // namespace
}  // namespace synergy::tcg
