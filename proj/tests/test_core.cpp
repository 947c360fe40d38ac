#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <cstring>
#include <random>
#include <thread>

#include "support.hpp"
#include "synergy/core/synergy.hpp"
#include "synergy/error.hpp"

namespace synergy {
namespace {

using testing::additive_vf;
using testing::letter_pool;

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no synergy::Error thrown";
  return Errc::InvalidArgument;
}

std::shared_ptr<FunctionValueFunction> table_vf(ValueScale scale, std::map<std::string, Value> table) {
  std::vector<ElementId> pool;
  for (const auto& [k, v] : table) {
    if (k.find(',') == std::string::npos) pool.emplace_back(k);
  }
  return std::make_shared<FunctionValueFunction>(scale, pool, [table](const SynergySet& s) {
    std::string key;
    for (const auto& id : s.expanded_strings()) key += (key.empty() ? "" : ",") + id;
    return table.at(key);
  });
}

TEST(ElementId, RejectsEmpty) { EXPECT_EQ(code_of([] { ElementId(""); }), Errc::InvalidArgument); }

TEST(ElementId, ExactStringEquality) {
  EXPECT_EQ(ElementId("a"), ElementId("a"));
  EXPECT_NE(ElementId("a"), ElementId("A"));
  EXPECT_NE(ElementId("a"), ElementId("a "));
}

TEST(SynergySet, CanonicalFormIgnoresInputOrder) {
  SynergySet x{"b", "a", "b"};
  SynergySet y{"b", "b", "a"};
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.cardinality(), 3u);
  EXPECT_EQ(x.distinct(), 2u);
  EXPECT_EQ(x.count(ElementId("b")), 2u);
  EXPECT_EQ(x.to_string(), "{a,b,b}");
}

TEST(SynergySet, LexicographicOrderOnExpandedIds) {
  std::vector<SynergySet> v{SynergySet{"b"}, SynergySet{"a", "b"}, SynergySet{"a", "a", "b"}, SynergySet{"a", "a"}};
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v[0].to_string(), "{a,a}");
  EXPECT_EQ(v[1].to_string(), "{a,a,b}");
  EXPECT_EQ(v[2].to_string(), "{a,b}");
  EXPECT_EQ(v[3].to_string(), "{b}");
}

TEST(SynergySet, FromCountsMergesAndRejectsZero) {
  auto s = SynergySet::from_counts({{ElementId("a"), 1}, {ElementId("a"), 2}, {ElementId("b"), 1}});
  EXPECT_EQ(s.to_string(), "{a,a,a,b}");
  EXPECT_THROW(SynergySet::from_counts({{ElementId("a"), 0}}), Error);
  EXPECT_THROW(SynergySet(std::span<const ElementId>{}), Error);
}

TEST(ValueScale, OrdinalLabelsMustBeNonEmptyAndUnique) {
  EXPECT_THROW(ValueScale::ordinal({}), Error);
  EXPECT_THROW(ValueScale::ordinal({"x", "x"}), Error);
}

TEST(OrdinalRank, Examples) {
  auto s = ValueScale::ordinal({"freezing", "cold", "warm", "hot"});
  EXPECT_EQ(ordinal_rank(s, "freezing"), 0u);
  EXPECT_EQ(ordinal_rank(s, "hot"), 3u);
  EXPECT_EQ(code_of([&] { ordinal_rank(s, "tepid"); }), Errc::UnknownLabel);
  EXPECT_EQ(code_of([] { ordinal_rank(ValueScale::numeric(), "x"); }), Errc::ScaleMismatch);
}

TEST(Value, RatioEmbeddingAndInvariants) {
  EXPECT_DOUBLE_EQ(Value::ratio(4, 3).embedded(), 4.0 / 3.0);
  EXPECT_THROW(Value::ratio(1, -1), Error);
  auto s = ValueScale::ordinal({"lo", "hi"});
  EXPECT_THROW(Value::ordinal(s, std::size_t{2}), Error);
  EXPECT_EQ(Value::ordinal(s, "hi").rank(), 1u);
}

TEST(ComputeSynergy, AdditiveIsZero) {
  auto vf = table_vf(ValueScale::numeric(),
                     {{"a", Value::numeric(2)}, {"b", Value::numeric(3)}, {"a,b", Value::numeric(5)}});
  auto s = compute_synergy(SynergySet{"a", "b"}, *vf, BaselineKind::Sum);
  EXPECT_EQ(s.synergy, 0.0);
  EXPECT_EQ(s.baseline, BaselineKind::Sum);
}

TEST(ComputeSynergy, PositiveSynergy) {
  auto vf = table_vf(ValueScale::numeric(),
                     {{"a", Value::numeric(2)}, {"b", Value::numeric(3)}, {"a,b", Value::numeric(7)}});
  auto s = compute_synergy(SynergySet{"a", "b"}, *vf, BaselineKind::Sum);
  EXPECT_EQ(s.synergy, 2.0);
  EXPECT_EQ(s.set_value.number(), 7.0);
  EXPECT_EQ(s.baseline_value.embedded(), 5.0);
}

TEST(ComputeSynergy, OrdinalRanksAreNotClamped) {
  auto scale = ValueScale::ordinal({"freezing", "cold", "warm", "hot"});
  auto vf = table_vf(scale, {{"a", Value::ordinal(scale, "cold")},
                             {"b", Value::ordinal(scale, "cold")},
                             {"a,b", Value::ordinal(scale, "hot")}});
  auto s = compute_synergy(SynergySet{"a", "b"}, *vf, BaselineKind::Sum);
  EXPECT_EQ(s.synergy, 1.0);
  EXPECT_EQ(s.baseline_value.embedded(), 2.0);
  auto three = table_vf(scale, {{"a", Value::ordinal(scale, "warm")},
                                {"b", Value::ordinal(scale, "hot")},
                                {"a,b", Value::ordinal(scale, "hot")}});
  EXPECT_EQ(compute_synergy(SynergySet{"a", "b"}, *three, BaselineKind::Sum).baseline_value.embedded(), 5.0);
}

TEST(ComputeSynergy, Errors) {
  auto vf = additive_vf(letter_pool(2), {{ElementId("a"), 1.0}, {ElementId("b"), 2.0}});
  EXPECT_EQ(code_of([&] { compute_synergy(SynergySet{"a"}, *vf, BaselineKind::Sum); }), Errc::CardinalityError);
  EXPECT_EQ(code_of([&] { compute_synergy(SynergySet{"a", "z"}, *vf, BaselineKind::Sum); }), Errc::UnknownElement);
  EXPECT_EQ(code_of([&] { compute_synergy(SynergySet{"a", "b"}, *vf, BaselineKind::PooledRatio); }),
            Errc::ScaleMismatch);
}

TEST(Baselines, CompatibilityMatrix) {
  auto num = ValueScale::numeric();
  auto ratio = ValueScale::ratio();
  auto ord = ValueScale::ordinal({"x"});
  EXPECT_TRUE(baseline_compatible(BaselineKind::Sum, num));
  EXPECT_TRUE(baseline_compatible(BaselineKind::Mean, ord));
  EXPECT_TRUE(baseline_compatible(BaselineKind::Sum, ratio));
  EXPECT_FALSE(baseline_compatible(BaselineKind::Mean, ratio));
  EXPECT_TRUE(baseline_compatible(BaselineKind::IndependentUnion, num));
  EXPECT_FALSE(baseline_compatible(BaselineKind::IndependentUnion, ord));
  EXPECT_TRUE(baseline_compatible(BaselineKind::PooledRatio, ratio));
  EXPECT_FALSE(baseline_compatible(BaselineKind::PooledRatio, num));
}

TEST(Baselines, IndependentUnionAndPooled) {
  std::vector<Value> ps{Value::numeric(0.5), Value::numeric(0.5)};
  EXPECT_DOUBLE_EQ(combine_baseline(BaselineKind::IndependentUnion, ValueScale::numeric(), ps).embedded(), 0.75);
  std::vector<Value> out_of_range{Value::numeric(1.5), Value::numeric(0.5)};
  EXPECT_THROW(combine_baseline(BaselineKind::IndependentUnion, ValueScale::numeric(), out_of_range), Error);
  std::vector<Value> rs{Value::ratio(2, 2), Value::ratio(1, 1), Value::ratio(0, 1)};
  auto pooled = combine_baseline(BaselineKind::PooledRatio, ValueScale::ratio(), rs);
  EXPECT_EQ(pooled.numerator(), 3.0);
  EXPECT_EQ(pooled.denominator(), 4.0);
  EXPECT_EQ(pooled.embedded(), 0.75);
}

TEST(Baselines, ParseNames) {
  EXPECT_EQ(parse_baseline("sum"), BaselineKind::Sum);
  EXPECT_EQ(parse_baseline("mean"), BaselineKind::Mean);
  EXPECT_EQ(parse_baseline("independent"), BaselineKind::IndependentUnion);
  EXPECT_EQ(parse_baseline("pooled"), BaselineKind::PooledRatio);
  EXPECT_THROW(parse_baseline("median"), Error);
}

TEST(BatchSynergy, EmptyAndOrderAndIndexedErrors) {
  auto vf = additive_vf(letter_pool(3), {{ElementId("a"), 1}, {ElementId("b"), 2}, {ElementId("c"), 4}});
  EXPECT_TRUE(batch_synergy({}, *vf, BaselineKind::Sum).empty());
  std::vector<SynergySet> sets{SynergySet{"b", "c"}, SynergySet{"a", "b"}, SynergySet{"a", "b", "c"}};
  auto out = batch_synergy(sets, *vf, BaselineKind::Sum);
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(out[i].set, sets[i]);
    EXPECT_EQ(out[i].synergy, 0.0);
  }
  std::vector<SynergySet> bad{SynergySet{"a", "b"}, SynergySet{"a"}};
  try {
    batch_synergy(bad, *vf, BaselineKind::Sum);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CardinalityError);
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 1u);
  }
}

SynergyScore numeric_score(SynergySet set, double synergy) {
  return SynergyScore{std::move(set), Value::numeric(synergy), Value::numeric(0), synergy, BaselineKind::Sum};
}

TEST(RankSets, SortAndTieBreak) {
  auto out = rank_sets({numeric_score(SynergySet{"a", "b"}, 0.1), numeric_score(SynergySet{"a", "c"}, 0.5),
                        numeric_score(SynergySet{"b", "c"}, -0.2)});
  EXPECT_EQ(out[0].synergy, 0.5);
  EXPECT_EQ(out[1].synergy, 0.1);
  EXPECT_EQ(out[2].synergy, -0.2);
  auto tie = rank_sets({numeric_score(SynergySet{"a", "c"}, 1.0), numeric_score(SynergySet{"a", "b"}, 1.0)});
  EXPECT_EQ(tie[0].set.to_string(), "{a,b}");
  EXPECT_TRUE(rank_sets({}).empty());
}

TEST(RankSets, MixedScalesRejected) {
  std::vector<SynergyScore> v{numeric_score(SynergySet{"a", "b"}, 0.1),
                              SynergyScore{SynergySet{"a", "c"}, Value::ratio(1, 1), Value::ratio(1, 1), 0.0,
                                           BaselineKind::PooledRatio}};
  EXPECT_EQ(code_of([&] { rank_sets(v); }), Errc::MixedScales);
}

// ---------------------------------------------------------------- properties

class RandomAdditive : public ::testing::TestWithParam<int> {};

TEST_P(RandomAdditive, SumBaselineGivesZeroSynergy) {
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<std::size_t> pool_size(2, 10);
  std::uniform_real_distribution<double> weight(-100.0, 100.0);
  auto pool = letter_pool(pool_size(rng));
  std::map<ElementId, double> w;
  for (const auto& e : pool) w[e] = weight(rng);
  auto vf = additive_vf(pool, w);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> card(2, 5);
  for (int t = 0; t < 50; ++t) {
    std::vector<ElementId> ids;
    std::size_t n = card(rng);
    for (std::size_t i = 0; i < n; ++i) ids.push_back(pool[pick(rng)]);
    auto s = compute_synergy(SynergySet(ids), *vf, BaselineKind::Sum);
    EXPECT_NEAR(s.synergy, 0.0, 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomAdditive, ::testing::Range(1, 21));

TEST(Properties, MultiplicityAddsSingletonOncePerCopy) {
  auto pool = letter_pool(3);
  auto vf = additive_vf(pool, {{pool[0], 1.25}, {pool[1], 2.5}, {pool[2], -0.75}});
  auto one = compute_synergy(SynergySet{"a", "b"}, *vf, BaselineKind::Sum);
  auto two = compute_synergy(SynergySet{"a", "a", "b"}, *vf, BaselineKind::Sum);
  auto three = compute_synergy(SynergySet{"a", "a", "a", "b"}, *vf, BaselineKind::Sum);
  EXPECT_EQ(two.baseline_value.embedded() - one.baseline_value.embedded(), 1.25);
  EXPECT_EQ(three.baseline_value.embedded() - two.baseline_value.embedded(), 1.25);
}

TEST(Properties, MeanIsSumOverCardinality) {
  auto pool = letter_pool(6);
  auto vf = testing::hashed_vf(pool, 7, 1000);
  for (auto set : {SynergySet{"a", "b"}, SynergySet{"a", "c", "f"}, SynergySet{"b", "b", "e", "e", "e"}}) {
    auto sum = compute_synergy(set, *vf, BaselineKind::Sum);
    auto mean = compute_synergy(set, *vf, BaselineKind::Mean);
    EXPECT_EQ(mean.baseline_value.embedded(), sum.baseline_value.embedded() / set.cardinality());
  }
}

TEST(Properties, RepeatedCallsIdentical) {
  auto vf = testing::hashed_vf(letter_pool(5), 3, 1000);
  auto a = compute_synergy(SynergySet{"a", "c", "e"}, *vf, BaselineKind::Mean);
  auto b = compute_synergy(SynergySet{"a", "c", "e"}, *vf, BaselineKind::Mean);
  EXPECT_EQ(a.set, b.set);
  EXPECT_EQ(a.set_value, b.set_value);
  EXPECT_EQ(a.baseline_value, b.baseline_value);
  EXPECT_EQ(std::memcmp(&a.synergy, &b.synergy, sizeof(double)), 0);
}

TEST(Properties, RankSetsIsNonIncreasingPermutation) {
  std::mt19937_64 rng(11);
  auto pool = letter_pool(8);
  auto vf = testing::hashed_vf(pool, 5, 8);
  for (int round = 0; round < 20; ++round) {
    std::vector<SynergyScore> scores;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 30; ++i) {
      auto x = pick(rng), y = pick(rng);
      if (x == y) continue;
      scores.push_back(compute_synergy(SynergySet(std::vector{pool[x], pool[y]}), *vf, BaselineKind::Sum));
    }
    auto ranked = rank_sets(scores);
    ASSERT_EQ(ranked.size(), scores.size());
    for (std::size_t i = 1; i < ranked.size(); ++i) EXPECT_GE(ranked[i - 1].synergy, ranked[i].synergy);
    auto key = [](const SynergyScore& s) { return s.set.to_string() + "/" + std::to_string(s.synergy); };
    std::vector<std::string> a, b;
    for (const auto& s : scores) a.push_back(key(s));
    for (const auto& s : ranked) b.push_back(key(s));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(Properties, ConcurrentEvaluationIsSafe) {
  auto vf = testing::hashed_vf(letter_pool(6), 9, 1000);
  auto expected = compute_synergy(SynergySet{"a", "b", "f"}, *vf, BaselineKind::Mean).synergy;
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 500; ++i) {
        if (compute_synergy(SynergySet{"a", "b", "f"}, *vf, BaselineKind::Mean).synergy != expected) ++mismatches;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(mismatches.load(), 0);
}

}  // namespace
}  // namespace synergy
