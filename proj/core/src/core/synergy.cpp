#include "synergy/core/synergy.hpp"

#include <algorithm>
#include <string>

#include "synergy/error.hpp"

namespace synergy {

std::string_view to_string(BaselineKind kind) noexcept {
  switch (kind) {
    case BaselineKind::Sum: return "sum";
    case BaselineKind::Mean: return "mean";
    case BaselineKind::IndependentUnion: return "independent";
    case BaselineKind::PooledRatio: return "pooled";
  }
  return "unknown";
}

BaselineKind parse_baseline(std::string_view name) {
  if (name == "sum") return BaselineKind::Sum;
  if (name == "mean") return BaselineKind::Mean;
  if (name == "independent") return BaselineKind::IndependentUnion;
  if (name == "pooled") return BaselineKind::PooledRatio;
  throw Error(Errc::InvalidArgument, "unknown baseline '" + std::string(name) + "'");
}

bool baseline_compatible(BaselineKind kind, const ValueScale& scale) noexcept {
  switch (kind) {
    case BaselineKind::Sum: return true;
    case BaselineKind::Mean: return scale.kind() != ScaleKind::Ratio;
    case BaselineKind::IndependentUnion: return scale.kind() == ScaleKind::Numeric;
    case BaselineKind::PooledRatio: return scale.kind() == ScaleKind::Ratio;
  }
  return false;
}

namespace {

void require_compatible(BaselineKind kind, const ValueScale& scale) {
  if (!baseline_compatible(kind, scale)) {
    throw Error(Errc::ScaleMismatch,
                std::string(to_string(kind)) + " baseline is not defined on a " + scale.describe() + " scale");
  }
}

}  // namespace

Value combine_baseline(BaselineKind kind, const ValueScale& scale, std::span<const Value> singles) {
  require_compatible(kind, scale);
  if (singles.empty()) throw Error(Errc::CardinalityError, "baseline of an empty set");
  for (const auto& v : singles) {
    if (!(v.scale() == scale)) throw Error(Errc::ScaleMismatch, "singleton value off the declared scale");
  }

  switch (kind) {
    case BaselineKind::Sum:
    case BaselineKind::Mean: {
      double sum = 0.0;
      for (const auto& v : singles) sum += v.embedded();
      if (kind == BaselineKind::Mean) sum /= static_cast<double>(singles.size());
      return Value::numeric(sum);
    }
    case BaselineKind::IndependentUnion: {
      double miss = 1.0;
      for (const auto& v : singles) {
        const double p = v.number();
        if (p < 0.0 || p > 1.0) {
          throw Error(Errc::ScaleMismatch, "independent baseline needs probabilities, got " + std::to_string(p));
        }
        miss *= 1.0 - p;
      }
      return Value::numeric(1.0 - miss);
    }
    case BaselineKind::PooledRatio: {
      double num = 0.0;
      double den = 0.0;
      for (const auto& v : singles) {
        num += v.numerator();
        den += v.denominator();
      }
      if (den == 0.0) throw Error(Errc::ScaleMismatch, "pooled ratio baseline with zero total denominator");
      return Value::ratio(num, den);
    }
  }
  throw Error(Errc::InvalidArgument, "unhandled baseline kind");
}

SynergyScore compute_synergy(const SynergySet& set, const ValueFunction& vf, BaselineKind baseline) {
  if (set.cardinality() < 2) {
    throw Error(Errc::CardinalityError, "synergy needs two or more elements, got " + set.to_string());
  }
  for (const auto& [id, n] : set.entries()) {
    if (!vf.in_pool(id)) throw Error(Errc::UnknownElement, "'" + id.str() + "' is not in the value function's pool");
  }
  require_compatible(baseline, vf.scale());

  std::vector<Value> singles;
  singles.reserve(set.cardinality());
  for (const auto& [id, n] : set.entries()) {
    const std::vector<ElementId> one{id};
    Value solo = vf.evaluate(SynergySet(one));
    singles.insert(singles.end(), n, solo);
  }

  Value set_value = vf.evaluate(set);
  if (!(set_value.scale() == vf.scale())) throw Error(Errc::ScaleMismatch, "set value off the declared scale");
  Value base = combine_baseline(baseline, vf.scale(), singles);
  const double synergy = set_value.embedded() - base.embedded();
  return SynergyScore{set, std::move(set_value), std::move(base), synergy, baseline};
}

std::vector<SynergyScore> batch_synergy(std::span<const SynergySet> sets, const ValueFunction& vf,
                                        BaselineKind baseline) {
  std::vector<SynergyScore> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    try {
      out.push_back(compute_synergy(sets[i], vf, baseline));
    } catch (const Error& e) {
      throw e.with_index(i);
    }
  }
  return out;
}

bool ranks_before(const SynergyScore& a, const SynergyScore& b) noexcept {
  if (a.synergy != b.synergy) return a.synergy > b.synergy;
  return a.set < b.set;
}

std::vector<SynergyScore> rank_sets(std::vector<SynergyScore> scores) {
  if (!scores.empty()) {
    const auto& scale = scores.front().set_value.scale();
    const auto kind = scores.front().baseline;
    for (const auto& s : scores) {
      if (!(s.set_value.scale() == scale) || s.baseline != kind) {
        throw Error(Errc::MixedScales, "cannot rank scores from different scales or baselines");
      }
    }
  }
  std::stable_sort(scores.begin(), scores.end(), ranks_before);
  return scores;
}

}  // namespace synergy
