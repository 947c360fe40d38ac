#pragma once

#include <functional>
#include <unordered_set>
#include <vector>

#include "synergy/core/element.hpp"
#include "synergy/core/value.hpp"

namespace synergy {

/// Maps a synergy set to a value on a declared scale.
///
/// Implementations must be deterministic and free of observable side effects,
/// and must be safe to call concurrently from several threads. They accept
/// singletons; compute_synergy relies on that to build baselines.
class ValueFunction {
 public:
  virtual ~ValueFunction() = default;

  virtual const ValueScale& scale() const noexcept = 0;
  virtual bool in_pool(const ElementId& id) const = 0;
  virtual std::vector<ElementId> pool() const = 0;
  virtual Value evaluate(const SynergySet& set) const = 0;
};

/// Value function backed by a callable over an explicit pool.
class FunctionValueFunction final : public ValueFunction {
 public:
  using Fn = std::function<Value(const SynergySet&)>;

  FunctionValueFunction(ValueScale scale, std::vector<ElementId> pool, Fn fn)
      : scale_(std::move(scale)), pool_(std::move(pool)), lookup_(pool_.begin(), pool_.end()), fn_(std::move(fn)) {}

  const ValueScale& scale() const noexcept override { return scale_; }
  bool in_pool(const ElementId& id) const override { return lookup_.contains(id); }
  std::vector<ElementId> pool() const override { return pool_; }
  Value evaluate(const SynergySet& set) const override { return fn_(set); }

 private:
  ValueScale scale_;
  std::vector<ElementId> pool_;
  std::unordered_set<ElementId> lookup_;
  Fn fn_;
};

}  // namespace synergy
