#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synergy {

enum class ScaleKind { Numeric, Ratio, Ordinal };

std::string_view to_string(ScaleKind kind) noexcept;

/// The scale a value function reports on. Ordinal scales carry an ordered
/// label list where rank 0 is the lowest label.
class ValueScale {
 public:
  static ValueScale numeric();
  static ValueScale ratio();
  static ValueScale ordinal(std::vector<std::string> labels);

  ScaleKind kind() const noexcept { return kind_; }
  std::span<const std::string> labels() const noexcept;
  std::string describe() const;

  friend bool operator==(const ValueScale& a, const ValueScale& b) noexcept;

 private:
  explicit ValueScale(ScaleKind kind) : kind_(kind) {}

  ScaleKind kind_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// 0-based position of `label` in an ordinal scale. Throws UnknownLabel.
std::size_t ordinal_rank(const ValueScale& scale, std::string_view label);

/// A measured value on a declared scale.
class Value {
 public:
  static Value numeric(double x);
  static Value ratio(double numerator, double denominator);
  static Value ordinal(const ValueScale& scale, std::size_t rank);
  static Value ordinal(const ValueScale& scale, std::string_view label);

  const ValueScale& scale() const noexcept { return scale_; }
  ScaleKind kind() const noexcept { return scale_.kind(); }

  double number() const;
  double numerator() const;
  double denominator() const;
  std::size_t rank() const;
  const std::string& label() const;

  /// Canonical real embedding: Numeric -> itself, Ratio -> num/den,
  /// Ordinal -> rank.
  double embedded() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  explicit Value(ValueScale scale) : scale_(std::move(scale)) {}

  ValueScale scale_;
  double a_ = 0.0;
  double b_ = 0.0;
};

}  // namespace synergy
