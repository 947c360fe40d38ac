#include "synergy/core/value.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "synergy/error.hpp"

namespace synergy {

std::string_view to_string(ScaleKind kind) noexcept {
  switch (kind) {
    case ScaleKind::Numeric: return "numeric";
    case ScaleKind::Ratio: return "ratio";
    case ScaleKind::Ordinal: return "ordinal";
  }
  return "unknown";
}

ValueScale ValueScale::numeric() { return ValueScale(ScaleKind::Numeric); }

ValueScale ValueScale::ratio() { return ValueScale(ScaleKind::Ratio); }

ValueScale ValueScale::ordinal(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(Errc::InvalidArgument, "ordinal scale needs at least one label");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(Errc::InvalidArgument, "duplicate ordinal label '" + l + "'");
  }
  ValueScale s(ScaleKind::Ordinal);
  s.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  return s;
}

std::span<const std::string> ValueScale::labels() const noexcept {
  if (!labels_) return {};
  return *labels_;
}

std::string ValueScale::describe() const {
  std::string out(to_string(kind_));
  if (kind_ == ScaleKind::Ordinal) {
    out += '[';
    for (std::size_t i = 0; i < labels_->size(); ++i) {
      if (i) out += ',';
      out += (*labels_)[i];
    }
    out += ']';
  }
  return out;
}

bool operator==(const ValueScale& a, const ValueScale& b) noexcept {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != ScaleKind::Ordinal) return true;
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

std::size_t ordinal_rank(const ValueScale& scale, std::string_view label) {
  if (scale.kind() != ScaleKind::Ordinal) {
    throw Error(Errc::ScaleMismatch, "ordinal_rank on a " + scale.describe() + " scale");
  }
  auto labels = scale.labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(Errc::UnknownLabel, "label '" + std::string(label) + "' not in " + scale.describe());
  return static_cast<std::size_t>(it - labels.begin());
}

Value Value::numeric(double x) {
  if (std::isnan(x)) throw Error(Errc::InvalidArgument, "numeric value is NaN");
  Value v(ValueScale::numeric());
  v.a_ = x;
  return v;
}

Value Value::ratio(double numerator, double denominator) {
  if (!(numerator >= 0.0) || !(denominator >= 0.0)) {
    throw Error(Errc::InvalidArgument, "ratio parts must be non-negative");
  }
  Value v(ValueScale::ratio());
  v.a_ = numerator;
  v.b_ = denominator;
  return v;
}

Value Value::ordinal(const ValueScale& scale, std::size_t rank) {
  if (scale.kind() != ScaleKind::Ordinal) throw Error(Errc::ScaleMismatch, "ordinal value on non-ordinal scale");
  if (rank >= scale.labels().size()) {
    throw Error(Errc::InvalidArgument, "rank " + std::to_string(rank) + " outside " + scale.describe());
  }
  Value v(scale);
  v.a_ = static_cast<double>(rank);
  return v;
}

Value Value::ordinal(const ValueScale& scale, std::string_view label) {
  return ordinal(scale, ordinal_rank(scale, label));
}

double Value::number() const {
  if (kind() != ScaleKind::Numeric) throw Error(Errc::ScaleMismatch, "value is not numeric");
  return a_;
}

double Value::numerator() const {
  if (kind() != ScaleKind::Ratio) throw Error(Errc::ScaleMismatch, "value is not a ratio");
  return a_;
}

double Value::denominator() const {
  if (kind() != ScaleKind::Ratio) throw Error(Errc::ScaleMismatch, "value is not a ratio");
  return b_;
}

std::size_t Value::rank() const {
  if (kind() != ScaleKind::Ordinal) throw Error(Errc::ScaleMismatch, "value is not ordinal");
  return static_cast<std::size_t>(a_);
}

const std::string& Value::label() const { return scale_.labels()[rank()]; }

double Value::embedded() const {
  switch (kind()) {
    case ScaleKind::Numeric:
    case ScaleKind::Ordinal:
      return a_;
    case ScaleKind::Ratio:
      if (b_ == 0.0) throw Error(Errc::ScaleMismatch, "ratio with zero denominator has no real embedding");
      return a_ / b_;
  }
  return a_;
}

}  // namespace synergy
