#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace synergy {

/// Opaque identifier of a game element (character, card, piece-sequence...).
class ElementId {
 public:
  explicit ElementId(std::string id);
  explicit ElementId(std::string_view id) : ElementId(std::string(id)) {}
  explicit ElementId(const char* id) : ElementId(std::string(id)) {}

  const std::string& str() const noexcept { return id_; }

  friend bool operator==(const ElementId&, const ElementId&) = default;
  friend std::strong_ordering operator<=>(const ElementId& a, const ElementId& b) noexcept {
    return a.id_.compare(b.id_) <=> 0;
  }

 private:
  std::string id_;
};

std::vector<ElementId> make_ids(std::initializer_list<std::string_view> ids);

/// A multiset of elements kept in canonical (id-sorted) form.
///
/// Sets compare by the lexicographic order of their expanded, sorted id
/// sequences, so {a,a} < {a,a,b} < {a,b} < {b}.
class SynergySet {
 public:
  using Entry = std::pair<ElementId, std::uint32_t>;

  explicit SynergySet(std::span<const ElementId> elements);
  SynergySet(std::initializer_list<std::string_view> elements);

  /// Builds from (element, count) pairs; duplicate ids are merged.
  static SynergySet from_counts(std::vector<Entry> counts);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t cardinality() const noexcept { return cardinality_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  std::uint32_t count(const ElementId& id) const noexcept;
  bool contains(const ElementId& id) const noexcept { return count(id) > 0; }

  std::vector<ElementId> expanded() const;
  std::vector<std::string> expanded_strings() const;
  std::string to_string() const;

  friend bool operator==(const SynergySet&, const SynergySet&) = default;
  friend std::strong_ordering operator<=>(const SynergySet& a, const SynergySet& b) noexcept;

 private:
  SynergySet() = default;
  void canonicalize();

  std::vector<Entry> entries_;
  std::size_t cardinality_ = 0;
};

}  // namespace synergy

template <>
struct std::hash<synergy::ElementId> {
  std::size_t operator()(const synergy::ElementId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
