#include "synergy/core/element.hpp"

#include <algorithm>

#include "synergy/error.hpp"

namespace synergy {

ElementId::ElementId(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw Error(Errc::InvalidArgument, "element id must be non-empty");
}

std::vector<ElementId> make_ids(std::initializer_list<std::string_view> ids) {
  std::vector<ElementId> out;
  out.reserve(ids.size());
  for (auto id : ids) out.emplace_back(id);
  return out;
}

SynergySet::SynergySet(std::span<const ElementId> elements) {
  entries_.reserve(elements.size());
  for (const auto& e : elements) entries_.emplace_back(e, 1u);
  canonicalize();
}

SynergySet::SynergySet(std::initializer_list<std::string_view> elements)
    : SynergySet(make_ids(elements)) {}

SynergySet SynergySet::from_counts(std::vector<Entry> counts) {
  SynergySet s;
  s.entries_ = std::move(counts);
  for (const auto& [id, n] : s.entries_) {
    if (n == 0) throw Error(Errc::InvalidArgument, "element count must be >= 1 for " + id.str());
  }
  s.canonicalize();
  return s;
}

void SynergySet::canonicalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  entries_ = std::move(merged);
  cardinality_ = 0;
  for (const auto& e : entries_) cardinality_ += e.second;
  if (cardinality_ == 0) throw Error(Errc::CardinalityError, "a synergy set needs at least one element");
}

std::uint32_t SynergySet::count(const ElementId& id) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const Entry& e, const ElementId& key) { return e.first < key; });
  return (it != entries_.end() && it->first == id) ? it->second : 0;
}

std::vector<ElementId> SynergySet::expanded() const {
  std::vector<ElementId> out;
  out.reserve(cardinality_);
  for (const auto& [id, n] : entries_) out.insert(out.end(), n, id);
  return out;
}

std::vector<std::string> SynergySet::expanded_strings() const {
  std::vector<std::string> out;
  out.reserve(cardinality_);
  for (const auto& [id, n] : entries_) out.insert(out.end(), n, id.str());
  return out;
}

std::string SynergySet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [id, n] : entries_) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!first) out += ',';
      out += id.str();
      first = false;
    }
  }
  out += '}';
  return out;
}

std::strong_ordering operator<=>(const SynergySet& a, const SynergySet& b) noexcept {
  auto ai = a.entries_.begin();
  auto bi = b.entries_.begin();
  const auto ae = a.entries_.end();
  const auto be = b.entries_.end();
  for (; ai != ae && bi != be; ++ai, ++bi) {
    if (auto c = ai->first <=> bi->first; c != 0) return c;
    if (ai->second == bi->second) continue;
    // Same id, different multiplicity. The shorter run is followed either by
    // a larger id (so it sorts after) or by nothing (a prefix, sorts before).
    if (ai->second < bi->second) {
      return std::next(ai) == ae ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::next(bi) == be ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (ai == ae) return bi == be ? std::strong_ordering::equal : std::strong_ordering::less;
  return std::strong_ordering::greater;
}

}  // namespace synergy
