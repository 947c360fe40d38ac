#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synergy/core/element.hpp"

namespace synergy::search {

using BigCount = boost::multiprecision::cpp_int;

/// Named predicate over candidate sets.
///   must-contain:<id>            the set contains <id>
///   must-contain-any:<id>,<id>   the set contains at least one listed id
struct SetFilter {
  enum class Kind { MustContain, MustContainAny };

  Kind kind = Kind::MustContain;
  std::vector<ElementId> ids;

  static SetFilter parse(std::string_view text);
  static SetFilter must_contain(ElementId id);
  static SetFilter must_contain_any(std::vector<ElementId> ids);

  bool accepts(const SynergySet& set) const noexcept;
  std::string to_string() const;
};

/// All multisets over `pool` with cardinality in [size_min, size_max] and at
/// most `copy_cap` copies of any element.
struct CandidateSpace {
  std::vector<ElementId> pool;
  std::size_t size_min = 2;
  std::size_t size_max = 2;
  std::uint32_t copy_cap = 1;
  std::optional<SetFilter> filter;

  /// Throws InvalidSpace.
  void validate() const;
};

/// Exact size of the unfiltered space, by coefficient extraction from
/// prod_{pool} (1 + x + ... + x^cap). Never enumerates.
BigCount count_sets(const CandidateSpace& space);

/// Bijection between [0, count_sets(space)) and the unfiltered space in
/// canonical lexicographic order.
class SpaceIndex {
 public:
  explicit SpaceIndex(const CandidateSpace& space);

  const BigCount& size() const noexcept { return size_; }
  const std::vector<ElementId>& sorted_pool() const noexcept { return pool_; }

  SynergySet unrank(const BigCount& index) const;
  BigCount rank(const SynergySet& set) const;

  /// unrank() as a non-decreasing sequence of positions into sorted_pool().
  std::vector<std::size_t> unrank_positions(BigCount index) const;

 private:
  /// Number of space members in the subtree rooted at a prefix of length
  /// `length` whose last element is `last` used `used` times.
  BigCount subtree(std::size_t length, std::size_t last, std::uint32_t used) const;

  std::vector<ElementId> pool_;
  std::size_t size_min_;
  std::size_t size_max_;
  std::uint32_t cap_;
  // free_[m][t]: ways to place t items over m elements with <= cap copies each.
  std::vector<std::vector<BigCount>> free_;
  BigCount size_;
};

/// Single-consumer stream over a space in canonical order, filter applied.
class SetEnumerator {
 public:
  explicit SetEnumerator(const CandidateSpace& space);

  /// Streams at most `limit` unfiltered members starting at index `start`.
  SetEnumerator(const CandidateSpace& space, const SpaceIndex& index, const BigCount& start, std::uint64_t limit);

  std::optional<SynergySet> next();

  /// Unfiltered members produced so far.
  std::uint64_t visited() const noexcept { return visited_; }

 private:
  bool advance();
  bool emittable() const noexcept { return seq_.size() >= size_min_ && seq_.size() <= size_max_; }
  bool feasible(std::size_t length, std::size_t last, std::uint32_t used) const noexcept;
  SynergySet current() const;

  std::vector<ElementId> pool_;
  std::size_t size_min_;
  std::size_t size_max_;
  std::uint32_t cap_;
  std::optional<SetFilter> filter_;
  std::vector<std::size_t> seq_;
  std::vector<std::uint32_t> run_;  // run_[i]: copies of seq_[i] within seq_[0..i]
  bool started_ = false;
  bool primed_ = false;
  bool done_ = false;
  std::uint64_t visited_ = 0;
  std::optional<std::uint64_t> limit_;
};

/// Materializes the whole (filtered) stream.
std::vector<SynergySet> enumerate_sets(const CandidateSpace& space);

}  // namespace synergy::search
