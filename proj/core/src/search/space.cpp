#include "synergy/search/space.hpp"

#include <algorithm>
#include <set>

#include "synergy/error.hpp"

namespace synergy::search {

namespace {

constexpr std::string_view kMustContain = "must-contain:";
constexpr std::string_view kMustContainAny = "must-contain-any:";

std::vector<ElementId> sorted_unique_pool(const CandidateSpace& space) {
  std::vector<ElementId> pool = space.pool;
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

SetFilter SetFilter::parse(std::string_view text) {
  auto split_ids = [](std::string_view rest) {
    std::vector<ElementId> ids;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto token = rest.substr(0, comma);
      if (token.empty()) throw Error(Errc::InvalidSpace, "empty id in filter");
      ids.emplace_back(token);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return ids;
  };
  if (text.starts_with(kMustContainAny)) {
    auto ids = split_ids(text.substr(kMustContainAny.size()));
    if (ids.empty()) throw Error(Errc::InvalidSpace, "must-contain-any needs at least one id");
    return must_contain_any(std::move(ids));
  }
  if (text.starts_with(kMustContain)) {
    auto id = text.substr(kMustContain.size());
    if (id.empty()) throw Error(Errc::InvalidSpace, "must-contain needs an id");
    return must_contain(ElementId(id));
  }
  throw Error(Errc::InvalidSpace, "unknown filter '" + std::string(text) + "'");
}

SetFilter SetFilter::must_contain(ElementId id) { return SetFilter{Kind::MustContain, {std::move(id)}}; }

SetFilter SetFilter::must_contain_any(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return SetFilter{Kind::MustContainAny, std::move(ids)};
}

bool SetFilter::accepts(const SynergySet& set) const noexcept {
  return std::any_of(ids.begin(), ids.end(), [&](const ElementId& id) { return set.contains(id); });
}

std::string SetFilter::to_string() const {
  std::string out(kind == Kind::MustContain ? kMustContain : kMustContainAny);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += ids[i].str();
  }
  return out;
}

void CandidateSpace::validate() const {
  if (pool.empty()) throw Error(Errc::InvalidSpace, "candidate pool is empty");
  if (size_min < 2) throw Error(Errc::InvalidSpace, "size_min must be >= 2");
  if (size_min > size_max) throw Error(Errc::InvalidSpace, "size_min exceeds size_max");
  if (copy_cap < 1) throw Error(Errc::InvalidSpace, "copy_cap must be >= 1");
  std::set<ElementId> seen;
  for (const auto& id : pool) {
    if (!seen.insert(id).second) throw Error(Errc::InvalidSpace, "duplicate pool id '" + id.str() + "'");
  }
  if (filter) {
    for (const auto& id : filter->ids) {
      if (!seen.contains(id)) throw Error(Errc::InvalidSpace, "filter id '" + id.str() + "' is not in the pool");
    }
  }
}

BigCount count_sets(const CandidateSpace& space) {
  space.validate();
  const std::size_t top = space.size_max;
  // Rolling coefficient vector of prod (1 + x + ... + x^cap), truncated at x^top.
  std::vector<BigCount> poly(top + 1);
  poly[0] = 1;
  std::vector<BigCount> next(top + 1);
  for (std::size_t m = 0; m < space.pool.size(); ++m) {
    // Prefix sums turn the bounded convolution into O(top) work per element.
    BigCount window = 0;
    for (std::size_t t = 0; t <= top; ++t) {
      window += poly[t];
      if (t > space.copy_cap) window -= poly[t - space.copy_cap - 1];
      next[t] = window;
    }
    poly.swap(next);
  }
  BigCount total = 0;
  for (std::size_t t = space.size_min; t <= top; ++t) total += poly[t];
  return total;
}

SpaceIndex::SpaceIndex(const CandidateSpace& space)
    : pool_((space.validate(), sorted_unique_pool(space))),
      size_min_(space.size_min),
      size_max_(space.size_max),
      cap_(space.copy_cap) {
  const std::size_t n = pool_.size();
  free_.assign(n + 1, std::vector<BigCount>(size_max_ + 1));
  free_[0][0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    BigCount window = 0;
    for (std::size_t t = 0; t <= size_max_; ++t) {
      window += free_[m - 1][t];
      if (t > cap_) window -= free_[m - 1][t - cap_ - 1];
      free_[m][t] = window;
    }
  }
  size_ = 0;
  for (std::size_t t = size_min_; t <= size_max_; ++t) size_ += free_[n][t];
}

BigCount SpaceIndex::subtree(std::size_t length, std::size_t last, std::uint32_t used) const {
  if (length > size_max_ || used > cap_) return 0;
  const auto& rest = free_[pool_.size() - 1 - last];
  const std::uint32_t spare = cap_ - used;
  BigCount total = 0;
  for (std::size_t t = 0; length + t <= size_max_; ++t) {
    if (length + t < size_min_) continue;
    for (std::size_t s = 0; s <= spare && s <= t; ++s) total += rest[t - s];
  }
  return total;
}

std::vector<std::size_t> SpaceIndex::unrank_positions(BigCount index) const {
  if (index < 0 || index >= size_) throw Error(Errc::InvalidArgument, "index outside the candidate space");
  std::vector<std::size_t> seq;
  std::uint32_t run = 0;
  for (;;) {
    const std::size_t length = seq.size();
    if (length >= size_min_ && length <= size_max_) {
      if (index == 0) return seq;
      index -= 1;
    }
    bool descended = false;
    const std::size_t start = seq.empty() ? 0 : seq.back();
    for (std::size_t k = start; k < pool_.size(); ++k) {
      const std::uint32_t used = (!seq.empty() && k == seq.back()) ? run + 1 : 1;
      if (used > cap_) continue;
      BigCount size = subtree(length + 1, k, used);
      if (index < size) {
        seq.push_back(k);
        run = used;
        descended = true;
        break;
      }
      index -= size;
    }
    if (!descended) throw Error(Errc::InvalidArgument, "unrank walked off the space");
  }
}

SynergySet SpaceIndex::unrank(const BigCount& index) const {
  std::vector<SynergySet::Entry> counts;
  for (auto p : unrank_positions(index)) {
    if (!counts.empty() && counts.back().first == pool_[p]) {
      ++counts.back().second;
    } else {
      counts.emplace_back(pool_[p], 1u);
    }
  }
  return SynergySet::from_counts(std::move(counts));
}

BigCount SpaceIndex::rank(const SynergySet& set) const {
  if (set.cardinality() < size_min_ || set.cardinality() > size_max_) {
    throw Error(Errc::InvalidSpace, set.to_string() + " has a size outside the space");
  }
  std::vector<std::size_t> target;
  for (const auto& [id, n] : set.entries()) {
    auto it = std::lower_bound(pool_.begin(), pool_.end(), id);
    if (it == pool_.end() || !(*it == id)) throw Error(Errc::InvalidSpace, "'" + id.str() + "' is not in the pool");
    if (n > cap_) throw Error(Errc::InvalidSpace, set.to_string() + " exceeds the copy cap");
    target.insert(target.end(), n, static_cast<std::size_t>(it - pool_.begin()));
  }

  BigCount rank = 0;
  std::uint32_t run = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const std::size_t length = i;
    if (length >= size_min_ && length <= size_max_) rank += 1;
    const std::size_t start = i == 0 ? 0 : target[i - 1];
    for (std::size_t k = start; k < target[i]; ++k) {
      const std::uint32_t used = (i > 0 && k == target[i - 1]) ? run + 1 : 1;
      rank += subtree(length + 1, k, used);
    }
    run = (i > 0 && target[i] == target[i - 1]) ? run + 1 : 1;
  }
  return rank;
}

SetEnumerator::SetEnumerator(const CandidateSpace& space)
    : pool_((space.validate(), sorted_unique_pool(space))),
      size_min_(space.size_min),
      size_max_(space.size_max),
      cap_(space.copy_cap),
      filter_(space.filter) {}

SetEnumerator::SetEnumerator(const CandidateSpace& space, const SpaceIndex& index, const BigCount& start,
                             std::uint64_t limit)
    : SetEnumerator(space) {
  limit_ = limit;
  if (limit == 0 || start >= index.size()) {
    done_ = true;
    return;
  }
  seq_ = index.unrank_positions(start);
  run_.reserve(seq_.size());
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    run_.push_back(i > 0 && seq_[i] == seq_[i - 1] ? run_.back() + 1 : 1);
  }
  started_ = true;
  primed_ = true;
}

bool SetEnumerator::feasible(std::size_t length, std::size_t last, std::uint32_t used) const noexcept {
  if (length > size_max_ || used > cap_) return false;
  const std::size_t room = (cap_ - used) + static_cast<std::size_t>(cap_) * (pool_.size() - 1 - last);
  return length + room >= size_min_;
}

bool SetEnumerator::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!pool_.empty() && feasible(1, 0, 1)) {
      seq_.push_back(0);
      run_.push_back(1);
      return true;
    }
    done_ = true;
    return false;
  }
  // First child of the current node.
  if (seq_.size() < size_max_) {
    std::size_t k = seq_.back();
    std::uint32_t used = run_.back() + 1;
    if (used > cap_) {
      ++k;
      used = 1;
    }
    if (k < pool_.size() && feasible(seq_.size() + 1, k, used)) {
      seq_.push_back(k);
      run_.push_back(used);
      return true;
    }
  }
  // Otherwise the next sibling of the nearest ancestor that has one.
  while (!seq_.empty()) {
    const std::size_t k = seq_.back() + 1;
    seq_.pop_back();
    run_.pop_back();
    if (k < pool_.size() && feasible(seq_.size() + 1, k, 1)) {
      seq_.push_back(k);
      run_.push_back(1);
      return true;
    }
  }
  done_ = true;
  return false;
}

SynergySet SetEnumerator::current() const {
  std::vector<SynergySet::Entry> counts;
  counts.reserve(seq_.size());
  for (auto p : seq_) {
    if (!counts.empty() && counts.back().first == pool_[p]) {
      ++counts.back().second;
    } else {
      counts.emplace_back(pool_[p], 1u);
    }
  }
  return SynergySet::from_counts(std::move(counts));
}

std::optional<SynergySet> SetEnumerator::next() {
  for (;;) {
    if (limit_ && visited_ >= *limit_) return std::nullopt;
    if (primed_) {
      primed_ = false;
    } else if (!advance()) {
      return std::nullopt;
    }
    if (!emittable()) continue;
    ++visited_;
    SynergySet set = current();
    if (!filter_ || filter_->accepts(set)) return set;
  }
}

std::vector<SynergySet> enumerate_sets(const CandidateSpace& space) {
  std::vector<SynergySet> out;
  SetEnumerator it(space);
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace synergy::search
