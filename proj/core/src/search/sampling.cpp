#include "synergy/search/sampling.hpp"

#include "synergy/error.hpp"

namespace synergy::search {

namespace {

// Consecutive rejected draws tolerated on a filtered space before giving up.
constexpr std::uint64_t kMaxFilterMisses = 1'000'000;

}  // namespace

BigCount uniform_below(const BigCount& bound, std::mt19937_64& rng) {
  if (bound <= 0) throw Error(Errc::EmptySpace, "cannot draw from an empty range");
  if (bound == 1) return 0;
  const BigCount top = bound - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t spare = words * 64 - bits;
  for (;;) {
    BigCount x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      x += rng();
    }
    x >>= spare;
    if (x < bound) return x;
  }
}

std::vector<SynergySet> sample_sets(const CandidateSpace& space, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::InvalidArgument, "sample size must be >= 1");
  SpaceIndex index(space);
  if (index.size() == 0) throw Error(Errc::EmptySpace, "candidate space has no members");
  std::vector<SynergySet> out;
  out.reserve(n);
  std::mt19937_64 rng(seed);
  std::uint64_t misses = 0;
  while (out.size() < n) {
    SynergySet set = index.unrank(uniform_below(index.size(), rng));
    if (space.filter && !space.filter->accepts(set)) {
      if (++misses >= kMaxFilterMisses) throw Error(Errc::EmptySpace, "filter rejected every sampled set");
      continue;
    }
    misses = 0;
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace synergy::search
