#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "synergy/search/space.hpp"

namespace synergy::search {

/// Uniform integer in [0, bound) from 64-bit draws with rejection.
BigCount uniform_below(const BigCount& bound, std::mt19937_64& rng);

/// `n` sets drawn uniformly (with replacement) by unranking uniform indices.
/// Filtered spaces are sampled by redrawing until the filter accepts.
/// Deterministic for a fixed (space, n, seed). Throws InvalidArgument (n = 0),
/// EmptySpace.
std::vector<SynergySet> sample_sets(const CandidateSpace& space, std::size_t n, std::uint64_t seed);

}  // namespace synergy::search
