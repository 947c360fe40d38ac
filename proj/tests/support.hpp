#pragma once

// Helpers shared by unit and acceptance tests: fixture access, synthetic
// value functions and naive oracles that do not reuse library internals.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "synergy/core/synergy.hpp"
#include "synergy/core/value_function.hpp"
#include "synergy/search/space.hpp"

namespace synergy::testing {

using nlohmann::json;

inline std::string fixture_path(const std::string& name) { return std::string(SYNERGY_FIXTURE_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline json read_json(const std::string& path) { return json::parse(read_text(path)); }

inline std::vector<ElementId> letter_pool(std::size_t n) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string id;
    std::size_t k = i;
    do {
      id.insert(id.begin(), static_cast<char>('a' + k % 26));
      k /= 26;
    } while (k-- > 0);
    out.emplace_back(id);
  }
  return out;
}

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t string_hash(const std::string& s, std::uint64_t seed) {
  std::uint64_t h = splitmix(seed);
  for (unsigned char c : s) h = splitmix(h ^ c);
  return h;
}

/// v(S) = sum of w(e) over the copies in S.
inline std::shared_ptr<FunctionValueFunction> additive_vf(const std::vector<ElementId>& pool,
                                                          const std::map<ElementId, double>& w) {
  return std::make_shared<FunctionValueFunction>(ValueScale::numeric(), pool, [w](const SynergySet& s) {
    double total = 0.0;
    for (const auto& [id, n] : s.entries()) total += w.at(id) * n;
    return Value::numeric(total);
  });
}

/// A pure but arbitrary numeric function: a seeded hash of the set, quantized
/// to a coarse grid so that ties occur.
inline std::shared_ptr<FunctionValueFunction> hashed_vf(const std::vector<ElementId>& pool, std::uint64_t seed,
                                                        int grid = 16) {
  return std::make_shared<FunctionValueFunction>(ValueScale::numeric(), pool, [seed, grid](const SynergySet& s) {
    std::uint64_t h = string_hash(s.to_string(), seed);
    return Value::numeric(static_cast<double>(h % static_cast<std::uint64_t>(grid)) / grid);
  });
}

/// Every multiset of the space, built from count vectors and sorted with a
/// plain lexicographic compare of expanded id strings.
inline std::vector<std::vector<std::string>> naive_space(const std::vector<ElementId>& pool, std::size_t size_min,
                                                         std::size_t size_max, std::uint32_t cap) {
  std::vector<std::string> ids;
  for (const auto& e : pool) ids.push_back(e.str());
  std::sort(ids.begin(), ids.end());
  std::vector<std::vector<std::string>> out;
  std::vector<std::uint32_t> counts(ids.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t total) {
    if (total > size_max) return;
    if (i == ids.size()) {
      if (total < size_min) return;
      std::vector<std::string> s;
      for (std::size_t j = 0; j < ids.size(); ++j) s.insert(s.end(), counts[j], ids[j]);
      out.push_back(std::move(s));
      return;
    }
    for (std::uint32_t c = 0; c <= cap; ++c) {
      counts[i] = c;
      rec(i + 1, total + c);
    }
    counts[i] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline SynergySet to_set(const std::vector<std::string>& ids) {
  std::vector<ElementId> v;
  for (const auto& s : ids) v.emplace_back(s);
  return SynergySet(v);
}

/// Evaluate-all-and-sort top-K with hand-rolled arithmetic.
struct NaiveScore {
  std::vector<std::string> set;
  double synergy;
};

inline std::vector<NaiveScore> naive_top_k(const ValueFunction& vf, const std::vector<ElementId>& pool,
                                           std::size_t size_min, std::size_t size_max, std::uint32_t cap,
                                           std::size_t k) {
  std::vector<NaiveScore> all;
  for (const auto& s : naive_space(pool, size_min, size_max, cap)) {
    double base = 0.0;
    for (const auto& id : s) base += vf.evaluate(SynergySet{std::string_view(id)}).embedded();
    all.push_back({s, vf.evaluate(to_set(s)).embedded() - base});
  }
  std::stable_sort(all.begin(), all.end(), [](const NaiveScore& a, const NaiveScore& b) {
    if (a.synergy != b.synergy) return a.synergy > b.synergy;
    return a.set < b.set;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

}  // namespace synergy::testing
