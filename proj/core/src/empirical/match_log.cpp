#include "synergy/empirical/match_log.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <unordered_set>

#include "synergy/error.hpp"

namespace synergy::empirical {

namespace {

class Fnv1a {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    // Field separator so ("ab","c") and ("a","bc") differ.
    hash_ ^= 0xff;
    hash_ *= 0x100000001b3ULL;
  }

  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

MatchLog::MatchLog(std::vector<MatchRecord> records, Rules rules) : records_(std::move(records)) {
  std::unordered_set<std::string> ids;
  std::set<ElementId> pool;
  Fnv1a hash;
  for (auto& r : records_) {
    if (!ids.insert(r.match_id).second) throw Error(Errc::InvalidArgument, "duplicate match_id '" + r.match_id + "'");
    if (r.winner != 0 && r.winner != 1) {
      throw Error(Errc::InvalidArgument, "match '" + r.match_id + "': winner out of range");
    }
    for (auto& roster : r.sides) {
      std::sort(roster.begin(), roster.end());
      roster.erase(std::unique(roster.begin(), roster.end()), roster.end());
    }
    for (const auto& e : r.sides[0]) {
      if (rules == Rules::Observed && std::binary_search(r.sides[1].begin(), r.sides[1].end(), e)) {
        throw Error(Errc::InvalidArgument, "match '" + r.match_id + "': element '" + e.str() + "' on both sides");
      }
    }
    hash.add(r.match_id);
    for (const auto& roster : r.sides) {
      hash.add("[");
      for (const auto& e : roster) {
        hash.add(e.str());
        pool.insert(e);
      }
    }
    hash.add(r.winner == 0 ? "w0" : "w1");
    if (r.moves) {
      hash.add("moves");
      for (const auto& m : *r.moves) {
        hash.add(m.side == 0 ? "0" : "1");
        hash.add(m.piece);
      }
    }
  }
  pool_.assign(pool.begin(), pool.end());
  digest_ = hash.hex();
}

bool MatchLog::contains(const ElementId& id) const noexcept {
  return std::binary_search(pool_.begin(), pool_.end(), id);
}

}  // namespace synergy::empirical
