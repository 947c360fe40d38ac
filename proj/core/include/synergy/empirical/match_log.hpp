#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "synergy/core/element.hpp"

namespace synergy::empirical {

/// One ply of a move log: which side moved and what piece class it used.
struct Move {
  int side = 0;
  std::string piece;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MatchRecord {
  std::string match_id;
  std::array<std::vector<ElementId>, 2> sides;
  int winner = 0;
  std::optional<std::vector<Move>> moves;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

/// Immutable collection of match records.
///
/// Rosters are normalized to sorted sets (multiplicity inside a roster is
/// ignored). Construction rejects duplicate match ids and winners outside
/// {0,1}. Observed logs also reject an element on both sides of one match;
/// derived logs (piece-sequence bigrams, where both players can produce the
/// same bigram) allow it. Empty rosters are permitted here; ingestion rejects
/// them for raw input.
class MatchLog {
 public:
  enum class Rules { Observed, Derived };

  MatchLog() = default;
  explicit MatchLog(std::vector<MatchRecord> records, Rules rules = Rules::Observed);

  std::span<const MatchRecord> records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// Every element seen on any roster, sorted.
  const std::vector<ElementId>& pool() const noexcept { return pool_; }
  bool contains(const ElementId& id) const noexcept;

  /// 64-bit FNV-1a over a canonical serialization of the records, hex.
  const std::string& digest() const noexcept { return digest_; }

 private:
  std::vector<MatchRecord> records_;
  std::vector<ElementId> pool_;
  std::string digest_;
};

}  // namespace synergy::empirical
