#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "synergy/empirical/match_log.hpp"

namespace synergy::empirical {

struct Rejection {
  std::size_t line = 0;  ///< 1-based
  std::string reason;
};

struct IngestResult {
  MatchLog log;
  std::vector<Rejection> rejections;
  std::size_t lines = 0;  ///< non-blank lines read
};

/// Reads newline-delimited match records:
///   {"match_id": str, "sides": [[str,...],[str,...]], "winner": 0|1,
///    "moves": [[0|1, str], ...]}   (moves optional, unknown fields ignored)
///
/// Invalid records are collected with their line numbers. Throws
/// TooManyRejects when more than `max_reject_fraction` of the non-blank lines
/// are invalid, MalformedStream when the stream itself cannot be read.
IngestResult ingest_match_log(std::istream& in, double max_reject_fraction = 0.10);

/// Parses and validates a single record line. Throws InvalidArgument with a
/// human-readable reason.
MatchRecord parse_match_record(std::string_view line);

/// The canonical single-line JSON form of a record (round-trips through
/// parse_match_record).
std::string format_match_record(const MatchRecord& record);

}  // namespace synergy::empirical
