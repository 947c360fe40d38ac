#include "synergy/empirical/ingest.hpp"

#include <unordered_set>

#include "json.hpp"
#include "synergy/error.hpp"

namespace synergy::empirical {

namespace {

using nlohmann::json;

[[noreturn]] void reject(const std::string& reason) { throw Error(Errc::InvalidArgument, reason); }

std::vector<ElementId> parse_roster(const json& roster) {
  if (!roster.is_array() || roster.empty()) reject("sides must be two non-empty rosters");
  std::vector<ElementId> out;
  out.reserve(roster.size());
  for (const auto& e : roster) {
    if (!e.is_string() || e.get_ref<const std::string&>().empty()) reject("roster entries must be non-empty strings");
    out.emplace_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

MatchRecord parse_match_record(std::string_view line) {
  json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) reject("malformed json");
  if (!doc.is_object()) reject("record must be a json object");

  MatchRecord r;
  auto id = doc.find("match_id");
  if (id == doc.end() || !id->is_string() || id->get_ref<const std::string&>().empty()) {
    reject("missing or empty match_id");
  }
  r.match_id = id->get<std::string>();

  auto sides = doc.find("sides");
  if (sides == doc.end() || !sides->is_array() || sides->size() != 2) reject("sides must be two non-empty rosters");
  r.sides[0] = parse_roster((*sides)[0]);
  r.sides[1] = parse_roster((*sides)[1]);

  auto winner = doc.find("winner");
  if (winner == doc.end() || !winner->is_number_integer()) reject("winner must be 0 or 1");
  const auto w = winner->get<std::int64_t>();
  if (w != 0 && w != 1) reject("winner out of range");
  r.winner = static_cast<int>(w);

  std::unordered_set<std::string> left;
  for (const auto& e : r.sides[0]) left.insert(e.str());
  for (const auto& e : r.sides[1]) {
    if (left.contains(e.str())) reject("element '" + e.str() + "' on both sides");
  }

  if (auto moves = doc.find("moves"); moves != doc.end() && !moves->is_null()) {
    if (!moves->is_array()) reject("moves must be an array of [side, piece]");
    std::vector<Move> log;
    log.reserve(moves->size());
    for (const auto& m : *moves) {
      if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() || !m[1].is_string()) {
        reject("moves must be an array of [side, piece]");
      }
      const auto side = m[0].get<std::int64_t>();
      if (side != 0 && side != 1) reject("move side out of range");
      auto piece = m[1].get<std::string>();
      if (piece.empty()) reject("move piece must be non-empty");
      log.push_back(Move{static_cast<int>(side), std::move(piece)});
    }
    r.moves = std::move(log);
  }
  return r;
}

std::string format_match_record(const MatchRecord& record) {
  json doc = json::object();
  doc["match_id"] = record.match_id;
  json sides = json::array();
  for (const auto& roster : record.sides) {
    json names = json::array();
    for (const auto& e : roster) names.push_back(e.str());
    sides.push_back(std::move(names));
  }
  doc["sides"] = std::move(sides);
  doc["winner"] = record.winner;
  if (record.moves) {
    json moves = json::array();
    for (const auto& m : *record.moves) moves.push_back(json::array({m.side, m.piece}));
    doc["moves"] = std::move(moves);
  }
  return doc.dump();
}

IngestResult ingest_match_log(std::istream& in, double max_reject_fraction) {
  IngestResult result;
  std::vector<MatchRecord> records;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find('\0') != std::string::npos) {
      throw Error(Errc::MalformedStream, "line " + std::to_string(number) + ": NUL byte in input");
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ++result.lines;
    try {
      MatchRecord r = parse_match_record(line);
      if (!ids.insert(r.match_id).second) reject("duplicate match_id '" + r.match_id + "'");
      records.push_back(std::move(r));
    } catch (const Error& e) {
      result.rejections.push_back(Rejection{number, e.detail()});
    }
  }
  if (in.bad()) throw Error(Errc::MalformedStream, "read error after line " + std::to_string(number));

  const double rejected = static_cast<double>(result.rejections.size());
  if (result.lines > 0 && rejected > max_reject_fraction * static_cast<double>(result.lines)) {
    std::string detail = std::to_string(result.rejections.size()) + " of " + std::to_string(result.lines) +
                         " lines invalid";
    const auto& first = result.rejections.front();
    detail += " (first: line " + std::to_string(first.line) + ": " + first.reason + ")";
    throw Error(Errc::TooManyRejects, detail);
  }
  result.log = MatchLog(std::move(records));
  return result;
}

}  // namespace synergy::empirical
