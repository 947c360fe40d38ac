#include "synergy/app/snapshot.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "synergy/empirical/ingest.hpp"
#include "synergy/error.hpp"

namespace synergy::app {

namespace {

constexpr std::string_view kMagic = "synergy-snapshot 1";

[[noreturn]] void load_error(const std::string& why) { throw Error(Errc::SnapshotLoadError, why); }

}  // namespace

std::string build_timestamp_now() {
  std::time_t t = 0;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH"); env != nullptr && *env != '\0') {
    t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_snapshot(const SnapshotFile& s) {
  nlohmann::json header{{"version", s.version},
                        {"build_timestamp", s.build_timestamp},
                        {"source", s.source},
                        {"log_digest", s.log.digest()},
                        {"records", s.log.size()}};
  std::string out(kMagic);
  out += '\n';
  out += header.dump();
  out += '\n';
  for (const auto& r : s.log.records()) {
    out += empirical::format_match_record(r);
    out += '\n';
  }
  return out;
}

void write_snapshot(const std::filesystem::path& path, const SnapshotFile& snapshot) {
  std::string text = format_snapshot(snapshot);
  // Write-then-rename so a watching server never reads a half-written file.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::InvalidArgument, "cannot write " + path.string() + ": " + ec.message());
}

SnapshotFile parse_snapshot(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kMagic) load_error("not a snapshot file");
  if (!std::getline(in, line)) load_error("missing header");
  auto header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object()) load_error("malformed header");

  SnapshotFile s;
  std::string digest;
  std::size_t expected = 0;
  try {
    s.version = header.at("version").get<std::uint64_t>();
    s.build_timestamp = header.at("build_timestamp").get<std::string>();
    s.source = header.at("source").get<std::string>();
    digest = header.at("log_digest").get<std::string>();
    expected = header.at("records").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    load_error(std::string("malformed header: ") + e.what());
  }

  std::vector<empirical::MatchRecord> records;
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      records.push_back(empirical::parse_match_record(line));
    } catch (const Error& e) {
      load_error("line " + std::to_string(lineno) + ": " + e.detail());
    }
  }
  if (records.size() != expected) load_error("record count does not match header");
  try {
    s.log = empirical::MatchLog(std::move(records));
  } catch (const Error& e) {
    load_error(e.detail());
  }
  if (s.log.digest() != digest) load_error("log digest mismatch");
  return s;
}

SnapshotFile read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) load_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_snapshot(buf.str());
}

std::shared_ptr<const AnalysisSnapshot> build_analysis(const SnapshotFile& file, const RunConfig& config) {
  config.validate();
  auto snap = std::make_shared<AnalysisSnapshot>();
  snap->version = file.version;
  snap->build_timestamp = file.build_timestamp;
  snap->source = file.source;
  snap->config = config.resolved(BaselineKind::Mean, 1);
  snap->value_function = empirical::winrate_value_function(file.log, config.min_games, config.z);
  snap->matrix = std::make_shared<empirical::PairSynergyMatrix>(
      empirical::pair_synergy_matrix(*snap->value_function, *snap->config.baseline));
  snap->counters = std::make_shared<empirical::CounterMatrix>(
      empirical::counter_matrix(snap->value_function->index(), config.min_games, config.z));
  return snap;
}

SnapshotStore::SnapshotStore(std::shared_ptr<const AnalysisSnapshot> initial) : current_(std::move(initial)) {}

std::shared_ptr<const AnalysisSnapshot> SnapshotStore::current() const {
  std::lock_guard lock(mu_);
  return current_;
}

void SnapshotStore::publish(std::shared_ptr<const AnalysisSnapshot> next) {
  std::lock_guard lock(mu_);
  current_ = std::move(next);
}

}  // namespace synergy::app
