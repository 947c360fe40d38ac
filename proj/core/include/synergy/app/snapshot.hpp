#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>

#include "synergy/app/run_config.hpp"
#include "synergy/empirical/matrices.hpp"

namespace synergy::app {

/// On-disk snapshot: a versioned, digest-checked copy of an ingested match
/// log. Format: a "synergy-snapshot 1" line, one JSON header line, then the
/// records as canonical JSONL.
struct SnapshotFile {
  std::uint64_t version = 1;
  std::string build_timestamp;  ///< ISO-8601 UTC
  std::string source;           ///< name of the ingested file
  empirical::MatchLog log;
};

/// UTC now, or SOURCE_DATE_EPOCH when that is set.
std::string build_timestamp_now();

/// Throws InvalidArgument on I/O failure.
void write_snapshot(const std::filesystem::path& path, const SnapshotFile& snapshot);
std::string format_snapshot(const SnapshotFile& snapshot);
/// Throws SnapshotLoadError (missing file, bad header, digest mismatch).
SnapshotFile read_snapshot(const std::filesystem::path& path);
SnapshotFile parse_snapshot(const std::string& text);

/// Everything the query side needs, computed once per snapshot version.
struct AnalysisSnapshot {
  std::uint64_t version = 0;
  std::string build_timestamp;
  std::string source;
  RunConfig config;  ///< resolved
  std::shared_ptr<const empirical::WinRateValueFunction> value_function;
  std::shared_ptr<const empirical::PairSynergyMatrix> matrix;
  std::shared_ptr<const empirical::CounterMatrix> counters;

  const empirical::MatchLog& log() const { return value_function->index().log(); }
};

/// Throws EmptyLog, ScaleMismatch, InvalidConfig.
std::shared_ptr<const AnalysisSnapshot> build_analysis(const SnapshotFile& file, const RunConfig& config);

/// Holds the snapshot in service. Readers take a shared_ptr and keep a
/// consistent view for as long as they hold it; publish swaps atomically.
class SnapshotStore {
 public:
  SnapshotStore() = default;
  explicit SnapshotStore(std::shared_ptr<const AnalysisSnapshot> initial);

  std::shared_ptr<const AnalysisSnapshot> current() const;
  void publish(std::shared_ptr<const AnalysisSnapshot> next);

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const AnalysisSnapshot> current_;
};

}  // namespace synergy::app
