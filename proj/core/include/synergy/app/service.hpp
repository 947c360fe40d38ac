#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <thread>

#include "synergy/app/snapshot.hpp"

namespace synergy::app {

struct HttpResponse {
  int status = 200;
  std::string body;
};

/// The query API, independent of any transport.
///
///   GET  /api/health     {"status":"ok"}
///   GET  /api/pool       the snapshot's element pool
///   GET  /api/matrix     the pair synergy matrix
///   POST /api/recommend  {"allies":[], "enemies":[], "unavailable":[], "k":n}
///   POST /api/whatif     same plus "candidate"
///
/// Every body carries "snapshot_version". Malformed requests get 400,
/// domain errors 422 as {"error": <code>, "detail": <text>}.
class Service {
 public:
  explicit Service(std::shared_ptr<SnapshotStore> store);

  HttpResponse handle(std::string_view method, std::string_view path, std::string_view body) const;

  SnapshotStore& store() const noexcept { return *store_; }

 private:
  std::shared_ptr<SnapshotStore> store_;
};

/// Serves a Service over HTTP/1.1.
class HttpServer {
 public:
  explicit HttpServer(std::shared_ptr<const Service> service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port. Throws BindError.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Polls a snapshot file and publishes each newer version into a store.
class SnapshotWatcher {
 public:
  using Logger = std::function<void(const std::string&)>;

  SnapshotWatcher(std::filesystem::path path, RunConfig config, std::shared_ptr<SnapshotStore> store,
                  Logger log = {});
  ~SnapshotWatcher();

  /// One check. Returns true if a newer version was published. Load errors
  /// are logged and leave the current snapshot in service.
  bool poll();

  void start(std::chrono::milliseconds interval);
  void stop();

 private:
  std::filesystem::path path_;
  RunConfig config_;
  std::shared_ptr<SnapshotStore> store_;
  Logger log_;
  std::filesystem::file_time_type seen_{};
  std::atomic<bool> running_{false};
  std::thread thread_;
};

}  // namespace synergy::app
