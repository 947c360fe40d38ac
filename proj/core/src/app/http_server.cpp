#include <filesystem>

#include "httplib.h"
#include "synergy/app/service.hpp"
#include "synergy/error.hpp"

namespace synergy::app {

struct HttpServer::Impl {
  std::shared_ptr<const Service> service;
  httplib::Server server;
};

HttpServer::HttpServer(std::shared_ptr<const Service> service) : impl_(std::make_unique<Impl>()) {
  impl_->service = std::move(service);
  auto handler = [svc = impl_->service](const httplib::Request& req, httplib::Response& res) {
    HttpResponse out = svc->handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  impl_->server.Get(R"(/api/.*)", handler);
  impl_->server.Post(R"(/api/.*)", handler);
  impl_->server.Put(R"(/api/.*)", handler);
  impl_->server.Delete(R"(/api/.*)", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    bound = port;
  }
  if (bound < 0) throw Error(Errc::BindError, "cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

SnapshotWatcher::SnapshotWatcher(std::filesystem::path path, RunConfig config, std::shared_ptr<SnapshotStore> store,
                                 Logger log)
    : path_(std::move(path)), config_(std::move(config)), store_(std::move(store)), log_(std::move(log)) {
  std::error_code ec;
  seen_ = std::filesystem::last_write_time(path_, ec);
}

SnapshotWatcher::~SnapshotWatcher() { stop(); }

bool SnapshotWatcher::poll() {
  std::error_code ec;
  auto mtime = std::filesystem::last_write_time(path_, ec);
  if (ec || mtime == seen_) return false;
  seen_ = mtime;
  try {
    auto file = read_snapshot(path_);
    auto current = store_->current();
    if (current && file.version <= current->version) {
      if (log_) log_("snapshot version " + std::to_string(file.version) + " is not newer than " +
                     std::to_string(current->version) + "; keeping current");
      return false;
    }
    store_->publish(build_analysis(file, config_));
    if (log_) log_("published snapshot version " + std::to_string(file.version));
    return true;
  } catch (const Error& e) {
    if (log_) log_(std::string("snapshot reload failed: ") + std::string(errc_name(e.code())) + ": " + e.detail());
    return false;
  }
}

void SnapshotWatcher::start(std::chrono::milliseconds interval) {
  if (running_.exchange(true)) return;
  thread_ = std::thread([this, interval] {
    while (running_.load()) {
      auto until = std::chrono::steady_clock::now() + interval;
      while (running_.load() && std::chrono::steady_clock::now() < until) {
        std::this_thread::sleep_for(std::chrono::milliseconds(20));
      }
      if (running_.load()) poll();
    }
  });
}

void SnapshotWatcher::stop() {
  running_.store(false);
  if (thread_.joinable()) thread_.join();
}

}  // namespace synergy::app
