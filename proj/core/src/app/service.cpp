#include "synergy/app/service.hpp"

#include <optional>

#include "app/reports.hpp"
#include "synergy/error.hpp"
#include "synergy/recommend/recommend.hpp"

namespace synergy::app {

namespace {

struct BadRequest {
  std::string detail;
};

HttpResponse respond(int status, json body, const AnalysisSnapshot* snap) {
  body["snapshot_version"] = snap ? json(snap->version) : json(nullptr);
  return HttpResponse{status, render(body)};
}

std::vector<ElementId> id_list(const json& doc, const char* key) {
  std::vector<ElementId> out;
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return out;
  if (!it->is_array()) throw BadRequest{std::string(key) + " must be an array of ids"};
  for (const auto& v : *it) {
    if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
      throw BadRequest{std::string(key) + " must be an array of ids"};
    }
    out.emplace_back(v.get<std::string>());
  }
  return out;
}

struct DraftRequest {
  recommend::DraftState state;
  recommend::Weights weights;
  std::size_t k = 10;
  std::optional<ElementId> candidate;
};

DraftRequest parse_draft(std::string_view body, const AnalysisSnapshot& snap) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw BadRequest{"body must be a json object"};
  DraftRequest req;
  req.state.allies = id_list(doc, "allies");
  req.state.enemies = id_list(doc, "enemies");
  req.state.unavailable = id_list(doc, "unavailable");
  req.state.pool = snap.log().pool();
  req.k = snap.config.k;
  req.weights = {snap.config.ally_weight, snap.config.counter_weight};
  if (auto it = doc.find("k"); it != doc.end()) {
    if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0) throw BadRequest{"k must be a positive integer"};
    req.k = it->get<std::size_t>();
  }
  for (const char* key : {"ally_weight", "counter_weight"}) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (!it->is_number()) throw BadRequest{std::string(key) + " must be a number"};
      (std::string_view(key) == "ally_weight" ? req.weights.ally_weight : req.weights.counter_weight) =
          it->get<double>();
    }
  }
  if (auto it = doc.find("candidate"); it != doc.end()) {
    if (!it->is_string() || it->get_ref<const std::string&>().empty()) throw BadRequest{"candidate must be an id"};
    req.candidate = ElementId(it->get<std::string>());
  }
  return req;
}

}  // namespace

Service::Service(std::shared_ptr<SnapshotStore> store) : store_(std::move(store)) {}

HttpResponse Service::handle(std::string_view method, std::string_view path, std::string_view body) const {
  // One snapshot per request: a concurrent publish never mixes versions.
  const auto snap = store_->current();
  try {
    if (!snap) return respond(503, {{"error", "no_snapshot"}, {"detail", "no snapshot loaded"}}, nullptr);

    const bool get = method == "GET";
    const bool post = method == "POST";
    if (path == "/api/health") {
      if (!get) return respond(405, {{"error", "method_not_allowed"}, {"detail", "use GET"}}, snap.get());
      return respond(200, {{"status", "ok"}}, snap.get());
    }
    if (path == "/api/pool") {
      if (!get) return respond(405, {{"error", "method_not_allowed"}, {"detail", "use GET"}}, snap.get());
      json pool = json::array();
      for (const auto& id : snap->log().pool()) pool.push_back(id.str());
      return respond(200,
                     {{"pool", std::move(pool)},
                      {"records", snap->log().size()},
                      {"log_digest", snap->log().digest()},
                      {"source", snap->source},
                      {"build_timestamp", snap->build_timestamp}},
                     snap.get());
    }
    if (path == "/api/matrix") {
      if (!get) return respond(405, {{"error", "method_not_allowed"}, {"detail", "use GET"}}, snap.get());
      return respond(200, {{"matrix", matrix_json(*snap->matrix)}}, snap.get());
    }
    if (path == "/api/recommend" || path == "/api/whatif") {
      if (!post) return respond(405, {{"error", "method_not_allowed"}, {"detail", "use POST"}}, snap.get());
      DraftRequest req = parse_draft(body, *snap);
      if (path == "/api/recommend") {
        auto recs = recommend::recommend(*snap->matrix, *snap->counters, req.state, req.k, req.weights);
        return respond(200, {{"recommendations", recommendations_json(recs)}}, snap.get());
      }
      if (!req.candidate) throw BadRequest{"candidate is required"};
      auto w = recommend::what_if(*snap->matrix, *snap->counters, req.state, *req.candidate, req.weights);
      return respond(200, {{"whatif", whatif_json(w)}}, snap.get());
    }
    return respond(404, {{"error", "not_found"}, {"detail", "no route for " + std::string(path)}}, snap.get());
  } catch (const BadRequest& e) {
    return respond(400, {{"error", "bad_request"}, {"detail", e.detail}}, snap.get());
  } catch (const Error& e) {
    return respond(422, {{"error", std::string(errc_name(e.code()))}, {"detail", e.detail()}}, snap.get());
  } catch (const std::exception& e) {
    return respond(500, {{"error", "internal"}, {"detail", e.what()}}, snap.get());
  }
}

}  // namespace synergy::app
