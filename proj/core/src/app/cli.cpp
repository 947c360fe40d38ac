#include "synergy/app/cli.hpp"

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "app/reports.hpp"
#include "synergy/app/run_config.hpp"
#include "synergy/app/service.hpp"
#include "synergy/app/snapshot.hpp"
#include "synergy/empirical/ingest.hpp"
#include "synergy/empirical/sequences.hpp"
#include "synergy/error.hpp"
#include "synergy/recommend/recommend.hpp"
#include "synergy/search/space.hpp"
#include "synergy/search/topk.hpp"
#include "synergy/tcg/card_io.hpp"
#include "synergy/tcg/scan.hpp"

namespace synergy::app {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
}

/// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

fs::path csv_beside(const std::string& json_path) {
  fs::path p(json_path);
  p.replace_extension(".csv");
  return p;
}

std::vector<ElementId> to_ids(const std::vector<std::string>& names) {
  std::vector<ElementId> out;
  out.reserve(names.size());
  for (const auto& n : names) out.emplace_back(n);
  return out;
}

json id_array(std::span<const ElementId> ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back(id.str());
  return out;
}

std::vector<tcg::Card> load_cards(const std::string& path) {
  if (path.empty()) return {};
  try {
    return tcg::parse_cards(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

struct CardInputs {
  std::vector<tcg::Card> all;
  std::vector<ElementId> new_ids;
};

CardInputs load_card_inputs(const std::string& pool_path, const std::string& new_path) {
  CardInputs in;
  in.all = load_cards(pool_path);
  auto fresh = load_cards(new_path);
  for (auto& c : fresh) {
    in.new_ids.push_back(c.id);
    in.all.push_back(std::move(c));
  }
  std::sort(in.new_ids.begin(), in.new_ids.end());
  return in;
}

tcg::BoardState parse_board(const std::vector<std::string>& flags) {
  tcg::BoardState state;
  for (const auto& f : flags) {
    auto eq = f.find('=');
    std::string name = f.substr(0, eq);
    std::string value = eq == std::string::npos ? "true" : f.substr(eq + 1);
    if (name.empty() || (value != "true" && value != "false")) {
      throw Error(Errc::InvalidArgument, "board flag must be <name>[=true|false]: " + f);
    }
    state.opponent_flags[name] = value == "true";
  }
  return state;
}

json board_json(const tcg::BoardState& state) {
  json out = json::object();
  for (const auto& [k, v] : state.opponent_flags) out[k] = v;
  return out;
}

/// Options shared by every subcommand.
struct GlobalOptions {
  RunConfig cfg;
  std::string baseline, outlier, config_path;
  double threshold = 0.0;
  std::uint32_t copy_cap = 1;
  std::size_t workers = 1;
  CLI::Option* o_baseline = nullptr;
  CLI::Option* o_min_games = nullptr;
  CLI::Option* o_z = nullptr;
  CLI::Option* o_outlier = nullptr;
  CLI::Option* o_threshold = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_strategy = nullptr;
  CLI::Option* o_k = nullptr;
  CLI::Option* o_ally = nullptr;
  CLI::Option* o_counter = nullptr;
  CLI::Option* o_cap = nullptr;
  CLI::Option* o_min_size = nullptr;
  CLI::Option* o_max_size = nullptr;
  CLI::Option* o_skip = nullptr;

  void add_to(CLI::App& app) {
    app.add_option("--config", config_path, "RunConfig JSON, or a report that embeds one");
    o_baseline = app.add_option("--baseline", baseline, "sum | mean | independent | pooled");
    o_min_games = app.add_option("--min-games", cfg.min_games, "low-confidence threshold on joint games");
    o_z = app.add_option("--z", cfg.z, "normal quantile for Wilson intervals");
    o_outlier = app.add_option("--outlier", outlier, "madz | iqr");
    o_threshold = app.add_option("--threshold", threshold, "outlier threshold");
    o_seed = app.add_option("--seed", cfg.seed, "sampling seed");
    o_strategy = app.add_option("--strategy", cfg.strategy, "exhaustive | sample:<n>");
    o_k = app.add_option("--k", cfg.k, "results to report");
    o_ally = app.add_option("--ally-weight", cfg.ally_weight, "recommendation weight on ally synergy");
    o_counter = app.add_option("--counter-weight", cfg.counter_weight, "recommendation weight on counters");
    o_cap = app.add_option("--copy-cap", copy_cap, "max copies of one element in a set");
    o_min_size = app.add_option("--min-size", cfg.size_min, "smallest set size searched");
    o_max_size = app.add_option("--max-size", cfg.size_max, "largest set size searched");
    o_skip = app.add_option("--skip-first", cfg.skip_first, "opening moves ignored per side");
    app.add_option("--workers", workers, "evaluation threads (results do not depend on it)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  }

  /// Defaults, then --config, then flags given on the command line.
  RunConfig resolve() const {
    RunConfig out = config_path.empty() ? RunConfig{} : RunConfig::from_json(read_file(config_path));
    if (o_baseline->count()) out.baseline = parse_baseline(baseline);
    if (o_min_games->count()) out.min_games = cfg.min_games;
    if (o_z->count()) out.z = cfg.z;
    if (o_outlier->count()) out.outlier = search::parse_outlier_method(outlier);
    if (o_threshold->count()) out.threshold = threshold;
    if (o_seed->count()) out.seed = cfg.seed;
    if (o_strategy->count()) out.strategy = cfg.strategy;
    if (o_k->count()) out.k = cfg.k;
    if (o_ally->count()) out.ally_weight = cfg.ally_weight;
    if (o_counter->count()) out.counter_weight = cfg.counter_weight;
    if (o_cap->count()) out.copy_cap = copy_cap;
    if (o_min_size->count()) out.size_min = cfg.size_min;
    if (o_max_size->count()) out.size_max = cfg.size_max;
    if (o_skip->count()) out.skip_first = cfg.skip_first;
    out.validate();
    return out;
  }
};

json report_header(const RunConfig& cfg, const char* command) {
  json j;
  j["command"] = command;
  j["config"] = config_json(cfg);
  return j;
}

std::shared_ptr<const AnalysisSnapshot> load_analysis(const std::string& path, const RunConfig& cfg) {
  return build_analysis(read_snapshot(path), cfg);
}

// ---------------------------------------------------------------- commands

int run_ingest(const std::string& log_path, const std::string& out_path, const std::string& previous,
               std::ostream& out, std::ostream& err) {
  std::ifstream in(log_path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + log_path);
  empirical::IngestResult result;
  try {
    result = empirical::ingest_match_log(in);
  } catch (const Error& e) {
    throw Error(e.code(), log_path + ": " + e.detail());
  }
  for (const auto& r : result.rejections) err << log_path << ":" << r.line << ": rejected: " << r.reason << "\n";

  SnapshotFile snap;
  snap.version = previous.empty() ? 1 : read_snapshot(previous).version + 1;
  snap.build_timestamp = build_timestamp_now();
  snap.source = fs::path(log_path).filename().string();
  snap.log = std::move(result.log);
  write_snapshot(out_path, snap);

  out << "ingested " << snap.log.size() << " records (" << result.rejections.size() << " rejected of "
      << result.lines << " lines) into " << out_path << ", snapshot version " << snap.version << ", digest "
      << snap.log.digest() << "\n";
  return kExitOk;
}

int run_matrix(const GlobalOptions& g, const std::string& snap_path, const std::string& out_path,
               const std::string& csv_path, bool counters, std::ostream& out) {
  auto snap = load_analysis(snap_path, g.resolve());
  json doc = report_header(snap->config, counters ? "counters" : "matrix");
  doc["snapshot_version"] = snap->version;
  std::string csv;
  if (counters) {
    doc["counters"] = counters_json(*snap->counters);
    csv = counters_csv(*snap->counters);
  } else {
    doc["matrix"] = matrix_json(*snap->matrix);
    csv = matrix_csv(*snap->matrix);
  }
  emit(out_path, render(doc), out);
  if (!csv_path.empty()) {
    write_file(csv_path, csv);
  } else if (!out_path.empty()) {
    write_file(csv_beside(out_path), csv);
  }
  return kExitOk;
}

int run_topk(const GlobalOptions& g, const std::string& snap_path, const std::string& pool_path,
             const std::string& new_path, const std::string& filter, const std::vector<std::string>& flags,
             const std::string& out_path, std::ostream& out) {
  if (snap_path.empty() == (pool_path.empty() && new_path.empty())) {
    throw Error(Errc::InvalidArgument, "give either --snap or --pool/--new");
  }
  RunConfig base = g.resolve();
  search::SearchOptions opts;
  opts.workers = g.workers;
  search::CandidateSpace space;
  std::shared_ptr<const ValueFunction> vf;
  RunConfig cfg;
  json doc;
  std::shared_ptr<const AnalysisSnapshot> snap;
  if (!snap_path.empty()) {
    snap = load_analysis(snap_path, base);
    cfg = base.resolved(BaselineKind::Mean, 1);
    vf = snap->value_function;
    space.pool = snap->log().pool();
    opts.skip_gaps = true;
  } else {
    cfg = base.resolved(BaselineKind::PooledRatio, tcg::kDeckCopyCap);
    auto cards = load_card_inputs(pool_path, new_path);
    auto pool = std::make_shared<const tcg::CardPool>(std::move(cards.all));
    vf = std::make_shared<tcg::DpmValueFunction>(pool, parse_board(flags), *cfg.copy_cap);
    space.pool = pool->ids();
  }
  space.size_min = cfg.size_min;
  space.size_max = cfg.size_max;
  space.copy_cap = *cfg.copy_cap;
  if (!filter.empty()) space.filter = search::SetFilter::parse(filter);
  space.validate();

  auto result = search::top_k_synergy(space, *vf, *cfg.baseline, cfg.k, cfg.search_strategy(), opts);
  doc = report_header(cfg, "topk");
  if (snap) doc["snapshot_version"] = snap->version;
  if (!flags.empty()) doc["board"] = board_json(parse_board(flags));
  doc["filter"] = space.filter ? json(space.filter->to_string()) : json(nullptr);
  doc["space_size"] = search::count_sets(space).str();
  doc["topk"] = topk_json(result);
  emit(out_path, render(doc), out);
  return kExitOk;
}

int run_draft(const GlobalOptions& g, const std::string& snap_path, const std::vector<std::string>& allies,
              const std::vector<std::string>& enemies, const std::vector<std::string>& unavailable,
              const std::string& candidate, const std::string& out_path, std::ostream& out) {
  auto snap = load_analysis(snap_path, g.resolve());
  const RunConfig& cfg = snap->config;
  recommend::DraftState state{to_ids(allies), to_ids(enemies), to_ids(unavailable), snap->log().pool()};
  recommend::Weights weights{cfg.ally_weight, cfg.counter_weight};
  json doc = report_header(cfg, candidate.empty() ? "recommend" : "whatif");
  doc["snapshot_version"] = snap->version;
  doc["draft"] = {{"allies", id_array(state.allies)},
                  {"enemies", id_array(state.enemies)},
                  {"unavailable", id_array(state.unavailable)}};
  if (candidate.empty()) {
    doc["recommendations"] =
        recommendations_json(recommend::recommend(*snap->matrix, *snap->counters, state, cfg.k, weights));
  } else {
    doc["whatif"] =
        whatif_json(recommend::what_if(*snap->matrix, *snap->counters, state, ElementId(candidate), weights));
  }
  emit(out_path, render(doc), out);
  return kExitOk;
}

int run_tcg(const GlobalOptions& g, const std::string& pool_path, const std::string& new_path,
            const std::vector<std::string>& edit_texts, const std::vector<std::string>& flags,
            const std::string& out_path, const std::string& pool_out, std::ostream& out) {
  RunConfig cfg = g.resolve().resolved(BaselineKind::PooledRatio, tcg::kDeckCopyCap);
  auto cards = load_card_inputs(pool_path, new_path);
  if (cards.new_ids.empty()) throw Error(Errc::InvalidArgument, "the new card set is empty");
  tcg::CardPool pool(std::move(cards.all));

  std::vector<tcg::CardEdit> edits;
  for (const auto& t : edit_texts) edits.push_back(tcg::CardEdit::parse(t));

  tcg::ScanSpec spec;
  spec.size_min = cfg.size_min;
  spec.size_max = cfg.size_max;
  spec.copy_cap = *cfg.copy_cap;
  spec.strategy = cfg.search_strategy();
  spec.method = cfg.outlier;
  spec.threshold = *cfg.threshold;
  spec.baseline = *cfg.baseline;
  spec.state = parse_board(flags);
  spec.workers = g.workers;

  auto result = tcg::rebalance_iterate(pool, cards.new_ids, edits, spec);

  json doc = report_header(cfg, "tcg-scan");
  doc["new_cards"] = id_array(cards.new_ids);
  doc["board"] = board_json(spec.state);
  doc["edits"] = edit_texts;
  doc["pool_version"] = result.pool.version();
  doc["scan"] = scan_json(result.scan);
  emit(out_path, render(doc), out);
  if (!pool_out.empty()) write_file(pool_out, tcg::cards_to_json(result.pool.cards()));
  return kExitOk;
}

int run_chess(const GlobalOptions& g, const std::string& log_path, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  RunConfig cfg = g.resolve().resolved(BaselineKind::Mean, 1);
  std::ifstream in(log_path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + log_path);
  empirical::IngestResult ingested;
  try {
    ingested = empirical::ingest_match_log(in);
  } catch (const Error& e) {
    throw Error(e.code(), log_path + ": " + e.detail());
  }
  for (const auto& r : ingested.rejections) err << log_path << ":" << r.line << ": rejected: " << r.reason << "\n";

  auto table = empirical::sequence_win_rates(ingested.log, cfg.skip_first, cfg.z);
  auto seq = empirical::sequence_log(ingested.log, cfg.skip_first);
  json doc = report_header(cfg, "chess-seq");
  doc["records"] = ingested.log.size();
  doc["log_digest"] = ingested.log.digest();
  doc["bigrams"] = sequence_table_json(table);
  doc["matrix"] = matrix_json(empirical::pair_synergy_matrix(seq, *cfg.baseline, cfg.min_games, cfg.z));
  emit(out_path, render(doc), out);
  return kExitOk;
}

int run_count(const GlobalOptions& g, std::optional<std::size_t> pool_size, const std::string& pool_path,
              const std::string& new_path, const std::string& snap_path, const std::string& out_path,
              std::ostream& out) {
  const bool cards = !pool_path.empty() || !new_path.empty();
  const int sources = int(pool_size.has_value()) + int(cards) + int(!snap_path.empty());
  if (sources != 1) throw Error(Errc::InvalidArgument, "give exactly one of --pool-size, --pool/--new, --snap");
  RunConfig cfg = g.resolve().resolved(BaselineKind::Mean, cards ? tcg::kDeckCopyCap : 1);
  search::CandidateSpace space;
  if (pool_size) {
    for (std::size_t i = 0; i < *pool_size; ++i) space.pool.emplace_back("e" + std::to_string(i));
  } else if (cards) {
    space.pool = tcg::CardPool(load_card_inputs(pool_path, new_path).all).ids();
  } else {
    space.pool = read_snapshot(snap_path).log.pool();
  }
  space.size_min = cfg.size_min;
  space.size_max = cfg.size_max;
  space.copy_cap = *cfg.copy_cap;
  space.validate();
  std::string count = search::count_sets(space).str();
  json doc{{"pool_size", space.pool.size()},
           {"size_min", space.size_min},
           {"size_max", space.size_max},
           {"copy_cap", space.copy_cap},
           {"count", count},
           {"digits", count.size()}};
  emit(out_path, render(doc), out);
  return kExitOk;
}

int run_serve(const GlobalOptions& g, const std::string& snap_path, int port, const std::string& host,
              int watch_ms, std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv("SYNERGY_PORT"); env != nullptr && *env != '\0') {
    try {
      port = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, std::string("SYNERGY_PORT is not a port number: ") + env);
    }
  }
  if (port < 0 || port > 65535) throw Error(Errc::InvalidArgument, "port out of range");
  RunConfig cfg = g.resolve();
  auto store = std::make_shared<SnapshotStore>(load_analysis(snap_path, cfg));
  auto service = std::make_shared<const Service>(store);

  // Block the stop signals before any thread starts so only the waiter sees them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  HttpServer server(service);
  int bound = server.bind(host, port);
  out << "listening on " << host << ":" << bound << " (snapshot version " << store->current()->version << ")"
      << std::endl;

  SnapshotWatcher watcher(snap_path, cfg, store, [&err](const std::string& msg) { err << msg << std::endl; });
  if (watch_ms > 0) watcher.start(std::chrono::milliseconds(watch_ms));

  std::thread waiter([&server, signals] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.listen();
  watcher.stop();
  if (waiter.joinable()) {
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
  }
  return kExitOk;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synergy analysis over match logs and card pools", "synergy"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  g.add_to(app);

  std::string snap, log, out_path, csv, prev, pool, fresh, filter, candidate, pool_out, host = "127.0.0.1";
  std::vector<std::string> allies, enemies, unavailable, edits, flags;
  std::optional<std::size_t> pool_size;
  int port = 8080, watch_ms = 1000;

  auto* ingest = app.add_subcommand("ingest", "validate a JSONL match log into a snapshot");
  ingest->add_option("--log", log, "JSONL match log")->required();
  ingest->add_option("--out", out_path, "snapshot file to write")->required();
  ingest->add_option("--previous", prev, "snapshot this one supersedes (version + 1)");

  auto* matrix = app.add_subcommand("matrix", "pair synergy matrix (JSON + CSV)");
  auto* counters = app.add_subcommand("counters", "counter matrix (JSON + CSV)");
  for (auto* sub : {matrix, counters}) {
    sub->add_option("--snap", snap, "snapshot file")->required();
    sub->add_option("--out", out_path, "JSON report (stdout if omitted)");
    sub->add_option("--csv", csv, "CSV path (default: beside --out)");
  }

  auto* topk = app.add_subcommand("topk", "highest-synergy sets of a match log or card pool");
  topk->add_option("--snap", snap, "snapshot file");
  topk->add_option("--pool", pool, "card set JSON");
  topk->add_option("--new", fresh, "second card set JSON, merged into the pool");
  topk->add_option("--filter", filter, "must-contain:<id> | must-contain-any:<id>,<id>");
  topk->add_option("--board", flags, "opponent flag <name>[=true|false]");
  topk->add_option("--out", out_path, "JSON report (stdout if omitted)");

  auto* rec = app.add_subcommand("recommend", "rank draft candidates");
  auto* whatif = app.add_subcommand("whatif", "score one draft candidate with its breakdown");
  for (auto* sub : {rec, whatif}) {
    sub->add_option("--snap", snap, "snapshot file")->required();
    sub->add_option("--allies", allies, "picked allies")->delimiter(',');
    sub->add_option("--enemies", enemies, "picked enemies")->delimiter(',');
    sub->add_option("--unavailable", unavailable, "banned characters")->delimiter(',');
    sub->add_option("--out", out_path, "JSON report (stdout if omitted)");
  }
  whatif->add_option("--candidate", candidate, "candidate to score")->required();

  auto* scan = app.add_subcommand("tcg-scan", "flag outlier combos involving new cards");
  auto* rebalance = app.add_subcommand("tcg-rebalance", "apply card edits and rescan");
  for (auto* sub : {scan, rebalance}) {
    sub->add_option("--pool", pool, "existing card set JSON")->required();
    sub->add_option("--new", fresh, "new card set JSON")->required();
    sub->add_option("--board", flags, "opponent flag <name>[=true|false]");
    sub->add_option("--out", out_path, "JSON report (stdout if omitted)");
  }
  rebalance->add_option("--edit", edits, "<card>:<field>=<value>, repeatable");
  rebalance->add_option("--pool-out", pool_out, "write the edited cards here");

  auto* chess = app.add_subcommand("chess-seq", "piece-sequence bigram win rates");
  chess->add_option("--log", log, "JSONL match log with move lists")->required();
  chess->add_option("--out", out_path, "JSON report (stdout if omitted)");

  auto* count = app.add_subcommand("count", "size of a candidate space, without enumerating it");
  count->add_option("--pool-size", pool_size, "synthetic pool of this many elements");
  count->add_option("--pool", pool, "card set JSON");
  count->add_option("--new", fresh, "second card set JSON");
  count->add_option("--snap", snap, "snapshot file");
  count->add_option("--out", out_path, "JSON report (stdout if omitted)");

  auto* serve = app.add_subcommand("serve", "HTTP query API over a snapshot");
  serve->add_option("--snap", snap, "snapshot file (reloaded when it changes)")->required();
  serve->add_option("--port", port, "listen port (SYNERGY_PORT overrides)");
  serve->add_option("--host", host, "listen address");
  serve->add_option("--watch-ms", watch_ms, "snapshot poll interval, 0 disables");

  std::vector<std::string> argv_store{"synergy"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (ingest->parsed()) return run_ingest(log, out_path, prev, out, err);
    if (matrix->parsed()) return run_matrix(g, snap, out_path, csv, false, out);
    if (counters->parsed()) return run_matrix(g, snap, out_path, csv, true, out);
    if (topk->parsed()) return run_topk(g, snap, pool, fresh, filter, flags, out_path, out);
    if (rec->parsed()) return run_draft(g, snap, allies, enemies, unavailable, "", out_path, out);
    if (whatif->parsed()) return run_draft(g, snap, allies, enemies, unavailable, candidate, out_path, out);
    if (scan->parsed()) return run_tcg(g, pool, fresh, {}, flags, out_path, "", out);
    if (rebalance->parsed()) return run_tcg(g, pool, fresh, edits, flags, out_path, pool_out, out);
    if (chess->parsed()) return run_chess(g, log, out_path, out, err);
    if (count->parsed()) return run_count(g, pool_size, pool, fresh, snap, out_path, out);
    if (serve->parsed()) return run_serve(g, snap, port, host, watch_ms, out, err);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.detail() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace synergy::app
