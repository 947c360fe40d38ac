#include "synergy/search/topk.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "synergy/error.hpp"
#include "synergy/search/sampling.hpp"

namespace synergy::search {

std::string to_string(const SearchStrategy& strategy) {
  if (const auto* s = std::get_if<UniformSample>(&strategy)) return "sample:" + std::to_string(s->n);
  return "exhaustive";
}

SearchStrategy parse_strategy(std::string_view text, std::uint64_t seed) {
  if (text == "exhaustive") return Exhaustive{};
  constexpr std::string_view prefix = "sample:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) return UniformSample{n, seed};
  }
  throw Error(Errc::InvalidArgument, "strategy must be 'exhaustive' or 'sample:<n>' with n >= 1, got '" +
                                         std::string(text) + "'");
}

namespace {

/// Per-worker accumulator. With a cap it keeps only the best `cap` scores.
class Collector {
 public:
  explicit Collector(std::optional<std::size_t> cap) : cap_(cap) {}

  void add(SynergyScore score) {
    scores_.push_back(std::move(score));
    if (cap_ && scores_.size() >= 2 * *cap_ + 16) trim();
  }

  void trim() {
    std::sort(scores_.begin(), scores_.end(), ranks_before);
    if (cap_ && scores_.size() > *cap_) scores_.erase(scores_.begin() + static_cast<std::ptrdiff_t>(*cap_), scores_.end());
  }

  std::vector<SynergyScore>& scores() { return scores_; }
  std::uint64_t examined = 0;
  std::uint64_t skipped = 0;

 private:
  std::optional<std::size_t> cap_;
  std::vector<SynergyScore> scores_;
};

void score_into(Collector& out, const SynergySet& set, const ValueFunction& vf, BaselineKind baseline,
                bool skip_gaps) {
  ++out.examined;
  try {
    out.add(compute_synergy(set, vf, baseline));
  } catch (const Error& e) {
    if (!skip_gaps || e.code() != Errc::EvaluationGap) throw;
    ++out.skipped;
  }
}

template <typename Work>
std::vector<Collector> run_workers(std::size_t workers, std::optional<std::size_t> cap, Work work) {
  workers = std::max<std::size_t>(workers, 1);
  std::vector<Collector> parts(workers, Collector(cap));
  std::vector<std::exception_ptr> errors(workers);
  if (workers == 1) {
    work(0, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          work(w, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    // The lowest partition's failure wins, matching what a serial run reports.
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return parts;
}

ScoredPopulation collect(const CandidateSpace& space, const ValueFunction& vf, BaselineKind baseline,
                         const SearchStrategy& strategy, const SearchOptions& options,
                         std::optional<std::size_t> cap) {
  if (!baseline_compatible(baseline, vf.scale())) {
    throw Error(Errc::ScaleMismatch, std::string(to_string(baseline)) + " baseline is not defined on a " +
                                         vf.scale().describe() + " scale");
  }
  SpaceIndex index(space);
  if (index.size() == 0) throw Error(Errc::EmptySpace, "candidate space has no members");
  const std::size_t workers = std::max<std::size_t>(options.workers, 1);

  std::vector<Collector> parts;
  ScoredPopulation result;
  result.strategy = strategy;
  if (std::holds_alternative<Exhaustive>(strategy)) {
    if (index.size() > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(Errc::SpaceTooLarge, "space of " + index.size().str() + " sets cannot be scanned exhaustively");
    }
    const BigCount total = index.size();
    parts = run_workers(workers, cap, [&](std::size_t w, Collector& out) {
      const BigCount begin = total * w / workers;
      const BigCount end = total * (w + 1) / workers;
      SetEnumerator it(space, index, begin, static_cast<std::uint64_t>(end - begin));
      while (auto set = it.next()) score_into(out, *set, vf, baseline, options.skip_gaps);
    });
    result.exhaustive = true;
  } else {
    const auto& sample = std::get<UniformSample>(strategy);
    auto drawn = sample_sets(space, sample.n, sample.seed);
    std::sort(drawn.begin(), drawn.end());
    drawn.erase(std::unique(drawn.begin(), drawn.end()), drawn.end());
    parts = run_workers(workers, cap, [&](std::size_t w, Collector& out) {
      const std::size_t begin = drawn.size() * w / workers;
      const std::size_t end = drawn.size() * (w + 1) / workers;
      for (std::size_t i = begin; i < end; ++i) score_into(out, drawn[i], vf, baseline, options.skip_gaps);
    });
  }

  for (auto& part : parts) {
    result.sets_examined += part.examined;
    result.sets_skipped += part.skipped;
    auto& scores = part.scores();
    result.scores.insert(result.scores.end(), std::make_move_iterator(scores.begin()),
                         std::make_move_iterator(scores.end()));
  }
  if (result.sets_examined == 0) throw Error(Errc::EmptySpace, "no candidate set passed the filter");
  std::sort(result.scores.begin(), result.scores.end(), ranks_before);
  if (cap && result.scores.size() > *cap) {
    result.scores.erase(result.scores.begin() + static_cast<std::ptrdiff_t>(*cap), result.scores.end());
  }
  return result;
}

}  // namespace

TopKResult top_k_synergy(const CandidateSpace& space, const ValueFunction& vf, BaselineKind baseline,
                         std::size_t k, const SearchStrategy& strategy, const SearchOptions& options) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  auto population = collect(space, vf, baseline, strategy, options, k);
  return TopKResult{k,
                    std::move(population.scores),
                    population.sets_examined,
                    population.sets_skipped,
                    population.strategy,
                    population.exhaustive};
}

ScoredPopulation score_space(const CandidateSpace& space, const ValueFunction& vf, BaselineKind baseline,
                             const SearchStrategy& strategy, const SearchOptions& options) {
  return collect(space, vf, baseline, strategy, options, std::nullopt);
}

}  // namespace synergy::search
