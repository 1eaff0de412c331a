#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <future>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "mids/branching.hpp"
#include "mids/graph.hpp"
#include "mids/instance.hpp"
#include "mids/reductions.hpp"

namespace mids {

struct SolverOptions {
  /// Compare every branch's measure drop with the drop its case promises.
  bool check_measure = true;
  /// Keep every (lemma, drop) pair, not only the per-lemma summary.
  bool record_decrements = false;
  /// Worker threads for the root branching; 1 keeps everything on the caller.
  unsigned threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct LemmaTally {
  std::size_t plans = 0;
  std::size_t branches = 0;
  std::size_t refuted = 0;  // plans with no branch left
  double min_decrement = std::numeric_limits<double>::infinity();
};

struct Decrement {
  Lemma lemma;
  double amount;
  bool follow_up;
};

struct BranchStats {
  std::size_t nodes = 0;
  std::size_t max_depth = 0;
  std::array<LemmaTally, lemma_count> lemmas{};
  RuleHits rule_hits;
  std::vector<Decrement> measure_decrements;
  std::size_t decrement_violations = 0;
  std::size_t reduction_increases = 0;
  bool aborted = false;

  LemmaTally& operator[](Lemma l) noexcept { return lemmas[static_cast<std::size_t>(l)]; }
  const LemmaTally& operator[](Lemma l) const noexcept {
    return lemmas[static_cast<std::size_t>(l)];
  }

  BranchStats& operator+=(const BranchStats& o) {
    nodes += o.nodes;
    max_depth = std::max(max_depth, o.max_depth);
    for (std::size_t i = 0; i < lemma_count; ++i) {
      lemmas[i].plans += o.lemmas[i].plans;
      lemmas[i].branches += o.lemmas[i].branches;
      lemmas[i].refuted += o.lemmas[i].refuted;
      lemmas[i].min_decrement = std::min(lemmas[i].min_decrement, o.lemmas[i].min_decrement);
    }
    rule_hits += o.rule_hits;
    measure_decrements.insert(measure_decrements.end(), o.measure_decrements.begin(),
                              o.measure_decrements.end());
    decrement_violations += o.decrement_violations;
    reduction_increases += o.reduction_increases;
    aborted = aborted || o.aborted;
    return *this;
  }
};

struct SolveResult {
  Solution solution;
  BranchStats stats;
};

namespace detail {

inline constexpr double measure_eps = 1e-9;

struct Aborted {};

// Incumbent shared by concurrent root branches; only used to report
// something useful when the deadline fires.
struct Incumbent {
  std::mutex mu;
  Solution best = Solution::infeasible();

  void offer(const Solution& s) {
    std::lock_guard lock(mu);
    if (better(s, best)) best = s;
  }
};

struct Incoming {
  Lemma lemma;
  double parent_measure;
  double promised;
  bool follow_up;
};

class Search {
 public:
  Search(const SolverOptions& opts, Incumbent& incumbent) : opts_(opts), incumbent_(incumbent) {}

  Solution run(const Instance& inst, std::size_t depth, const std::optional<Incoming>& in) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (opts_.deadline && (stats.nodes & 63) == 0 &&
        std::chrono::steady_clock::now() > *opts_.deadline)
      throw Aborted{};

    const double before = opts_.check_measure ? measure(inst) : 0.0;
    auto r = reduce(inst);
    stats.rule_hits += r.hits;
    if (r.infeasible) return Solution::infeasible();

    double now = 0.0;
    if (opts_.check_measure) {
      now = measure(r.inst);
      if (now > before + measure_eps) ++stats.reduction_increases;
      if (in) record(*in, now);
    }

    if (r.inst.alive().empty()) {
      auto s = Solution::of(r.inst.chosen());
      incumbent_.offer(s);
      return s;
    }

    const BranchingPlan plan = plan_for(r.inst);
    auto& tally = stats[plan.source];
    ++tally.plans;
    tally.branches += plan.branches.size();
    if (plan.branches.empty()) ++tally.refuted;

    if (opts_.threads > 1 && depth == 0 && plan.branches.size() > 1)
      return run_parallel(r.inst, plan, now);

    Solution best = Solution::infeasible();
    for (const auto& b : plan.branches) {
      auto s = run(apply_branch(r.inst, b), depth + 1,
                   Incoming{plan.source, now, b.promised, b.follow_up});
      if (better(s, best)) best = std::move(s);
    }
    return best;
  }

  BranchStats stats;

 private:
  void record(const Incoming& in, double child_measure) {
    const double drop = in.parent_measure - child_measure;
    auto& tally = stats[in.lemma];
    tally.min_decrement = std::min(tally.min_decrement, drop);
    if (drop + measure_eps < in.promised || drop <= 0.0) ++stats.decrement_violations;
    if (opts_.record_decrements) stats.measure_decrements.push_back({in.lemma, drop, in.follow_up});
  }

  Solution run_parallel(const Instance& inst, const BranchingPlan& plan, double now) {
    struct Part {
      Solution solution;
      BranchStats stats;
      bool aborted = false;
    };
    std::vector<Part> parts(plan.branches.size());
    std::vector<std::future<void>> running;
    for (std::size_t i = 0; i < plan.branches.size(); ++i) {
      if (running.size() >= opts_.threads) {
        running.front().get();
        running.erase(running.begin());
      }
      running.push_back(std::async(std::launch::async, [&, i] {
        Search sub(opts_, incumbent_);
        const auto& b = plan.branches[i];
        try {
          parts[i].solution =
              sub.run(apply_branch(inst, b), 1, Incoming{plan.source, now, b.promised, b.follow_up});
        } catch (const Aborted&) {
          parts[i].aborted = true;
        }
        parts[i].stats = std::move(sub.stats);
      }));
    }
    for (auto& f : running) f.get();

    Solution best = Solution::infeasible();
    bool aborted = false;
    for (auto& p : parts) {
      stats += p.stats;
      aborted = aborted || p.aborted;
      if (better(p.solution, best)) best = std::move(p.solution);
    }
    if (aborted) throw Aborted{};
    return best;
  }

  const SolverOptions& opts_;
  Incumbent& incumbent_;
};

}  // namespace detail

/// Minimum independent set inside the free vertices of `inst` that dominates
/// every alive vertex, together with the already chosen vertices. Infeasible
/// is an ordinary answer. Among equally small solutions the one with the
/// lexicographically smallest id list wins, whatever the thread count.
///
/// When the deadline passes, `stats.aborted` is set and the best complete
/// solution seen so far (possibly none) is returned.
inline SolveResult solve(const Instance& inst, const SolverOptions& opts = {}) {
  detail::Incumbent incumbent;
  detail::Search search(opts, incumbent);
  SolveResult out;
  try {
    out.solution = search.run(inst, 0, std::nullopt);
  } catch (const detail::Aborted&) {
    search.stats.aborted = true;
    out.solution = incumbent.best;
  }
  out.stats = std::move(search.stats);
  return out;
}

/// Solves a whole graph (every vertex free), one connected component at a
/// time.
inline SolveResult solve_graph(const std::shared_ptr<const Graph>& g,
                               const SolverOptions& opts = {}) {
  const auto components = connected_components(*g, g->all());
  if (components.size() <= 1) return solve(Instance(g), opts);

  SolveResult out;
  out.solution.feasible = true;
  for (const auto& comp : components) {
    auto part = solve(Instance(g, comp, comp), opts);
    out.stats += part.stats;
    if (part.stats.aborted || !part.solution.feasible) {
      out.solution = Solution::infeasible();
      break;
    }
    out.solution.vertices.insert(out.solution.vertices.end(), part.solution.vertices.begin(),
                                 part.solution.vertices.end());
  }
  std::sort(out.solution.vertices.begin(), out.solution.vertices.end());
  return out;
}

inline SolveResult solve_graph(const Graph& g, const SolverOptions& opts = {}) {
  return solve_graph(std::make_shared<const Graph>(g), opts);
}

}  // namespace mids
