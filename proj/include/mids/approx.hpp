#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mids/enumerate.hpp"
#include "mids/graph.hpp"
#include "mids/instance.hpp"

namespace mids {

struct ApproxReport {
  Solution solution;
  /// Found by the bounded enumeration, hence a minimum solution.
  bool certified_optimal = false;
  double r_internal = 0.0;
  double ratio_bound = 0.0;
  std::size_t enumeration_nodes = 0;
  /// Partition blocks (partition algorithm only, 0 when phase one succeeded).
  std::size_t blocks = 0;
  std::size_t subsets_examined = 0;
};

/// Maximal independent set of the graph induced by V \ excluded: repeatedly
/// take a vertex of minimum remaining degree (lowest id on ties) and delete
/// its closed neighbourhood.
inline VertexSet greedy_ids(const Graph& g, const VertexSet& excluded) {
  VertexSet rest = g.all() - excluded;
  VertexSet picked = g.none();
  while (!rest.empty()) {
    vertex_id best = rest.first();
    std::size_t best_deg = g.degree(best, rest);
    for (auto v : rest) {
      const auto d = g.degree(v, rest);
      if (d < best_deg) best = v, best_deg = d;
    }
    picked.insert(best);
    rest -= g.neighbors(best);
    rest.erase(best);
  }
  return picked;
}

/// r - ((r - 1) / r) log2 r, the guarantee of the partition algorithm.
inline double ratio_of_r(double r) {
  if (!(r >= 3.0)) throw std::invalid_argument("r must be at least 3");
  return r - ((r - 1.0) / r) * std::log2(r);
}

/// Inverse of ratio_of_r by bisection on [3, 10 rho].
inline double r_of_ratio(double rho) {
  const double floor_ratio = ratio_of_r(3.0);
  if (!(rho >= floor_ratio))
    throw std::invalid_argument("ratio must be at least " + std::to_string(floor_ratio));
  double lo = 3.0, hi = 10.0 * rho;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ratio_of_r(mid) < rho)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Base c of the O*(c^n) running time for parameter r: r^{1/r}.
inline double time_base(double r) { return std::pow(r, 1.0 / r); }

namespace detail {

inline void check_r(double r) {
  if (!(r >= 3.0) || !std::isfinite(r)) throw std::invalid_argument("r must be a finite value >= 3");
}

// Smallest maximal independent set of size <= floor(n / r), if any.
inline bool bounded_optimum(const Graph& g, double r, ApproxReport& rep) {
  const auto budget = static_cast<std::size_t>(std::floor(static_cast<double>(g.n()) / r));
  Solution best = Solution::infeasible();
  auto stats = enumerate_bounded(g, budget, [&](const VertexSet& s) {
    auto cand = Solution::of(s);
    if (better(cand, best)) best = std::move(cand);
    return true;
  });
  rep.enumeration_nodes = stats.nodes;
  if (!best.feasible) return false;
  rep.solution = std::move(best);
  rep.certified_optimal = true;
  return true;
}

}  // namespace detail

/// r-approximation: the optimum when it has at most n/r vertices, any
/// maximal independent set otherwise.
inline ApproxReport approx_fixed_r(const Graph& g, double r) {
  detail::check_r(r);
  ApproxReport rep;
  rep.r_internal = r;
  rep.ratio_bound = r;
  if (detail::bounded_optimum(g, r, rep)) return rep;
  rep.solution = Solution::of(greedy_ids(g, g.none()));
  return rep;
}

/// Improves the fallback by splitting V into ceil(r / log2 r) contiguous
/// blocks and completing every independent subset H of each block with a
/// greedy maximal independent set of G - N[H].
inline ApproxReport approx_partition(const Graph& g, double r) {
  detail::check_r(r);
  ApproxReport rep;
  rep.r_internal = r;
  rep.ratio_bound = ratio_of_r(r);
  if (detail::bounded_optimum(g, r, rep)) return rep;

  const std::size_t n = g.n();
  const auto l = static_cast<std::size_t>(std::ceil(r / std::log2(r)));
  rep.blocks = l;

  VertexSet best = greedy_ids(g, g.none());
  std::size_t start = 0;
  for (std::size_t j = 0; j < l; ++j) {
    const std::size_t len = n / l + (j < n % l ? 1 : 0);
    if (len >= 64) throw std::length_error("partition block too large to enumerate");
    std::vector<vertex_id> block(len);
    for (std::size_t i = 0; i < len; ++i) block[i] = static_cast<vertex_id>(start + i);
    start += len;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      ++rep.subsets_examined;
      VertexSet h = g.none();
      bool independent = true;
      for (std::size_t i = 0; i < len && independent; ++i) {
        if (!((mask >> i) & 1U)) continue;
        if (g.neighbors(block[i]).intersects(h)) independent = false;
        h.insert(block[i]);
      }
      if (!independent) continue;
      VertexSet cand = greedy_ids(g, closed_neighborhood(g, h)) | h;
      if (cand.size() < best.size()) best = std::move(cand);
    }
  }
  rep.solution = Solution::of(best);
  return rep;
}

}  // namespace mids
