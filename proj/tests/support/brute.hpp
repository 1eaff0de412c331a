#pragma once

// Test-only reference routines. None of them calls into the solver,
// enumeration or reduction code they are used to check.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "mids/generators.hpp"
#include "mids/graph.hpp"
#include "mids/instance.hpp"

namespace mids::testing {

inline bool independent_mask(const Graph& g, std::uint64_t mask) {
  for (vertex_id u = 0; u < g.n(); ++u)
    if ((mask >> u) & 1U)
      for (vertex_id v = u + 1; v < g.n(); ++v)
        if (((mask >> v) & 1U) && g.adjacent(u, v)) return false;
  return true;
}

inline bool maximal_mask(const Graph& g, std::uint64_t mask) {
  if (!independent_mask(g, mask)) return false;
  for (vertex_id v = 0; v < g.n(); ++v) {
    if ((mask >> v) & 1U) continue;
    bool blocked = false;
    for (vertex_id u = 0; u < g.n() && !blocked; ++u)
      blocked = ((mask >> u) & 1U) && g.adjacent(u, v);
    if (!blocked) return false;
  }
  return true;
}

inline std::vector<vertex_id> ids_of(std::uint64_t mask) {
  std::vector<vertex_id> out;
  for (vertex_id v = 0; v < 64; ++v)
    if ((mask >> v) & 1U) out.push_back(v);
  return out;
}

/// Every maximal independent set by scanning all 2^n subsets; sorted by
/// size, then lexicographically.
inline std::vector<std::vector<vertex_id>> brute_mis(const Graph& g) {
  std::vector<std::vector<vertex_id>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask)
    if (maximal_mask(g, mask)) out.push_back(ids_of(mask));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Random G(n, p) drawn with parameters chosen by the seed: n in [lo, hi],
/// p in {0.1, ..., 0.9}.
inline std::shared_ptr<const Graph> random_graph(std::uint64_t seed, std::size_t lo,
                                                 std::size_t hi) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  const std::size_t n = lo + rng() % (hi - lo + 1);
  const double p = 0.1 * static_cast<double>(1 + rng() % 9);
  return std::make_shared<const Graph>(gnp(n, p, seed));
}

/// Free set where each vertex is marked with probability `q`.
inline VertexSet random_free(const Graph& g, std::uint64_t seed, double q) {
  std::mt19937_64 rng(seed ^ 0xA5A5A5A5ULL);
  std::bernoulli_distribution coin(q);
  VertexSet free = g.all();
  for (vertex_id v = 0; v < g.n(); ++v)
    if (coin(rng)) free.erase(v);
  return free;
}

inline std::shared_ptr<const Graph> make(std::size_t n, std::vector<Edge> edges) {
  return std::make_shared<const Graph>(n, edges);
}

}  // namespace mids::testing
