#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "mids/instance.hpp"

namespace mids {

/// Brute-force reference: tries every subset of the alive free vertices by
/// increasing size and returns the first (lexicographically smallest) one
/// that is independent and dominates every alive vertex, joined with the
/// already chosen vertices. Exponential in the number of free vertices.
inline Solution oracle_opt(const Instance& inst) {
  const Graph& g = inst.graph();
  const std::vector<vertex_id> cand = inst.free().to_vector();
  const VertexSet& target = inst.alive();
  const std::size_t f = cand.size();

  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= f; ++k) {
    idx.resize(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      bool independent = true;
      VertexSet covered = g.none();
      for (std::size_t i = 0; i < k && independent; ++i) {
        const vertex_id v = cand[idx[i]];
        for (std::size_t j = 0; j < i; ++j)
          if (g.adjacent(v, cand[idx[j]])) {
            independent = false;
            break;
          }
        covered |= g.neighbors(v);
        covered.insert(v);
      }
      if (independent && target.is_subset_of(covered)) {
        VertexSet s = inst.chosen();
        for (std::size_t i = 0; i < k; ++i) s.insert(cand[idx[i]]);
        return Solution::of(s);
      }
      // next k-combination of 0..f-1
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == f - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return Solution::infeasible();
}

}  // namespace mids
