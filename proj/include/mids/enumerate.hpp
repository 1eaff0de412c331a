#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "mids/graph.hpp"

namespace mids {

/// Return false from the callback to stop the enumeration.
using MisVisitor = std::function<bool(const VertexSet&)>;

struct EnumerationStats {
  std::size_t nodes = 0;
  std::size_t emitted = 0;
  bool stopped = false;
};

namespace detail {

// State of the bounded enumeration. `open` holds undominated vertices,
// `banned` the open vertices excluded by an earlier sibling branch.
class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, const MisVisitor& visit, EnumerationStats& stats)
      : g_(g), visit_(visit), stats_(stats) {}

  // Returns false once the visitor asked to stop.
  bool run(const VertexSet& open, const VertexSet& banned, VertexSet& picked,
           std::size_t budget) {
    ++stats_.nodes;
    if (open.empty()) {
      ++stats_.emitted;
      if (!visit_(picked)) {
        stats_.stopped = true;
        return false;
      }
      return true;
    }
    if (budget == 0) return true;

    // The open vertex with the fewest eligible dominators; a banned vertex
    // with none cannot be dominated any more.
    const VertexSet eligible = open - banned;
    vertex_id pivot = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    for (auto v : open) {
      std::size_t c = g_.neighbors(v).intersection_size(eligible) + (eligible.contains(v) ? 1 : 0);
      if (c == 0) return true;
      if (c < best) best = c, pivot = v;
    }

    VertexSet choices = g_.neighbors(pivot) & eligible;
    if (eligible.contains(pivot)) choices.insert(pivot);
    VertexSet now_banned = banned;
    for (auto u : choices) {
      VertexSet next_open = open - g_.neighbors(u);
      next_open.erase(u);
      picked.insert(u);
      const bool go_on = run(next_open, now_banned & next_open, picked, budget - 1);
      picked.erase(u);
      if (!go_on) return false;
      now_banned.insert(u);
    }
    return true;
  }

 private:
  const Graph& g_;
  const MisVisitor& visit_;
  EnumerationStats& stats_;
};

inline void sort_sets(std::vector<std::vector<vertex_id>>& sets) {
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace detail

/// Streams every maximal independent set of size at most `max_size`, each
/// exactly once, in no particular order.
inline EnumerationStats enumerate_bounded(const Graph& g, std::size_t max_size,
                                          const MisVisitor& visit) {
  EnumerationStats stats;
  VertexSet picked = g.none();
  detail::MisEnumerator(g, visit, stats).run(g.all(), g.none(), picked, max_size);
  return stats;
}

/// All maximal independent sets of size at most `max_size`, ordered by size
/// then lexicographically.
inline std::vector<std::vector<vertex_id>> enumerate_bounded(const Graph& g, std::size_t max_size,
                                                             EnumerationStats* stats = nullptr) {
  std::vector<std::vector<vertex_id>> out;
  auto s = enumerate_bounded(g, max_size, [&](const VertexSet& set) {
    out.push_back(set.to_vector());
    return true;
  });
  if (stats) *stats = s;
  detail::sort_sets(out);
  return out;
}

inline std::vector<std::vector<vertex_id>> enumerate_all(const Graph& g,
                                                         EnumerationStats* stats = nullptr) {
  return enumerate_bounded(g, g.n(), stats);
}

}  // namespace mids
