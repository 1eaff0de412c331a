#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mids/graph.hpp"

namespace mids {

/// A generalised problem instance: find a minimum independent set inside the
/// free vertices that dominates every alive vertex.
///
/// Vertices are never renumbered. `alive` holds the vertices that still need
/// domination, `free` ⊆ `alive` the ones still eligible for the solution, and
/// `chosen` the vertices already committed. Alive vertices outside `free` are
/// marked. Edges between two marked vertices carry no information and are
/// treated as deleted by every neighbourhood query below.
class Instance {
 public:
  Instance() = default;

  explicit Instance(std::shared_ptr<const Graph> g)
      : Instance(g, g->all()) {}

  Instance(std::shared_ptr<const Graph> g, VertexSet free)
      : Instance(g, g->all(), std::move(free)) {}

  Instance(std::shared_ptr<const Graph> g, VertexSet alive, VertexSet free)
      : graph_(std::move(g)), alive_(std::move(alive)), free_(std::move(free)),
        chosen_(graph_->n()) {
    free_ &= alive_;
    const VertexSet marked = alive_ - free_;
    std::size_t twice = 0;
    for (auto v : marked) twice += graph_->neighbors(v).intersection_size(marked);
    pending_marked_edges_ = twice / 2;
  }

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
  std::size_t capacity() const noexcept { return graph_->n(); }

  const VertexSet& alive() const noexcept { return alive_; }
  const VertexSet& free() const noexcept { return free_; }
  const VertexSet& chosen() const noexcept { return chosen_; }
  VertexSet marked() const { return alive_ - free_; }

  bool is_alive(vertex_id v) const noexcept { return alive_.contains(v); }
  bool is_free(vertex_id v) const noexcept { return free_.contains(v); }
  bool is_marked(vertex_id v) const noexcept { return alive_.contains(v) && !free_.contains(v); }

  /// Alive neighbours of v, ignoring marked-marked edges.
  VertexSet neighbors(vertex_id v) const {
    VertexSet s = graph_->neighbors(v) & alive_;
    if (!free_.contains(v)) s &= free_;
    return s;
  }
  VertexSet closed_neighbors(vertex_id v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }
  VertexSet free_neighbors(vertex_id v) const { return graph_->neighbors(v) & free_; }

  std::size_t degree(vertex_id v) const noexcept {
    return free_.contains(v) ? graph_->neighbors(v).intersection_size(alive_)
                             : graph_->neighbors(v).intersection_size(free_);
  }
  std::size_t free_degree(vertex_id v) const noexcept {
    return graph_->neighbors(v).intersection_size(free_);
  }

  /// Commit v to the solution and delete N[v].
  void take(vertex_id v) {
    assert(free_.contains(v));
    assert(!graph_->neighbors(v).intersects(chosen_));
    chosen_.insert(v);
    VertexSet gone = graph_->neighbors(v);
    gone.insert(v);
    alive_ -= gone;
    free_ -= gone;
  }

  /// Switch v from free to marked.
  void mark(vertex_id v) {
    if (!free_.contains(v)) return;
    free_.erase(v);
    pending_marked_edges_ += graph_->neighbors(v).intersection_size(alive_ - free_);
  }

  /// Delete v without committing it (it is dominated through an equivalent twin).
  void remove(vertex_id v) {
    alive_.erase(v);
    free_.erase(v);
  }

  /// Marked-marked edges created since the last call. The edges themselves
  /// are already invisible to the neighbourhood queries; the count feeds the
  /// edge-removal rule's statistics.
  std::size_t harvest_marked_edges() noexcept { return std::exchange(pending_marked_edges_, 0); }

 private:
  std::shared_ptr<const Graph> graph_;
  VertexSet alive_;
  VertexSet free_;
  VertexSet chosen_;
  std::size_t pending_marked_edges_ = 0;
};

/// Either a certified vertex set or the explicit "no solution" outcome.
struct Solution {
  bool feasible = false;
  std::vector<vertex_id> vertices;

  std::size_t size() const noexcept { return vertices.size(); }

  static Solution infeasible() { return {}; }
  static Solution of(const VertexSet& s) { return {true, s.to_vector()}; }

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Strict preference: feasible beats infeasible, then smaller, then
/// lexicographically smaller sorted id list.
inline bool better(const Solution& a, const Solution& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (!a.feasible) return false;
  if (a.size() != b.size()) return a.size() < b.size();
  return a.vertices < b.vertices;
}

inline std::size_t free_degree(const Instance& inst, vertex_id v) { return inst.free_degree(v); }

struct EquivalentPair {
  vertex_id keep;
  vertex_id drop;
  friend bool operator==(const EquivalentPair&, const EquivalentPair&) = default;
};

/// First pair of alive vertices with identical closed neighbourhoods, scanning
/// ids upwards. A marked vertex is dropped in preference to a free one;
/// otherwise the higher id goes.
inline std::optional<EquivalentPair> find_equivalent_pair(const Instance& inst) {
  std::unordered_map<VertexSet, vertex_id, VertexSetHash> seen;
  for (auto v : inst.alive()) {
    auto [it, inserted] = seen.try_emplace(inst.closed_neighbors(v), v);
    if (inserted) continue;
    const vertex_id u = it->second;
    if (inst.is_marked(u) && !inst.is_marked(v)) return EquivalentPair{v, u};
    return EquivalentPair{u, v};
  }
  return std::nullopt;
}

/// Free vertex of minimum degree, preferring one that has a neighbour of
/// strictly larger degree; lowest id breaks ties.
inline std::optional<vertex_id> min_degree_vertex(const Instance& inst) {
  std::optional<std::size_t> delta;
  for (auto v : inst.free()) {
    const auto d = inst.degree(v);
    if (!delta || d < *delta) delta = d;
  }
  if (!delta) return std::nullopt;
  std::optional<vertex_id> fallback;
  for (auto v : inst.free()) {
    if (inst.degree(v) != *delta) continue;
    if (!fallback) fallback = v;
    for (auto u : inst.neighbors(v))
      if (inst.degree(u) >= *delta + 1) return v;
  }
  return fallback;
}

}  // namespace mids
