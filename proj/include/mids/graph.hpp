#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mids/vertex_set.hpp"

namespace mids {

using Edge = std::pair<vertex_id, vertex_id>;

/// Simple undirected graph on the dense ids 0..n-1, stored as one adjacency
/// bitset per vertex. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  /// Throws std::invalid_argument on self-loops, out-of-range ids and
  /// repeated edges.
  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
      if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
      if (adj_[u].contains(v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
      adj_[u].insert(v);
      adj_[v].insert(u);
      ++m_;
    }
  }

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }

  const VertexSet& neighbors(vertex_id v) const noexcept { return adj_[v]; }
  bool adjacent(vertex_id u, vertex_id v) const noexcept { return adj_[u].contains(v); }
  std::size_t degree(vertex_id v) const noexcept { return adj_[v].size(); }
  /// Degree inside the subgraph induced by `mask` (d'_H).
  std::size_t degree(vertex_id v, const VertexSet& mask) const noexcept {
    return adj_[v].intersection_size(mask);
  }

  VertexSet all() const { return VertexSet(n(), true); }
  VertexSet none() const { return VertexSet(n()); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (vertex_id u = 0; u < n(); ++u)
      for (auto v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

 private:
  std::vector<VertexSet> adj_;
  std::size_t m_ = 0;
};

/// N[v], optionally restricted to an alive mask.
inline VertexSet closed_neighborhood(const Graph& g, vertex_id v) {
  assert(v < g.n());
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}
inline VertexSet closed_neighborhood(const Graph& g, vertex_id v, const VertexSet& alive) {
  return closed_neighborhood(g, v) & alive;
}

/// N[H] for a vertex set H.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& h) {
  VertexSet s = h;
  for (auto v : h) s |= g.neighbors(v);
  return s;
}

struct Verification {
  bool independent = false;
  bool dominating = false;
  bool ok() const noexcept { return independent && dominating; }
};

inline Verification verify_solution(const Graph& g, const VertexSet& s) {
  Verification r{true, true};
  VertexSet covered = s;
  for (auto v : s) {
    if (g.neighbors(v).intersects(s)) r.independent = false;
    covered |= g.neighbors(v);
  }
  r.dominating = covered.size() == g.n();
  return r;
}

inline Verification verify_solution(const Graph& g, const std::vector<vertex_id>& s) {
  VertexSet set(g.n());
  for (auto v : s) {
    if (v >= g.n()) return {false, false};
    set.insert(v);
  }
  return verify_solution(g, set);
}

/// Connected components restricted to `mask`, each listed in increasing id
/// order; components are ordered by their smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& mask) {
  std::vector<VertexSet> out;
  VertexSet unseen = mask;
  while (!unseen.empty()) {
    VertexSet comp(g.n());
    VertexSet frontier(g.n());
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.n());
      for (auto v : frontier) next |= g.neighbors(v);
      next &= mask;
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace mids
