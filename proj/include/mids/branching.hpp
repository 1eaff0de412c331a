#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mids/instance.hpp"
#include "mids/reductions.hpp"

namespace mids {

/// Weight of a marked vertex with exactly three free neighbours.
inline constexpr double marked_degree3_weight = 0.2;

/// Instance weight: free vertices count 1, marked vertices count 0 / 0.2 / 1
/// for degree at most 2 / exactly 3 / at least 4.
inline double vertex_weight(const Instance& inst, vertex_id v) {
  if (inst.is_free(v)) return 1.0;
  const auto d = inst.free_degree(v);
  if (d <= 2) return 0.0;
  if (d == 3) return marked_degree3_weight;
  return 1.0;
}

inline double measure(const Instance& inst) {
  double p = 0.0;
  for (auto v : inst.alive()) p += vertex_weight(inst, v);
  return p;
}

/// Which case analysis produced a branching.
enum class Lemma : std::size_t {
  min_degree_general = 0,  // minimum degree >= 5, one branch per free vertex of N[v]
  marked_degree2,          // marked vertex with two free neighbours
  single_free_neighbor,    // free vertex with exactly one free neighbour
  marked_degree3,          // marked vertex with three free neighbours
  min_degree2,
  min_degree3,
  min_degree4,
};
inline constexpr std::size_t lemma_count = 7;

inline constexpr std::string_view lemma_tag(Lemma l) {
  constexpr std::array<std::string_view, lemma_count> tags{"L1", "L2", "L3", "L4",
                                                           "L5", "L6", "L7"};
  return tags[static_cast<std::size_t>(l)];
}

/// One branch: switch `mark` to marked, then commit every vertex of `take`.
struct Branch {
  std::vector<vertex_id> take;
  std::vector<vertex_id> mark;
  /// Smallest measure drop the case analysis guarantees for this branch.
  double promised = 0.0;
  /// The branch only pays off after a further branching on the marked vertices
  /// it creates, so `promised` is that intermediate drop.
  bool follow_up = false;

  friend bool operator==(const Branch&, const Branch&) = default;
};

struct BranchingPlan {
  Lemma source = Lemma::min_degree_general;
  /// Empty only when every branch was refuted, i.e. the instance has no solution.
  std::vector<Branch> branches;
};

inline Instance apply_branch(const Instance& inst, const Branch& b) {
  Instance child = inst;
  for (auto v : b.mark) child.mark(v);
  for (auto v : b.take) child.take(v);
  return child;
}

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

// Applies the branch, then follows marked vertices left with a single free
// neighbour (that neighbour joins `take`) until none is left. A marked vertex
// left with no free neighbour refutes the branch.
inline std::optional<Branch> complete_branch(const Instance& inst, Branch b) {
  Instance child = inst;
  for (auto v : b.mark) child.mark(v);
  for (auto v : b.take) {
    if (!child.is_free(v)) return std::nullopt;
    child.take(v);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto x : child.marked()) {
      const auto fd = child.free_degree(x);
      if (fd == 0) return std::nullopt;
      if (fd == 1) {
        const vertex_id y = child.free_neighbors(x).first();
        child.take(y);
        b.take.push_back(y);
        changed = true;
        break;
      }
    }
  }
  return b;
}

class PlanBuilder {
 public:
  PlanBuilder(const Instance& inst, Lemma source) : inst_(inst) { plan_.source = source; }

  void add(std::vector<vertex_id> take, std::vector<vertex_id> mark, double promised,
           bool follow_up = false) {
    if (auto b = complete_branch(inst_, Branch{std::move(take), std::move(mark), promised,
                                               follow_up}))
      plan_.branches.push_back(std::move(*b));
  }

  // Branch i takes candidates[i] and marks every earlier candidate; extra[i]
  // (if present) are companions committed together with candidates[i].
  void sequential(const std::vector<vertex_id>& candidates, double promised,
                  const std::vector<std::vector<vertex_id>>& extra = {}) {
    std::vector<vertex_id> prefix;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::vector<vertex_id> take{candidates[i]};
      if (i < extra.size()) take.insert(take.end(), extra[i].begin(), extra[i].end());
      add(std::move(take), prefix, promised);
      prefix.push_back(candidates[i]);
    }
  }

  BranchingPlan finish() { return std::move(plan_); }

 private:
  const Instance& inst_;
  BranchingPlan plan_;
};

inline std::vector<vertex_id> by_degree(const Instance& inst, const VertexSet& s) {
  auto out = s.to_vector();
  std::stable_sort(out.begin(), out.end(), [&](vertex_id a, vertex_id b) {
    return inst.degree(a) < inst.degree(b);
  });
  return out;
}

// v first, then its free neighbours by increasing degree.
inline std::vector<vertex_id> dominator_order(const Instance& inst, vertex_id v) {
  std::vector<vertex_id> out{v};
  for (auto u : by_degree(inst, inst.neighbors(v) & inst.free())) out.push_back(u);
  return out;
}

// The unique element of s, which the caller knows to be a singleton.
inline vertex_id only(const VertexSet& s) {
  assert(s.size() == 1);
  return s.first();
}

inline BranchingPlan plan_marked_degree2(const Instance& inst, vertex_id v) {
  auto u = inst.neighbors(v).to_vector();
  std::stable_sort(u.begin(), u.end(), [&](vertex_id a, vertex_id b) {
    return inst.free_degree(a) < inst.free_degree(b);
  });
  PlanBuilder pb(inst, Lemma::marked_degree2);
  pb.sequential(u, 2.0);
  return pb.finish();
}

inline BranchingPlan plan_single_free_neighbor(const Instance& inst, vertex_id v) {
  const vertex_id u = only(inst.free_neighbors(v));
  PlanBuilder pb(inst, Lemma::single_free_neighbor);
  if (inst.degree(u) == 1) {
    // N[u] = {u, v} ⊆ N[v] and v's other neighbours are marked: v replaces u.
    pb.add({v}, {}, 2.0);
  } else {
    pb.sequential({v, u}, 2.0);
  }
  return pb.finish();
}

inline BranchingPlan plan_marked_degree3(const Instance& inst, vertex_id v) {
  const auto u = inst.neighbors(v).to_vector();
  PlanBuilder pb(inst, Lemma::marked_degree3);
  for (auto x : u) {
    if (inst.free_degree(x) == 2) {
      pb.add({x}, {}, 3.0 + marked_degree3_weight);
      pb.add({}, {x}, 1.0 + marked_degree3_weight, true);
      return pb.finish();
    }
  }
  pb.sequential(u, 3.0 + marked_degree3_weight);
  return pb.finish();
}

inline BranchingPlan plan_min_degree2(const Instance& inst, vertex_id v) {
  const auto order = dominator_order(inst, v);
  PlanBuilder pb(inst, Lemma::min_degree2);
  std::vector<std::vector<vertex_id>> extra;
  if (order.size() == 3) {
    const vertex_id u1 = order[1], u2 = order[2];
    if (inst.degree(u1) == 3 && inst.degree(u2) == 3 && inst.graph().adjacent(u1, u2)) {
      // N[v] ⊆ N[u1]: a solution holding v but not t swaps v for u1.
      VertexSet rest = inst.neighbors(u1);
      rest.erase(v);
      rest.erase(u2);
      const vertex_id t = only(rest);
      if (inst.is_free(t)) extra.push_back({t});
    }
  }
  pb.sequential(order, 3.0, extra);
  return pb.finish();
}

inline BranchingPlan plan_min_degree3(const Instance& inst, vertex_id v) {
  PlanBuilder pb(inst, Lemma::min_degree3);
  const VertexSet nv = inst.neighbors(v);
  if (!nv.is_subset_of(inst.free())) {
    pb.sequential(dominator_order(inst, v), 4.0);
    return pb.finish();
  }
  const auto u = by_degree(inst, nv);
  const Graph& g = inst.graph();
  if (inst.degree(u[0]) >= 4) {
    pb.sequential(dominator_order(inst, v), 4.0);
    return pb.finish();
  }

  std::size_t edges = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) edges += g.adjacent(u[i], u[j]);

  if (edges == 2) {
    // Hub adjacent to the two others. With degree 4 its last neighbour t
    // rides along with v: otherwise the hub dominates everything v does.
    for (std::size_t h = 0; h < 3; ++h) {
      const vertex_id a = u[(h + 1) % 3], b = u[(h + 2) % 3];
      if (!g.adjacent(u[h], a) || !g.adjacent(u[h], b)) continue;
      std::vector<std::vector<vertex_id>> extra;
      if (inst.degree(u[h]) == 4) {
        VertexSet rest = inst.neighbors(u[h]);
        for (auto x : {v, a, b}) rest.erase(x);
        const vertex_id t = only(rest);
        if (inst.is_free(t)) extra.push_back({t});
      }
      pb.sequential(dominator_order(inst, v), 4.0, extra);
      return pb.finish();
    }
  }

  if (edges == 1) {
    for (std::size_t c = 0; c < 3; ++c) {
      const vertex_id a = u[(c + 1) % 3], b = u[(c + 2) % 3], w = u[c];
      if (!g.adjacent(a, b) || inst.degree(a) != 3 || inst.degree(b) != 3) continue;
      // Triangle v, a, b of degree-3 vertices; ta, tb their outside neighbours.
      VertexSet ra = inst.neighbors(a), rb = inst.neighbors(b);
      ra.erase(v), ra.erase(b), rb.erase(v), rb.erase(a);
      const vertex_id ta = only(ra), tb = only(rb);
      const std::vector<vertex_id> order{v, std::min(a, b), std::max(a, b), w};
      const bool spread = ta != tb && ta != w && tb != w && !g.adjacent(ta, tb) &&
                          !g.adjacent(ta, w) && !g.adjacent(tb, w) && inst.is_free(ta) &&
                          inst.is_free(tb);
      if (spread) {
        VertexSet outer = inst.neighbors(ta) | inst.neighbors(tb) | inst.neighbors(w);
        for (auto x : {v, a, b, w, ta, tb}) outer.erase(x);
        if (outer.size() <= 3) {
          pb.add({w}, {}, 4.0);
          pb.add({v}, {w}, 4.0);
          pb.add({}, {w, v}, 2.0 - marked_degree3_weight, true);
          return pb.finish();
        }
      }
      pb.sequential(order, 4.0);
      return pb.finish();
    }
  }

  pb.sequential(dominator_order(inst, v), 4.0);
  return pb.finish();
}

inline BranchingPlan plan_min_degree(const Instance& inst, vertex_id v, Lemma source) {
  PlanBuilder pb(inst, source);
  pb.sequential(dominator_order(inst, v), static_cast<double>(inst.degree(v) + 1));
  return pb.finish();
}

// Dispatch on an instance already at the reduction fixpoint.
inline BranchingPlan plan_for(const Instance& inst) {
  const VertexSet marked = inst.marked();
  for (auto v : marked)
    if (inst.degree(v) == 2) return plan_marked_degree2(inst, v);
  for (auto v : inst.free())
    if (inst.free_degree(v) == 1) return plan_single_free_neighbor(inst, v);
  for (auto v : marked)
    if (inst.degree(v) == 3) return plan_marked_degree3(inst, v);

  const auto v = min_degree_vertex(inst);
  if (!v) throw ContractViolation("no free vertex left to branch on");
  switch (inst.degree(*v)) {
    case 2:
      return plan_min_degree2(inst, *v);
    case 3:
      return plan_min_degree3(inst, *v);
    case 4:
      return plan_min_degree(inst, *v, Lemma::min_degree4);
    default:
      return plan_min_degree(inst, *v, Lemma::min_degree_general);
  }
}

}  // namespace detail

/// Picks the case that applies to `inst` and returns its branches. Every
/// solution of `inst` is either reachable through some branch or matched in
/// size by one that is.
///
/// Throws ContractViolation when a reduction rule still applies or nothing is
/// left to branch on.
inline BranchingPlan select_branching(const Instance& inst) {
  Instance probe = inst;
  if (probe.harvest_marked_edges() > 0)
    throw ContractViolation("select_branching called before marked edges were dropped");
  auto r = reduce(probe);
  if (r.infeasible || r.hits.total() > 0)
    throw ContractViolation("select_branching called on a reducible instance");
  if (inst.alive().empty()) throw ContractViolation("select_branching called on an empty instance");
  return detail::plan_for(inst);
}

}  // namespace mids
