#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mids/instance.hpp"

namespace mids {

enum class Rule : std::size_t {
  marked_edge = 0,     // R1: drop edges between two marked vertices
  equivalent_pair,     // R2: delete one of two vertices with equal N[.]
  isolated_free,       // R3: a free vertex without neighbours joins the solution
  marked_isolated,     // R4: a marked vertex with no free neighbour, no solution
  marked_pendant,      // R5: a marked vertex with one free neighbour forces it
  free_only_marked,    // R6: a free vertex whose neighbours are all marked joins
};
inline constexpr std::size_t rule_count = 6;

inline constexpr std::string_view rule_name(Rule r) {
  constexpr std::array<std::string_view, rule_count> names{
      "R1_marked_edge",     "R2_equivalent_pair", "R3_isolated_free",
      "R4_marked_isolated", "R5_marked_pendant",  "R6_free_only_marked"};
  return names[static_cast<std::size_t>(r)];
}

struct RuleHits {
  std::array<std::size_t, rule_count> counts{};

  std::size_t& operator[](Rule r) noexcept { return counts[static_cast<std::size_t>(r)]; }
  std::size_t operator[](Rule r) const noexcept { return counts[static_cast<std::size_t>(r)]; }
  std::size_t total() const noexcept {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  RuleHits& operator+=(const RuleHits& o) noexcept {
    for (std::size_t i = 0; i < rule_count; ++i) counts[i] += o.counts[i];
    return *this;
  }
};

struct ReductionOutcome {
  Instance inst;
  std::vector<vertex_id> forced;
  bool infeasible = false;
  RuleHits hits;
};

namespace detail {

// One rule application in the fixed order R1, R4, R5, R6, R3, R2. Returns
// false when nothing applies.
inline bool reduce_step(ReductionOutcome& out) {
  Instance& inst = out.inst;

  if (auto dropped = inst.harvest_marked_edges()) out.hits[Rule::marked_edge] += dropped;

  const VertexSet marked = inst.marked();
  for (auto v : marked) {
    if (inst.degree(v) == 0) {
      ++out.hits[Rule::marked_isolated];
      out.infeasible = true;
      return false;
    }
  }
  for (auto v : marked) {
    if (inst.degree(v) == 1) {
      const vertex_id u = inst.neighbors(v).first();
      inst.take(u);
      out.forced.push_back(u);
      ++out.hits[Rule::marked_pendant];
      return true;
    }
  }
  for (auto v : inst.free()) {
    if (inst.free_degree(v) == 0 && inst.degree(v) > 0) {
      inst.take(v);
      out.forced.push_back(v);
      ++out.hits[Rule::free_only_marked];
      return true;
    }
  }
  for (auto v : inst.free()) {
    if (inst.degree(v) == 0) {
      inst.take(v);
      out.forced.push_back(v);
      ++out.hits[Rule::isolated_free];
      return true;
    }
  }
  if (auto pair = find_equivalent_pair(inst)) {
    inst.remove(pair->drop);
    ++out.hits[Rule::equivalent_pair];
    return true;
  }
  return false;
}

}  // namespace detail

/// Applies the non-branching rules until none fires. Taking a vertex deletes
/// its closed neighbourhood, so forced vertices are pairwise non-adjacent.
inline ReductionOutcome reduce(Instance inst) {
  ReductionOutcome out{std::move(inst), {}, false, {}};
  while (detail::reduce_step(out)) {
  }
  return out;
}

}  // namespace mids
