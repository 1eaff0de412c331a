#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mids {

/// Branching vector T(p) <= sum_i T(p - k_i).
struct RecurrenceSpec {
  std::vector<double> decrements;
};

/// sum_i x^{-k_i}
inline double characteristic_sum(const RecurrenceSpec& spec, double x) {
  double s = 0.0;
  for (double k : spec.decrements) s += std::pow(x, -k);
  return s;
}

/// Largest real root of 1 = sum_i x^{-k_i}, found by bisection to 1e-12.
/// The sum is strictly decreasing for x > 0, so the root is unique and at
/// least 1; a single branch gives exactly 1.
inline double branching_factor(const RecurrenceSpec& spec) {
  const auto& ks = spec.decrements;
  if (ks.empty()) throw std::invalid_argument("branching vector is empty");
  for (double k : ks)
    if (!(k > 0.0)) throw std::invalid_argument("branching decrements must be positive");
  if (ks.size() == 1) return 1.0;

  // At x = p^{1/min k} every term is at most 1/p.
  const double kmin = *std::min_element(ks.begin(), ks.end());
  double lo = 1.0;
  double hi = std::pow(static_cast<double>(ks.size()), 1.0 / kmin) + 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (characteristic_sum(spec, mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline double branching_factor(std::initializer_list<double> ks) {
  return branching_factor(RecurrenceSpec{std::vector<double>(ks)});
}

/// A composed branching: each child edge carries the measure drop of that
/// step, and a leaf's total drop is the sum along its root path.
struct BranchTree {
  double decrement = 0.0;  // edge from the parent; ignored at the root
  std::vector<BranchTree> children;

  static BranchTree leaf(double d) { return {d, {}}; }
  static BranchTree node(double d, std::vector<BranchTree> kids) { return {d, std::move(kids)}; }

  /// Root whose children are plain leaves.
  static BranchTree flat(const std::vector<double>& leaves) {
    BranchTree t;
    for (double d : leaves) t.children.push_back(leaf(d));
    return t;
  }

  std::vector<double> leaf_decrements() const {
    std::vector<double> out;
    collect(0.0, out, true);
    return out;
  }

 private:
  void collect(double acc, std::vector<double>& out, bool root) const {
    const double here = root ? acc : acc + decrement;
    if (children.empty()) {
      out.push_back(here);
      return;
    }
    for (const auto& c : children) c.collect(here, out, false);
  }
};

/// Factor of the flattened composed branching. A tree that is a bare root
/// is rejected, as are non-positive edge drops.
inline double compose_and_factor(const BranchTree& tree) {
  if (tree.children.empty()) throw std::invalid_argument("branch tree has no branches");
  auto check = [](const BranchTree& t, auto& self) -> void {
    for (const auto& c : t.children) {
      if (!(c.decrement > 0.0)) throw std::invalid_argument("branch tree edge drop must be positive");
      self(c, self);
    }
  };
  check(tree, check);
  return branching_factor(RecurrenceSpec{tree.leaf_decrements()});
}

}  // namespace mids
