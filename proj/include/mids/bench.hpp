#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mids {

/// Worst-case exponent of the exact solver, O*(2^{0.424 n}).
inline constexpr double worst_case_exponent = 0.424;

struct BenchPoint {
  std::size_t n;
  double nodes;
};

/// Least-squares slope of log2(nodes) against n. Needs at least three
/// distinct n values and positive node counts.
inline double bench_fit(const std::vector<BenchPoint>& points) {
  std::set<std::size_t> distinct;
  for (const auto& p : points) {
    if (!(p.nodes > 0.0)) throw std::invalid_argument("node counts must be positive");
    distinct.insert(p.n);
  }
  if (distinct.size() < 3) throw std::invalid_argument("need at least three distinct n values");

  double sx = 0, sy = 0;
  for (const auto& p : points) {
    sx += static_cast<double>(p.n);
    sy += std::log2(p.nodes);
  }
  const double k = static_cast<double>(points.size());
  const double mx = sx / k, my = sy / k;
  double sxy = 0, sxx = 0;
  for (const auto& p : points) {
    const double dx = static_cast<double>(p.n) - mx;
    sxy += dx * (std::log2(p.nodes) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace mids
