#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mids/graph.hpp"

namespace mids {

/// G(n, p) with a portable sampler: std::mt19937_64 seeded with `seed`
/// (its output sequence is fixed by the C++ standard); pairs u < v are visited
/// in lexicographic order and the edge is kept when the top 53 bits of the
/// next draw, read as a fraction in [0, 1), fall below p.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

enum class Family { path, cycle, star, complete, triangles, complete_bipartite };

inline Family family_from_name(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  if (name == "triangles") return Family::triangles;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

/// Standard graphs. `size` is the vertex count, except for `triangles`
/// (number of disjoint triangles) and `complete_bipartite` (first side; the
/// second side is `size2`). `star n` has centre 0 and n-1 leaves.
inline Graph named(Family f, std::size_t size, std::size_t size2 = 0) {
  std::vector<Edge> e;
  switch (f) {
    case Family::path:
      for (vertex_id i = 1; i < size; ++i) e.emplace_back(i - 1, i);
      return Graph(size, e);
    case Family::cycle:
      if (size < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
      for (vertex_id i = 0; i < size; ++i) e.emplace_back(i, static_cast<vertex_id>((i + 1) % size));
      return Graph(size, e);
    case Family::star:
      if (size < 1) throw std::invalid_argument("star needs at least 1 vertex");
      for (vertex_id i = 1; i < size; ++i) e.emplace_back(0, i);
      return Graph(size, e);
    case Family::complete:
      for (vertex_id i = 0; i < size; ++i)
        for (vertex_id j = i + 1; j < size; ++j) e.emplace_back(i, j);
      return Graph(size, e);
    case Family::triangles:
      for (vertex_id k = 0; k < size; ++k) {
        const vertex_id b = 3 * k;
        e.emplace_back(b, b + 1);
        e.emplace_back(b + 1, b + 2);
        e.emplace_back(b, b + 2);
      }
      return Graph(3 * size, e);
    case Family::complete_bipartite:
      for (vertex_id i = 0; i < size; ++i)
        for (vertex_id j = 0; j < size2; ++j) e.emplace_back(i, static_cast<vertex_id>(size + j));
      return Graph(size + size2, e);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace mids
