#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mids/graph.hpp"

namespace mids {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

inline Graph build(std::size_t n, const std::vector<Edge>& edges, std::size_t line) {
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace detail

/// DIMACS edge format: `c` comments, one `p edge <n> <m>` line, then
/// `e <u> <v>` lines with 1-based ids. The edge count must match.
inline Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0, n = 0, m = 0;
  bool header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      if (header) throw ParseError(lineno, "second problem line");
      if (!(ss >> fmt >> n >> m) || (fmt != "edge" && fmt != "col"))
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      header = true;
    } else if (tag == "e") {
      if (!header) throw ParseError(lineno, "edge before problem line");
      long long u = 0, v = 0;
      if (!(ss >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
      edges.emplace_back(static_cast<vertex_id>(u - 1), static_cast<vertex_id>(v - 1));
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing problem line");
  if (edges.size() != m)
    throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return detail::build(n, edges, lineno);
}

/// Plain edge list: `<n> <m>` then m lines `<u> <v>` with 0-based ids.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0, n = 0, m = 0;
  bool header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::blank(line)) continue;
    std::istringstream ss(line);
    if (!header) {
      if (!(ss >> n >> m)) throw ParseError(lineno, "expected '<n> <m>'");
      header = true;
      continue;
    }
    long long u = 0, v = 0;
    if (!(ss >> u >> v)) throw ParseError(lineno, "expected '<u> <v>'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(n));
    edges.emplace_back(static_cast<vertex_id>(u), static_cast<vertex_id>(v));
  }
  if (!header) throw ParseError(lineno, "empty input");
  if (edges.size() != m)
    throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return detail::build(n, edges, lineno);
}

/// DIMACS when the first meaningful line is a `c` or `p` line, edge list
/// otherwise.
inline Graph read_graph(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  std::string line;
  bool dimacs = false;
  while (std::getline(buf, line)) {
    if (detail::blank(line)) continue;
    const auto c = line[line.find_first_not_of(" \t")];
    dimacs = c == 'c' || c == 'p';
    break;
  }
  buf.clear();
  buf.seekg(0);
  return dimacs ? read_dimacs(buf) : read_edge_list(buf);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

inline void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = {}) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace mids
