#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mids.hpp"

namespace mids::cli {

using json = nlohmann::ordered_json;

/// Process exit codes. An infeasible instance is a normal answer (ok).
enum ExitCode : int {
  ok = 0,
  usage = 1,
  bad_input = 2,
  timeout = 3,
  internal_error = 4,
};

struct LoadedGraph {
  std::shared_ptr<const Graph> graph;
  std::string source;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

inline std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  const auto v = std::stoll(s, &pos);
  if (pos != s.size() || v < 0) throw std::invalid_argument("not a non-negative integer: " + s);
  return static_cast<std::size_t>(v);
}

inline double to_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

/// Generator spec: `<family>/<size>[/<size2>]` or `gnp/<n>/<p>[/<seed>]`.
/// A missing gnp seed falls back to `default_seed`.
inline Graph graph_from_spec(const std::string& spec, std::uint64_t default_seed = 0) {
  const auto parts = split(spec, '/');
  if (parts.empty()) throw std::invalid_argument("empty generator spec");
  try {
    if (parts[0] == "gnp") {
      if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("expected gnp/<n>/<p>[/<seed>]");
      const std::uint64_t seed = parts.size() == 4 ? to_size(parts[3]) : default_seed;
      return gnp(to_size(parts[1]), to_double(parts[2]), seed);
    }
    const Family f = family_from_name(parts[0]);
    if (f == Family::complete_bipartite) {
      if (parts.size() != 3) throw std::invalid_argument("expected complete_bipartite/<a>/<b>");
      return named(f, to_size(parts[1]), to_size(parts[2]));
    }
    if (parts.size() != 2) throw std::invalid_argument("expected " + parts[0] + "/<size>");
    return named(f, to_size(parts[1]));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("number out of range in generator spec " + spec);
  }
}

inline std::vector<double> parse_decrements(const std::string& list) {
  std::vector<double> out;
  for (const auto& p : split(list, ',')) out.push_back(to_double(p));
  return out;
}

inline json stats_json(const BranchStats& s) {
  json lemma_counts = json::object(), lemma_plans = json::object();
  for (std::size_t i = 0; i < lemma_count; ++i) {
    const auto tag = std::string(lemma_tag(static_cast<Lemma>(i)));
    lemma_counts[tag] = s.lemmas[i].branches;
    lemma_plans[tag] = s.lemmas[i].plans;
  }
  json rules = json::object();
  for (std::size_t i = 0; i < rule_count; ++i)
    rules[std::string(rule_name(static_cast<Rule>(i)))] = s.rule_hits.counts[i];
  return json{{"nodes", s.nodes},
              {"max_depth", s.max_depth},
              {"lemma_counts", lemma_counts},
              {"lemma_plans", lemma_plans},
              {"rule_counts", rules},
              {"decrement_violations", s.decrement_violations},
              {"aborted", s.aborted}};
}

inline json result_json(const Solution& s) {
  json r{{"feasible", s.feasible}};
  r["size"] = s.feasible ? json(s.size()) : json(nullptr);
  r["vertices"] = s.vertices;
  return r;
}

inline json instance_json(const LoadedGraph& in) {
  return json{{"n", in.graph->n()}, {"m", in.graph->m()}, {"source", in.source}};
}

/// Report for an exact solve. `marked` lists the vertices barred from the
/// solution (they still need domination).
inline json solve_report(const LoadedGraph& in, const std::vector<vertex_id>& marked,
                         const SolveResult& res) {
  json params{{"marked", marked}};
  return json{{"instance", instance_json(in)},
              {"algorithm", "branch_and_reduce"},
              {"result", result_json(res.solution)},
              {"stats", stats_json(res.stats)},
              {"params", params}};
}

inline json approx_report(const LoadedGraph& in, const std::string& algorithm,
                          const ApproxReport& rep, std::optional<double> target_ratio) {
  json result = result_json(rep.solution);
  result["certified_optimal"] = rep.certified_optimal;
  json params{{"r_internal", rep.r_internal}, {"ratio_bound", rep.ratio_bound}};
  params["target_ratio"] = target_ratio ? json(*target_ratio) : json(nullptr);
  params["time_base"] = time_base(rep.r_internal);
  return json{{"instance", instance_json(in)},
              {"algorithm", algorithm},
              {"result", result},
              {"stats",
               {{"nodes", rep.enumeration_nodes},
                {"blocks", rep.blocks},
                {"subsets_examined", rep.subsets_examined}}},
              {"params", params}};
}

struct BenchRow {
  std::size_t n;
  std::uint64_t seed;
  std::size_t nodes;
  std::size_t size;
};

inline json bench_report(double p, const std::vector<BenchRow>& rows) {
  std::vector<BenchPoint> pts;
  json runs = json::array();
  double worst_margin = -1e300;
  for (const auto& r : rows) {
    pts.push_back({r.n, static_cast<double>(r.nodes)});
    const double margin = std::log2(static_cast<double>(r.nodes)) - worst_case_exponent * r.n;
    worst_margin = std::max(worst_margin, margin);
    runs.push_back({{"n", r.n}, {"seed", r.seed}, {"nodes", r.nodes}, {"size", r.size}});
  }
  json out{{"algorithm", "branch_and_reduce"}, {"params", {{"p", p}}}, {"runs", runs}};
  out["fit"] = {{"slope", bench_fit(pts)},
                {"reference_exponent", worst_case_exponent},
                {"max_log2_nodes_minus_reference", worst_margin},
                {"note", "reference is a worst-case bound over all graphs, not an expectation for "
                         "random instances"}};
  return out;
}

namespace detail {

inline LoadedGraph load(const std::string& input, const std::string& gen, std::uint64_t seed) {
  if (!input.empty() && !gen.empty()) throw std::invalid_argument("use either --input or --gen");
  if (!input.empty()) {
    try {
      return {std::make_shared<const Graph>(read_graph_file(input)), input};
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  if (gen.empty()) throw std::invalid_argument("one of --input or --gen is required");
  return {std::make_shared<const Graph>(graph_from_spec(gen, seed)), "gen:" + gen};
}

inline VertexSet free_set(const Graph& g, const std::vector<vertex_id>& marked) {
  VertexSet free = g.all();
  for (auto v : marked) {
    if (v >= g.n()) throw std::invalid_argument("marked vertex " + std::to_string(v) + " out of range");
    free.erase(v);
  }
  return free;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum independent dominating set toolkit"};
  app.require_subcommand(1);

  std::string input, gen, output, algorithm, n_values = "16,20,24,28", decrements_arg, marked_arg;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  long long timeout_ms = 0;
  std::optional<double> r_opt, target_ratio;
  std::optional<std::size_t> max_size;
  std::size_t seeds = 10;
  double p = 0.3;
  bool prop1 = false, prop2 = false, plain = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "DIMACS or edge-list file");
    sub->add_option("--gen", gen, "generator spec, e.g. cycle/5 or gnp/30/0.2/7");
    sub->add_option("--seed", seed, "seed for gnp specs without one");
  };

  auto* solve_cmd = app.add_subcommand("solve", "exact minimum independent dominating set");
  add_input(solve_cmd);
  solve_cmd->add_option("--marked", marked_arg, "comma-separated 0-based ids barred from the solution");
  solve_cmd->add_option("--threads", threads, "threads for the root branching")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--timeout-ms", timeout_ms, "abort after this many milliseconds");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference solver");
  add_input(oracle_cmd);
  oracle_cmd->add_option("--marked", marked_arg, "comma-separated 0-based ids barred from the solution");

  auto* approx_cmd = app.add_subcommand("approx", "moderately exponential approximation");
  add_input(approx_cmd);
  auto* f1 = approx_cmd->add_flag("--prop1", prop1, "enumeration + arbitrary maximal independent set");
  auto* f2 = approx_cmd->add_flag("--prop2", prop2, "enumeration + partition improvement");
  f1->excludes(f2);
  auto* r_flag = approx_cmd->add_option("--r", r_opt, "parameter r >= 3");
  auto* t_flag = approx_cmd->add_option("--target-ratio", target_ratio, "wanted ratio; r is derived");
  r_flag->excludes(t_flag);

  auto* enum_cmd = app.add_subcommand("enumerate", "list maximal independent sets");
  add_input(enum_cmd);
  enum_cmd->add_option("--max-size", max_size, "only sets with at most this many vertices");

  auto* factor_cmd = app.add_subcommand("factor", "branching factor of a decrement vector");
  factor_cmd->add_option("decrements", decrements_arg, "comma-separated decrements, e.g. 2,4")->required();
  factor_cmd->add_flag("--plain", plain, "print '<factor> <log2 factor>' instead of JSON");

  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as DIMACS");
  gen_cmd->add_option("spec", gen, "generator spec")->required();
  gen_cmd->add_option("--seed", seed, "seed for gnp specs without one");
  gen_cmd->add_option("--output", output, "file to write (standard output by default)");

  auto* bench_cmd = app.add_subcommand("bench", "node counts of the exact solver on G(n, p)");
  bench_cmd->add_option("--n-values", n_values, "comma-separated vertex counts");
  bench_cmd->add_option("--p", p, "edge probability");
  bench_cmd->add_option("--seeds", seeds, "seeds 0..seeds-1 per n");
  bench_cmd->add_option("--threads", threads, "instances solved in parallel")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*solve_cmd) {
      auto in = detail::load(input, gen, seed);
      std::vector<vertex_id> marked;
      if (!marked_arg.empty())
        for (const auto& s : split(marked_arg, ',')) marked.push_back(static_cast<vertex_id>(to_size(s)));
      const VertexSet free = detail::free_set(*in.graph, marked);
      SolverOptions opts;
      opts.threads = threads;
      if (timeout_ms > 0) opts.deadline = t0 + std::chrono::milliseconds(timeout_ms);
      const auto res = solve(Instance(in.graph, free), opts);
      if (res.solution.feasible) {
        const auto check = verify_solution(*in.graph, res.solution.vertices);
        bool inside = true;
        for (auto v : res.solution.vertices) inside = inside && free.contains(v);
        if (!check.ok() || !inside) {
          err << "error: solver produced an invalid certificate; refusing to report it\n";
          return internal_error;
        }
      }
      auto report = solve_report(in, marked, res);
      report["stats"]["wall_ms"] = detail::elapsed_ms(t0);
      out << report.dump(2) << '\n';
      return res.stats.aborted ? timeout : ok;
    }

    if (*oracle_cmd) {
      auto in = detail::load(input, gen, seed);
      std::vector<vertex_id> marked;
      if (!marked_arg.empty())
        for (const auto& s : split(marked_arg, ',')) marked.push_back(static_cast<vertex_id>(to_size(s)));
      const Instance inst(in.graph, detail::free_set(*in.graph, marked));
      if (inst.free().size() > 30) throw std::invalid_argument("oracle is limited to 30 free vertices");
      const auto sol = oracle_opt(inst);
      json report{{"instance", instance_json(in)},
                  {"algorithm", "oracle"},
                  {"result", result_json(sol)},
                  {"stats", {{"wall_ms", detail::elapsed_ms(t0)}}},
                  {"params", {{"marked", marked}}}};
      out << report.dump(2) << '\n';
      return ok;
    }

    if (*approx_cmd) {
      if (!r_opt && !target_ratio) throw std::invalid_argument("one of --r or --target-ratio is required");
      auto in = detail::load(input, gen, seed);
      const bool use_partition = prop2;
      double r = 0.0;
      if (r_opt)
        r = *r_opt;
      else
        r = use_partition ? r_of_ratio(*target_ratio) : *target_ratio;
      const auto rep = use_partition ? approx_partition(*in.graph, r) : approx_fixed_r(*in.graph, r);
      if (!verify_solution(*in.graph, rep.solution.vertices).ok()) {
        err << "error: approximation produced an invalid solution\n";
        return internal_error;
      }
      auto report = approx_report(in, use_partition ? "prop2" : "prop1", rep, target_ratio);
      report["stats"]["wall_ms"] = detail::elapsed_ms(t0);
      out << report.dump(2) << '\n';
      return ok;
    }

    if (*enum_cmd) {
      auto in = detail::load(input, gen, seed);
      const auto sets = enumerate_bounded(*in.graph, max_size.value_or(in.graph->n()));
      for (const auto& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
        out << '\n';
      }
      return ok;
    }

    if (*factor_cmd) {
      const auto ks = parse_decrements(decrements_arg);
      const double f = branching_factor(RecurrenceSpec{ks});
      if (plain) {
        out << std::fixed << std::setprecision(6) << f << ' ' << std::log2(f) << '\n';
      } else {
        out << json{{"decrements", ks}, {"factor", f}, {"log2_factor", std::log2(f)}}.dump(2) << '\n';
      }
      return ok;
    }

    if (*gen_cmd) {
      const Graph g = graph_from_spec(gen, seed);
      if (output.empty()) {
        write_dimacs(out, g, "generated by mids gen " + gen);
      } else {
        std::ofstream f(output);
        if (!f) throw InputError("cannot write " + output);
        write_dimacs(f, g, "generated by mids gen " + gen);
      }
      return ok;
    }

    if (*bench_cmd) {
      std::vector<std::pair<std::size_t, std::uint64_t>> jobs;
      for (const auto& s : split(n_values, ','))
        for (std::uint64_t sd = 0; sd < seeds; ++sd) jobs.emplace_back(to_size(s), sd);
      std::vector<BenchRow> rows(jobs.size());
      auto work = [&](std::size_t i) {
        const auto res = solve_graph(gnp(jobs[i].first, p, jobs[i].second));
        rows[i] = {jobs[i].first, jobs[i].second, res.stats.nodes, res.solution.size()};
      };
      std::vector<std::future<void>> pending;
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (threads <= 1) {
          work(i);
          continue;
        }
        if (pending.size() >= threads) {
          pending.front().get();
          pending.erase(pending.begin());
        }
        pending.push_back(std::async(std::launch::async, work, i));
      }
      for (auto& f : pending) f.get();
      auto report = bench_report(p, rows);
      report["wall_ms"] = detail::elapsed_ms(t0);
      out << report.dump(2) << '\n';
      return ok;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return internal_error;
  }
  return usage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mids"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mids::cli
