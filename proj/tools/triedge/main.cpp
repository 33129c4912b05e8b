#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "triedge/bounds.hpp"
#include "triedge/graph6.hpp"
#include "triedge/search.hpp"
#include "triedge/serialize.hpp"
#include "triedge/simplex.hpp"

using namespace triedge;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kAssertion = 2, kUsage = 64, kBudget = 75 };

struct RunConfig {
  int n = 0;
  int e = -1;
  bool exact = false;
  std::string format = "json";
  int workers = 1;
  std::size_t cap = 100;
  bool trace = false;
  std::uint64_t seed = 0;
  int restarts = 20;
  double max_seconds = 0;
  std::string g6;
  std::optional<int> a, b, c;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions o;
  o.workers = cfg.workers;
  o.witness_cap = cfg.cap;
  if (cfg.max_seconds > 0)
    o.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.max_seconds));
  return o;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("--format " + cfg.format + " is not supported by this command");
}

void print_bounds_table(const std::vector<BoundsRecord>& rows) {
  std::printf("%4s %5s %12s %6s %4s %4s %4s %6s\n", "n", "e", "t", "g", "a", "b", "c", "Tr");
  for (const auto& r : rows) {
    std::printf("%4d %5d %12.6f %6d %4d %4d %4d ", r.n, r.e, r.t, r.g, r.g_params.a, r.g_params.b, r.g_params.c);
    if (r.tr_exact)
      std::printf("%6d\n", *r.tr_exact);
    else
      std::printf("%6s\n", "-");
  }
}

Graph read_g6_arg(const std::string& text) {
  if (text.empty()) throw UsageError("--g6 is required");
  return parse_graph6(text);
}

int cmd_bounds(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "table"});
  BoundsOptions o;
  o.exact = cfg.exact;
  o.search = search_options(cfg);
  const BoundsRecord r = bounds(cfg.n, cfg.e, o);
  if (cfg.format == "csv")
    std::cout << bounds_csv_header() << '\n' << to_csv_row(r) << '\n';
  else if (cfg.format == "table")
    print_bounds_table({r});
  else
    std::cout << to_json(r) << '\n';
  return kOk;
}

int cmd_sweep(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "table"});
  BoundsOptions o;
  o.exact = cfg.exact;
  o.search = search_options(cfg);
  const auto rows = sweep_bounds(cfg.n, o);
  if (cfg.format == "csv") {
    std::cout << bounds_csv_header() << '\n';
    for (const auto& r : rows) std::cout << to_csv_row(r) << '\n';
  } else if (cfg.format == "table") {
    print_bounds_table(rows);
  } else {
    std::cout << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) std::cout << (i ? "," : "") << to_json(rows[i]);
    std::cout << "]\n";
  }
  int status = kOk;
  for (const auto& r : rows)
    for (const auto& v : sandwich_violations(r)) {
      std::cerr << "sandwich violation " << v << '\n';
      status = kAssertion;
    }
  return status;
}

int cmd_brute(const RunConfig& cfg) {
  require_format(cfg, {"json", "table"});
  const SearchOptions o = search_options(cfg);
  SearchResult r;
  if (cfg.g6.empty()) {
    r = brute_tr(cfg.n, cfg.e, o);
  } else if (cfg.g6 == "-") {
    r = brute_tr_from_stream(cfg.n, cfg.e, std::cin, o);
  } else {
    std::ifstream in(cfg.g6);
    if (!in) throw UsageError("cannot open " + cfg.g6);
    r = brute_tr_from_stream(cfg.n, cfg.e, in, o);
  }
  if (cfg.format == "table") {
    std::printf("Tr(%d,%d) = %d\nminimizers: %llu\nnodes: %llu\n", r.n, r.e, r.tr_min,
                static_cast<unsigned long long>(r.minimizer_count), static_cast<unsigned long long>(r.nodes_explored));
    for (const auto& w : r.witnesses) std::printf("%s\n", w.c_str());
  } else {
    std::cout << to_json(r) << '\n';
  }
  return kOk;
}

int cmd_verify_efr(const RunConfig& cfg, bool json_requested) {
  const EfrCheck c = efr_check(cfg.n, search_options(cfg));
  if (json_requested) {
    std::cout << json{{"n", c.n}, {"e", c.e}, {"tr", c.tr}, {"expected", c.expected}, {"ok", c.ok()}}.dump() << '\n';
  } else if (c.ok()) {
    std::printf("OK Tr(%d,%d)=%d\n", c.n, c.e, c.tr);
  } else {
    std::printf("FAIL Tr(%d,%d)=%d expected %d\n", c.n, c.e, c.tr, c.expected);
  }
  return c.ok() ? kOk : kAssertion;
}

int cmd_conjecture(const RunConfig& cfg) {
  require_format(cfg, {"json", "table"});
  const ConjectureReport rep = check_family_conjecture_dense(cfg.n, search_options(cfg));
  if (cfg.format == "table") {
    std::printf("%5s %6s %6s %16s %10s\n", "e", "g", "Tr", "status", "minimizers");
    for (const auto& row : rep.rows) {
      std::printf("%5d %6d ", row.e, row.g);
      if (row.tr)
        std::printf("%6d ", *row.tr);
      else
        std::printf("%6s ", "-");
      std::printf("%16s %10llu\n", to_string(row.status).c_str(), static_cast<unsigned long long>(row.minimizers));
      for (const auto& v : row.violations) std::printf("      %s\n", v.c_str());
    }
  } else {
    std::cout << to_json(rep) << '\n';
  }
  return rep.ok() ? kOk : kAssertion;
}

int cmd_construct(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  ConstructionParams p;
  if (cfg.a || cfg.b || cfg.c) {
    if (!(cfg.a && cfg.b && cfg.c)) throw UsageError("--a, --b and --c must be given together");
    p = {*cfg.a, *cfg.b, *cfg.c};
    if (p.order() != cfg.n) throw UsageError("a + b + c must equal n");
  } else {
    p = g_of(cfg.n, cfg.e).params;
  }
  const Graph g = build_construction(p, cfg.e);
  std::cout << json{{"n", cfg.n},       {"e", cfg.e},           {"a", p.a},
                    {"b", p.b},         {"c", p.c},             {"tr", tr_count(g)},
                    {"graph6", to_graph6(g)}}
                   .dump()
            << '\n';
  return kOk;
}

int cmd_reduce(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const Graph g1 = read_g6_arg(cfg.g6);
  const Graph g2 = non_triangular_subgraph(g1);
  const WeightVector x = WeightVector::uniform(g1.order());
  Reduction r;
  try {
    r = reduce_triangular(g1, g2, x);
  } catch (const ReductionStalled& stalled) {
    if (cfg.trace) std::cerr << to_json_lines(stalled.trace());
    throw;
  }
  if (cfg.trace) std::cerr << to_json_lines(r.trace);
  const auto y = r.y.values();
  std::cout << json{{"graph6", to_graph6(g1)},
                    {"edge", {r.edge.u, r.edge.v}},
                    {"y", std::vector<double>(y.begin(), y.end())},
                    {"f1_before", quad_form(g1, x)},
                    {"f2_before", quad_form(g2, x)},
                    {"f1", quad_form(g1, r.y)},
                    {"f2", quad_form(g2, r.y)},
                    {"moves", r.trace.moves.size()}}
                   .dump()
            << '\n';
  return kOk;
}

int cmd_zykov(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const Graph g = read_g6_arg(cfg.g6);
  const Graph h = zykov_symmetrize(g);
  std::cout << json{{"input", to_graph6(g)},
                    {"output", to_graph6(h)},
                    {"edges_before", g.edge_count()},
                    {"edges_after", h.edge_count()},
                    {"omega_before", clique_number(g)},
                    {"omega_after", clique_number(h)},
                    {"complete_multipartite", is_complete_multipartite(h)}}
                   .dump()
            << '\n';
  return kOk;
}

int cmd_lagrangian(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const Graph g = read_g6_arg(cfg.g6);
  const LagrangianMax m = maximize_lagrangian(g, cfg.restarts, cfg.seed);
  const int omega = clique_number(g);
  std::vector<int> support;
  for_each_bit(m.y.support(), [&](int v) { support.push_back(v); });
  const auto y = m.y.values();
  std::cout << json{{"graph6", to_graph6(g)},
                    {"value", m.value},
                    {"omega", omega},
                    {"expected", (omega - 1.0) / (2.0 * omega)},
                    {"support", support},
                    {"support_is_clique", is_clique(g, m.y.support())},
                    {"y", std::vector<double>(y.begin(), y.end())}}
                   .dump()
            << '\n';
  return kOk;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const AssertionViolation& e) {
    std::cerr << "assertion violation: " << e.what() << '\n';
    return kAssertion;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const ReductionStalled& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Triangular edges: exact values, bounds and certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--format", cfg.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads")
      ->envname("TRIEDGE_WORKERS")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--cap", cfg.cap, "Witnesses kept per edge count, 0 for all")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--max-seconds", cfg.max_seconds, "Time budget for exhaustive search")
      ->check(CLI::NonNegativeNumber);

  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Number of vertices")->required()->check(CLI::Range(1, 64)); };
  auto e_opt = [&](CLI::App* sub) { sub->add_option("--e", cfg.e, "Number of edges")->required()->check(CLI::NonNegativeNumber); };

  auto* bounds_cmd = app.add_subcommand("bounds", "t(n,e), g(n,e) and optionally the exact Tr(n,e)");
  n_opt(bounds_cmd);
  e_opt(bounds_cmd);
  bounds_cmd->add_flag("--exact", cfg.exact, "Also compute Tr(n,e) by exhaustive search");

  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds for every e in (n^2/4, C(n,2)]");
  n_opt(sweep_cmd);
  sweep_cmd->add_flag("--exact", cfg.exact, "Add the exact Tr column");

  auto* brute_cmd = app.add_subcommand("brute", "Exact Tr(n,e) with minimizing witnesses");
  n_opt(brute_cmd);
  e_opt(brute_cmd);
  brute_cmd->add_option("--g6", cfg.g6, "Read candidate graphs from a graph6 file, '-' for stdin");

  auto* efr_cmd = app.add_subcommand("verify-efr", "Check Tr(n, floor(n^2/4)+1) = 2 floor(n/2) + 1");
  n_opt(efr_cmd);

  auto* conj_cmd = app.add_subcommand("conjecture", "Check every minimizer on the dense range lies in G(a,b,c)");
  n_opt(conj_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Build a member of G(a,b,c) with e edges");
  n_opt(construct_cmd);
  e_opt(construct_cmd);
  construct_cmd->add_option("--a", cfg.a, "Size of A");
  construct_cmd->add_option("--b", cfg.b, "Size of B");
  construct_cmd->add_option("--c", cfg.c, "Size of C");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce the uniform weighting to a single non-triangular edge");
  reduce_cmd->add_option("--g6", cfg.g6, "Input graph")->required();
  reduce_cmd->add_flag("--trace", cfg.trace, "Stream moves as JSON lines to stderr");

  auto* zykov_cmd = app.add_subcommand("zykov", "Zykov symmetrization");
  zykov_cmd->add_option("--g6", cfg.g6, "Input graph")->required();

  auto* lag_cmd = app.add_subcommand("lagrangian", "Maximize the graph Lagrangian from random starts");
  lag_cmd->add_option("--g6", cfg.g6, "Input graph")->required();
  lag_cmd->add_option("--restarts", cfg.restarts, "Random starts")->check(CLI::Range(1, 1000000))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  return guarded([&]() -> int {
    if (*bounds_cmd) return cmd_bounds(cfg);
    if (*sweep_cmd) return cmd_sweep(cfg);
    if (*brute_cmd) return cmd_brute(cfg);
    if (*efr_cmd) return cmd_verify_efr(cfg, app.get_option("--format")->count() > 0 && cfg.format == "json");
    if (*conj_cmd) return cmd_conjecture(cfg);
    if (*construct_cmd) return cmd_construct(cfg);
    if (*reduce_cmd) return cmd_reduce(cfg);
    if (*zykov_cmd) return cmd_zykov(cfg);
    if (*lag_cmd) return cmd_lagrangian(cfg);
    return kUsage;
  });
}
