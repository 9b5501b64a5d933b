#include "flood_tools/cli.hpp"

#include <chrono>
#include <csignal>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flood/errors.hpp"
#include "flood/instances.hpp"
#include "flood/intervaldp.hpp"
#include "flood/reductions.hpp"
#include "flood_tools/engine.hpp"
#include "flood_tools/service.hpp"
#include "json_io.hpp"

namespace flood::tools {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct BudgetArgs {
  long long max_states = SearchBudget{}.max_states;
  int max_depth = SearchBudget{}.max_depth;
  double time_limit = 120;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--budget,--max-states", max_states, "State budget for exhaustive search")->check(CLI::PositiveNumber);
    cmd->add_option("--max-depth", max_depth, "Depth budget for exhaustive search")->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit", time_limit, "Seconds before exhaustive search gives up")->check(CLI::PositiveNumber);
  }
  SearchBudget budget() const {
    SearchBudget b;
    b.max_states = max_states;
    b.max_depth = max_depth;
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
    b.validate();
    return b;
  }
};

int solve_command(const std::string& file, const std::string& engine_name, const SearchBudget& budget,
                  bool as_json, std::ostream& out, std::ostream& err) {
  InstanceDocument doc = parse_instance(read_file(file));
  EngineResult r = run_engine(doc.graph(), doc.variant, parse_engine(engine_name), budget);
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  if (as_json) {
    json j;
    j["opt"] = r.solution.opt;
    j["engine"] = r.engine;
    j["witness"] = moves_json(r.solution.witness);
    out << j.dump(2) << "\n";
  } else {
    out << "opt " << r.solution.opt << "\n";
    out << "engine " << r.engine << "\n";
    out << "witness " << moves_json(r.solution.witness).dump() << "\n";
  }
  return exit_ok;
}

int verify_command(const std::string& file, const std::string& moves_file, std::ostream& out) {
  InstanceDocument doc = parse_instance(read_file(file));
  json mj;
  std::string text = read_file(moves_file);
  try {
    mj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("moves", e.what());
  }
  if (mj.is_object() && mj.contains("witness")) mj = mj["witness"];
  std::vector<Move> moves = parse_moves(mj);
  VerifyResult r = verify_solution(doc.graph(), doc.variant, moves);
  if (r.valid) {
    out << "valid length " << r.length << " final_color " << r.final_color.value_or(0) << "\n";
    return exit_ok;
  }
  out << "invalid at move " << r.first_violation.value_or(0) << ": " << r.reason << "\n";
  return exit_invalid;
}

int reduce_command(const std::string& kind, const std::string& file, std::ostream& out) {
  VcInstance vc = parse_vc(read_file(file));
  InstanceDocument doc;
  if (kind == "vc-caterpillar") {
    auto red = vc_to_caterpillar(vc);
    doc = to_document(red.instance);
    doc.meta = certificate_json(vc, red.certificate, kind);
  } else {
    auto red = vc_to_proper_interval(vc);
    doc = to_document(red.instance);
    doc.meta = certificate_json(vc, red.certificate, kind);
  }
  out << emit_instance(doc);
  return exit_ok;
}

struct BenchRow {
  std::string instance;
  int n;
  int k;
  std::string engine;
  int opt;
  double ms;
};

BenchRow timed(const std::string& name, const ColoredGraph& g, Engine engine) {
  auto t0 = std::chrono::steady_clock::now();
  EngineResult r = run_engine(g, {}, engine);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!verify_solution(g, {}, r.solution.witness).valid) throw WitnessGap("witness failed verification on " + name, r.solution.opt);
  return {name, g.vertex_count(), g.k(), r.engine, r.solution.opt, ms};
}

std::vector<BenchRow> bench_suite(const std::string& suite) {
  std::vector<BenchRow> rows;
  const bool all = suite == "all";
  if (all || suite == "gadget") {
    auto g = vc_to_caterpillar({2, {{0, 1}}}).instance;
    rows.push_back(timed("gadget", g, Engine::oracle));
    rows.push_back(timed("gadget", g, Engine::interval));
  }
  if (all || suite == "reductions") {
    const std::vector<std::pair<std::string, VcInstance>> sources = {
        {"P3", {3, {{0, 1}, {1, 2}}}},
        {"K3", {3, {{0, 1}, {1, 2}, {0, 2}}}},
        {"P4", {4, {{0, 1}, {1, 2}, {2, 3}}}},
        {"K1,3", {4, {{0, 1}, {0, 2}, {0, 3}}}},
        {"C4", {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}}};
    for (const auto& [name, vc] : sources) {
      rows.push_back(timed("caterpillar(" + name + ")", vc_to_caterpillar(vc).instance, Engine::interval));
    }
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& [name, vc] = sources[i];
      rows.push_back(timed("proper_interval(" + name + ")", vc_to_proper_interval(vc).instance.graph(), Engine::interval));
    }
  }
  if (all || suite == "split") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto g = gen_random(GeneratorKind::split, 10, 4, seed).graph();
      rows.push_back(timed("split#" + std::to_string(seed), g, Engine::split));
      rows.push_back(timed("split#" + std::to_string(seed), g, Engine::oracle));
    }
  }
  if (all || suite == "scaling") {
    for (int n : {50, 100, 200}) {
      for (int k : {3, 5}) {
        if (k == 5 && n != 50) continue;
        auto g = gen_random(GeneratorKind::proper_interval, n, k, 1).graph();
        rows.push_back(timed("proper_interval n=" + std::to_string(n), g, Engine::interval));
      }
    }
  }
  if (rows.empty()) throw InputError("unknown suite '" + suite + "' (gadget, reductions, split, scaling, all)");
  return rows;
}

int bench_command(const std::string& suite, std::ostream& out) {
  auto rows = bench_suite(suite);
  out << std::left << std::setw(28) << "instance" << std::right << std::setw(6) << "n" << std::setw(5) << "k"
      << "  " << std::left << std::setw(9) << "engine" << std::right << std::setw(6) << "opt" << std::setw(12)
      << "time_ms" << "\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(28) << r.instance << std::right << std::setw(6) << r.n << std::setw(5) << r.k
        << "  " << std::left << std::setw(9) << r.engine << std::right << std::setw(6) << r.opt << std::setw(12)
        << std::fixed << std::setprecision(2) << r.ms << "\n";
  }
  return exit_ok;
}

HttpServer* active_server = nullptr;

extern "C" void on_signal(int) {
  if (active_server) active_server->stop();
}

int serve_command(const std::string& host, int port, const std::string& static_dir, std::ostream& err) {
  GameService service;
  HttpServer server(service, static_dir);
  int bound = server.bind(host, port);
  if (bound < 0) {
    err << "error: cannot bind " << host << ":" << port << "\n";
    return exit_input_error;
  }
  err << "listening on http://" << host << ":" << bound << "\n";
  active_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  active_server = nullptr;
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for the free and fixed flooding game", "flood"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file;
  std::string engine = "auto";
  bool as_json = false;
  BudgetArgs solve_budget;
  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("file", file, "Instance (.flood.json, - for stdin)")->required();
  solve->add_option("--engine", engine, "auto | oracle | interval | split")
      ->check(CLI::IsMember({"auto", "oracle", "interval", "split"}));
  solve->add_flag("--json", as_json, "Print one JSON object");
  solve_budget.add_to(solve);

  BudgetArgs oracle_budget;
  auto* oracle = app.add_subcommand("oracle", "Solve by exhaustive search");
  oracle->add_option("file", file, "Instance (.flood.json, - for stdin)")->required();
  oracle->add_flag("--json", as_json, "Print one JSON object");
  oracle_budget.add_to(oracle);

  std::string moves_file;
  auto* verify = app.add_subcommand("verify", "Replay a move sequence on an instance");
  verify->add_option("file", file, "Instance (.flood.json)")->required();
  verify->add_option("--moves", moves_file, "JSON array of {vertex, color}")->required();

  std::string reduction;
  auto* reduce = app.add_subcommand("reduce", "Build a flooding instance from a Vertex Cover instance");
  reduce->add_option("reduction", reduction, "vc-caterpillar | vc-interval")
      ->required()
      ->check(CLI::IsMember({"vc-caterpillar", "vc-interval"}));
  reduce->add_option("file", file, "Vertex Cover source {\"n\": .., \"edges\": [..]}")->required();

  std::string kind;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("kind", kind, "path | caterpillar | proper_interval | interval | split")->required();
  gen->add_option("--n", n, "Vertex count")->required();
  gen->add_option("--k", k, "Color count")->required();
  gen->add_option("--seed", seed, "PRNG seed");

  std::string suite = "all";
  auto* bench = app.add_subcommand("bench", "Run benchmark suites and print a table");
  bench->add_option("--suite", suite, "gadget | reductions | split | scaling | all");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "Start the game service");
  serve->add_option("--port", port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--static", static_dir, "Directory of web assets to serve at /")->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (*solve) return solve_command(file, engine, solve_budget.budget(), as_json, out, err);
    if (*oracle) return solve_command(file, "oracle", oracle_budget.budget(), as_json, out, err);
    if (*verify) return verify_command(file, moves_file, out);
    if (*reduce) return reduce_command(reduction, file, out);
    if (*gen) {
      out << emit_instance(gen_random(parse_generator_kind(kind), n, k, seed));
      return exit_ok;
    }
    if (*bench) return bench_command(suite, out);
    if (*serve) return serve_command(host, port, static_dir, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << " (best lower bound " << e.best_lower_bound() << ")\n";
    return exit_budget;
  } catch (const WitnessGap& e) {
    err << "error: " << e.what() << "\n";
    return exit_internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace flood::tools
