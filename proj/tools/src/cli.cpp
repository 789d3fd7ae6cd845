#include "chase_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "chase/cstar.hpp"
#include "chase/errors.hpp"
#include "chase/gadget.hpp"
#include "chase/game_io.hpp"
#include "chase/protocol.hpp"
#include "chase/reduction.hpp"
#include "chase/streaming.hpp"
#include "chase/verify.hpp"

namespace chase::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t passes = 0;
  double density = 0;
  double trials = 1.0;
  std::string kind = "orlpce";
  std::string gadget;
  std::string alg;
  std::string input;
  std::string output;
  std::string report;
  std::string dump;
  std::string suite = "all";
  bool identity = false;
  bool allow_infeasible = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

/// Empty path or "-" means `fallback`.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write '" + path + "'");
}

std::size_t default_r(std::size_t n) { return n >= 2 ? c_star_threshold(n) : 2; }

double default_density(std::size_t n, double requested) {
  return requested > 0 ? requested : std::min(1.0, 1.5 / static_cast<double>(n));
}

template <class T>
T load_instance(const std::string& path, std::string_view wanted) {
  GameInstance game = parse_scgame(read_file(path));
  if (auto* inst = std::get_if<T>(&game)) return std::move(*inst);
  throw UsageError("'" + path + "' holds kind=" + std::string(game_kind(game)) + ", expected kind=" +
                   std::string(wanted));
}

int gen_game(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  const std::size_t r = o.r > 0 ? o.r : default_r(o.n);
  GameInstance game = [&]() -> GameInstance {
    if (o.kind == "pc") return sample_uniform_pc(o.n, o.p, rng);
    if (o.kind == "sc") return sample_random_sc(o.n, o.p, default_density(o.n, o.density), rng);
    if (o.kind == "lpce") return sample_uniform_lpce(o.n, o.p, r, rng);
    if (o.kind == "intersectsc") {
      return sample_random_intersect_sc(o.n, o.p, default_density(o.n, o.density), rng);
    }
    const std::size_t t = o.t > 0 ? o.t : choose_params(o.n, o.p, r).t;
    return sample_uniform_or_lpce(o.n, o.p, r, t, rng);
  }();
  emit(o.output, write_scgame(game), out);
  return kPass;
}

int gen_graph(const Options& o, std::ostream& out, bool seeded) {
  const IntersectScInstance inst = [&]() {
    if (!o.input.empty()) return load_instance<IntersectScInstance>(o.input, "intersectsc");
    if (o.k == 0 || o.p == 0) throw UsageError("gen-graph needs --input, or --k and --p");
    if (o.identity) return identity_intersect_sc(o.k, o.p + 1);
    if (!seeded) throw UsageError("a random gen-graph instance needs --seed");
    Rng rng(o.seed);
    return sample_random_intersect_sc(o.k, o.p + 1, default_density(o.k, o.density), rng);
  }();
  GraphStream g;
  if (o.gadget == "distance") {
    g = build_distance_gadget(inst);
  } else if (o.gadget == "reach") {
    g = build_reachability_gadget(inst);
  } else {
    g = build_matching_gadget(inst);
  }
  emit(o.output, serialize_stream(g), out);
  return kPass;
}

int reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const auto inst = load_instance<OrLpceInstance>(o.input, "orlpce");
  const ReductionParams params{inst.n(), inst.p(), inst.r(), inst.t()};
  if (!o.allow_infeasible) require_feasible(params);
  Rng rng(o.seed);
  const auto result = reduce_or_lpce(inst, rng, ReduceOptions{.require_feasible = !o.allow_infeasible});
  bool answer = ShortCircuit::answer;
  const bool short_circuited = std::holds_alternative<ShortCircuit>(result);
  if (const auto* reduced = std::get_if<IntersectScInstance>(&result)) {
    answer = eval_intersect_sc(*reduced);
    emit(o.output, write_scgame(*reduced), out);
  } else {
    err << "short-circuit: a table is " << params.r << "-non-injective; answer 1, no instance written\n";
  }
  if (!o.report.empty()) {
    std::ostringstream csv;
    csv << "short_circuited,n,p,r,t,feasible,bound,answer\n"
        << short_circuited << ',' << params.n << ',' << params.p << ',' << params.r << ',' << params.t << ','
        << is_feasible(params) << ',' << intersection_bound(params) << ',' << answer << '\n';
    emit(o.report, csv.str(), out);
  }
  return kPass;
}

int solve_protocol(const Options& o, std::ostream& out) {
  const auto inst = load_instance<IntersectScInstance>(o.input, "intersectsc");
  const ProtocolResult result =
      o.alg == "reverse" ? reverse_order_sc_protocol(inst) : forward_sc_protocol(inst);
  if (!o.dump.empty()) emit(o.dump, result.transcript.dump(), out);
  std::ostringstream csv;
  csv << "protocol,answer,rounds,total_bits\n"
      << o.alg << ',' << result.answer << ',' << result.transcript.rounds_used() << ','
      << result.transcript.total_bits() << '\n';
  emit(o.report, csv.str(), out);
  return kPass;
}

int stream_run(const Options& o, std::ostream& out) {
  const GraphStream g = parse_stream(read_file(o.input));
  const auto alg = make_algorithm(o.alg, metadata_of(g));
  const RunReport report = run_streaming(*alg, g, o.passes);
  std::ostringstream csv;
  csv << "answer,passes_used,max_state_bits\n";
  if (report.answer) {
    csv << *report.answer;
  } else {
    csv << "undecided";
  }
  csv << ',' << report.passes_used << ',' << report.max_state_bits << '\n';
  emit(o.report, csv.str(), out);
  return kPass;
}

int verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  VerifyConfig config;
  config.seed = o.seed;
  config.trial_scale = o.trials;
  const auto rows = run_suite(*suite, config);
  emit(o.report, rows_to_csv(rows), out);
  if (all_pass(rows)) return kPass;
  for (const CheckRow& row : rows) {
    if (!row.pass) err << "FAIL " << row.suite << '/' << row.check << ": measured " << row.measured
                       << ", threshold " << row.threshold << '\n';
  }
  return kCheckFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set-chasing games, reductions, graph gadgets and streaming experiments"};
  app.name("chase");
  app.require_subcommand(1);
  Options o;

  const auto add_seed = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--seed", o.seed, "64-bit seed");
    if (required) opt->required();
    return opt;
  };
  const auto positive = CLI::PositiveNumber;

  auto* gen_game_cmd = app.add_subcommand("gen-game", "Sample a game instance in scgame v1 format");
  add_seed(gen_game_cmd, true);
  gen_game_cmd->add_option("--kind", o.kind, "pc, sc, lpce, orlpce or intersectsc")
      ->check(CLI::IsMember({"pc", "sc", "lpce", "orlpce", "intersectsc"}));
  gen_game_cmd->add_option("--n", o.n, "Domain size")->required()->check(positive);
  gen_game_cmd->add_option("--p", o.p, "Functions per chase")->required()->check(positive);
  gen_game_cmd->add_option("--r", o.r, "Non-injectivity threshold (default: c_star_threshold(n))")->check(positive);
  gen_game_cmd->add_option("--t", o.t, "OR width (default: chosen from n, p, r)")->check(positive);
  gen_game_cmd->add_option("--density", o.density, "Membership probability for set kinds")
      ->check(CLI::Range(0.0, 1.0));
  gen_game_cmd->add_option("--output", o.output, "Output path (default stdout)");

  auto* gen_graph_cmd = app.add_subcommand("gen-graph", "Build a gadget graph stream");
  auto* graph_seed = add_seed(gen_graph_cmd, false);
  gen_graph_cmd->add_option("--gadget", o.gadget, "distance, reach or matching")
      ->required()
      ->check(CLI::IsMember({"distance", "reach", "matching"}));
  gen_graph_cmd->add_option("--input", o.input, "intersectsc instance (otherwise generated)");
  gen_graph_cmd->add_option("--k", o.k, "Slots per column")->check(positive);
  gen_graph_cmd->add_option("--p", o.p, "Pass parameter; the instance has p+1 layers a side")->check(positive);
  gen_graph_cmd->add_option("--density", o.density, "Membership probability")->check(CLI::Range(0.0, 1.0));
  gen_graph_cmd->add_flag("--identity", o.identity, "Use the identity instance");
  gen_graph_cmd->add_option("--output", o.output, "Output path (default stdout)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an orlpce instance to intersectsc");
  add_seed(reduce_cmd, true);
  reduce_cmd->add_option("--input", o.input, "orlpce instance")->required();
  reduce_cmd->add_option("--output", o.output, "Reduced instance path (default stdout)");
  reduce_cmd->add_option("--report", o.report, "CSV summary path, '-' for stdout");
  reduce_cmd->add_flag("--allow-infeasible", o.allow_infeasible,
                       "Skip the t^{2p} r^{p-1} <= n/10 check (completeness only)");

  auto* solve_cmd = app.add_subcommand("solve-protocol", "Run a blackboard protocol on an intersectsc instance");
  solve_cmd->add_option("--input", o.input, "intersectsc instance")->required();
  solve_cmd->add_option("--alg", o.alg, "forward or reverse")
      ->default_val("forward")
      ->check(CLI::IsMember({"forward", "reverse"}));
  solve_cmd->add_option("--dump", o.dump, "Transcript path");
  solve_cmd->add_option("--report", o.report, "CSV path (default stdout)");

  auto* stream_cmd = app.add_subcommand("stream-run", "Run a streaming algorithm on a graph stream");
  stream_cmd->add_option("--alg", o.alg, "bidir-bfs, forward-bfs, union-find or directed-frontier")
      ->required()
      ->check(CLI::IsMember({"bidir-bfs", "forward-bfs", "union-find", "directed-frontier"}));
  stream_cmd->add_option("--passes", o.passes, "Pass budget")->required();
  stream_cmd->add_option("--input", o.input, "graphstream file")->required();
  stream_cmd->add_option("--report", o.report, "CSV path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  add_seed(verify_cmd, true);
  verify_cmd->add_option("--suite", o.suite, "info, reduction, gadgets, protocols, streaming or all")
      ->check(CLI::IsMember({"info", "reduction", "gadgets", "protocols", "streaming", "all"}));
  verify_cmd->add_option("--trials", o.trials, "Multiplier on every Monte Carlo trial count")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--report", o.report, "CSV path (default stdout)");

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (gen_game_cmd->parsed()) return gen_game(o, out);
    if (gen_graph_cmd->parsed()) return gen_graph(o, out, graph_seed->count() > 0);
    if (reduce_cmd->parsed()) return reduce(o, out, err);
    if (solve_cmd->parsed()) return solve_protocol(o, out);
    if (stream_cmd->parsed()) return stream_run(o, out);
    return verify(o, out, err);
  } catch (const InfeasibleParams& e) {
    err << "infeasible parameters: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace chase::cli
