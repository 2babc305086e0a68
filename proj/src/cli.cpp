#include "plethys/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plethys/catalog.hpp"
#include "plethys/cycle_index.hpp"
#include "plethys/expr.hpp"
#include "plethys/graph.hpp"
#include "plethys/graph_io.hpp"
#include "plethys/kernel.hpp"
#include "plethys/verify.hpp"

namespace plethys::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

// Reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

std::string series_json(const MultiSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exps, c] : s.coeffs) {
    terms.push_back({{"exps", exps}, {"num", to_string(BigInt(c.get_num()))}, {"den", to_string(BigInt(c.get_den()))}});
  }
  return nlohmann::json{{"vars", s.vars}, {"maxdeg", s.maxdeg}, {"terms", terms}}.dump();
}

CycleIndex evaluate(const std::string& text, int degree) {
  try {
    return expr::eval(text, degree);
  } catch (const expr::ParseError& e) {
    throw InputError(std::string("parse error: ") + e.what());
  } catch (const expr::EvalError& e) {
    throw InputError(std::string("evaluation error: ") + e.what());
  }
}

struct EvalArgs {
  std::string expression;
  int degree = 8;
  bool egf = false;
  bool ogf = false;
  std::string format = "text";
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  CycleIndex f = evaluate(a.expression, a.degree);
  const bool json = a.format == "json";
  if (a.egf || a.ogf) {
    MultiSeries s = a.egf ? egf_series(f) : ogf_series(f);
    out << (json ? series_json(s) : s.to_text()) << '\n';
  } else {
    out << (json ? to_json(f) : to_text(f)) << '\n';
  }
  return exit_ok;
}

struct CountArgs {
  std::string target;
  bool labeled = false;
  bool unlabeled = false;
  int n_max = 6;
  std::optional<int> degree;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  const int degree = a.degree.value_or(std::max(a.n_max, 0));
  if (a.n_max < 0) throw InputError("--n-max must be nonnegative");
  if (a.n_max > degree) throw InputError("--n-max exceeds the truncation degree");
  CycleIndex f = evaluate(a.target, degree);
  catalog::CountTable table;
  try {
    table = catalog::counts(f, !a.unlabeled, a.n_max);
  } catch (const std::domain_error& e) {
    throw InputError(std::string("not a count series: ") + e.what());
  }
  for (const auto& [degs, c] : table.entries) {
    for (int d : degs) out << d << ' ';
    out << to_string(c) << '\n';
  }
  return exit_ok;
}

struct VerifyArgs {
  std::string suite = "all";
  verify::Options options;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<verify::Check> checks;
  try {
    checks = verify::run(a.suite, a.options);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  int failed = 0;
  for (const auto& c : checks) {
    out << verify::format(c) << '\n';
    if (!c.passed) ++failed;
  }
  out << checks.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  return failed == 0 ? exit_ok : exit_failure;
}

struct ReduceArgs {
  std::string path;
  std::string mode = "bipd";
  bool check = false;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  graphs::Graph g;
  try {
    g = graphs::parse_graph(read_input(a.path));
  } catch (const graphs::FormatError& e) {
    throw InputError(a.path + ": " + e.what());
  }
  graphs::KernelResult r;
  std::function<bool(const graphs::Graph&)> fiber_ok;
  std::function<bool(const graphs::Graph&)> kernel_ok;
  if (a.mode == "pd") {
    r = graphs::pd_kernel(g, graphs::SiblingMode::open);
    fiber_ok = [](const graphs::Graph& f) { return f.edge_count() == 0; };
    kernel_ok = [](const graphs::Graph& k) { return graphs::is_pd(k); };
  } else if (a.mode == "copd") {
    r = graphs::pd_kernel(g, graphs::SiblingMode::closed);
    fiber_ok = [](const graphs::Graph& f) { return f.edge_count() == f.size() * (f.size() - 1) / 2; };
    kernel_ok = [](const graphs::Graph& k) { return graphs::is_co_pd(k); };
  } else {
    r = graphs::bipd_kernel(g, a.seed);
    fiber_ok = [](const graphs::Graph& f) { return graphs::is_p4_free(f); };
    kernel_ok = [](const graphs::Graph& k) { return graphs::is_bipd(k); };
  }
  out << (a.format == "json" ? graphs::kernel_to_json(r) + "\n" : graphs::kernel_to_text(r));
  if (!a.check) return exit_ok;
  const bool round_trip = graphs::reconstruct(r) == g;
  const bool fibers = std::all_of(r.fiber_graphs.begin(), r.fiber_graphs.end(), fiber_ok);
  const bool kernel = kernel_ok(r.kernel);
  if (a.format != "json") {
    out << "check round trip: " << (round_trip ? "ok" : "FAILED") << '\n';
    out << "check fibers: " << (fibers ? "ok" : "FAILED") << '\n';
    out << "check kernel: " << (kernel ? "ok" : "FAILED") << '\n';
  }
  return round_trip && fibers && kernel ? exit_ok : exit_failure;
}

int cmd_edge_gf(int m, int n, const std::string& format, std::ostream& out) {
  if (m < 0 || n < 0) throw InputError("m and n must be nonnegative");
  if (m + n > 12) throw InputError("edge-gf supports m + n <= 12");
  std::vector<BigInt> b = catalog::edge_gf(m, n);
  if (format == "json") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : b) coeffs.push_back(to_string(c));
    out << nlohmann::json{{"m", m}, {"n", n}, {"coefficients", coeffs}}.dump() << '\n';
    return exit_ok;
  }
  for (std::size_t k = 0; k < b.size(); ++k) out << k << ' ' << to_string(b[k]) << '\n';
  return exit_ok;
}

struct CrosscheckArgs {
  std::string target;
  std::string path;
  bool labeled = false;
  bool unlabeled = false;
};

int cmd_crosscheck(const CrosscheckArgs& a, std::ostream& out) {
  std::map<int, BigInt> expected;
  std::istringstream lines(read_input(a.path));
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string n_text;
    std::string value_text;
    std::string extra;
    if (!(fields >> n_text)) continue;
    try {
      std::size_t used = 0;
      const int n = std::stoi(n_text, &used);
      if (used != n_text.size() || n < 0 || !(fields >> value_text) || (fields >> extra)) throw std::invalid_argument("");
      expected[n] = BigInt(value_text);
    } catch (const std::exception&) {
      throw InputError(a.path + ": line " + std::to_string(line_no) + ": expected 'n value'");
    }
  }
  if (expected.empty()) throw InputError(a.path + ": no terms");
  const int n_max = expected.rbegin()->first;
  CycleIndex f = evaluate(a.target, n_max);
  if (f.sorts() != 1) throw InputError("crosscheck needs a one-sort species");
  catalog::CountTable table;
  try {
    table = catalog::counts(f, !a.unlabeled, n_max);
  } catch (const std::domain_error& e) {
    throw InputError(std::string("not a count series: ") + e.what());
  }
  for (const auto& [n, v] : expected) {
    const BigInt got = table.at({n});
    if (got != v) {
      out << "mismatch at n = " << n << ": file has " << to_string(v) << ", computed " << to_string(got) << '\n';
      return exit_failure;
    }
  }
  out << "ok: " << expected.size() << " terms agree for n <= " << n_max << '\n';
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle index series of point-determining graph species"};
  app.name("plethys");
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a species expression");
  eval_cmd->add_option("expression", eval_args.expression, "Species expression")->required();
  eval_cmd->add_option("--degree", eval_args.degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  auto* egf_flag = eval_cmd->add_flag("--egf", eval_args.egf, "Print the exponential generating series");
  eval_cmd->add_flag("--ogf", eval_args.ogf, "Print the type generating series")->excludes(egf_flag);
  eval_cmd->add_option("--format", eval_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Labeled or unlabeled counts");
  count_cmd->add_option("target", count_args.target, "Species name or expression")->required();
  auto* labeled_flag = count_cmd->add_flag("--labeled", count_args.labeled, "Labeled counts (default)");
  count_cmd->add_flag("--unlabeled", count_args.unlabeled, "Unlabeled counts")->excludes(labeled_flag);
  count_cmd->add_option("--n-max", count_args.n_max, "Largest total size");
  count_cmd->add_option("--degree", count_args.degree, "Truncation degree (default n-max)")
      ->check(CLI::NonNegativeNumber);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify_args.suite, "identities, fixtures, oracle, confluence or all")
      ->check(CLI::IsMember({"identities", "fixtures", "oracle", "confluence", "all"}));
  verify_cmd->add_option("--degree", verify_args.options.degree, "Truncation degree for identities");
  verify_cmd->add_option("--n-max", verify_args.options.n_max, "Largest graph size for the oracle");
  verify_cmd->add_option("--seed", verify_args.options.seed, "Seed for random graphs and merge orders");
  verify_cmd->add_option("--random-graphs", verify_args.options.random_graphs, "Random graphs in the confluence suite");
  verify_cmd->add_option("--merge-orders", verify_args.options.merge_orders, "Random merge orders per graph");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Kernel of a graph file ('-' for stdin)");
  reduce_cmd->add_option("file", reduce_args.path, "Graph file")->required();
  reduce_cmd->add_option("--mode", reduce_args.mode, "pd, copd or bipd")
      ->check(CLI::IsMember({"pd", "copd", "bipd"}));
  reduce_cmd->add_flag("--check", reduce_args.check, "Verify the round trip, fibers and kernel");
  reduce_cmd->add_option("--format", reduce_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  reduce_cmd->add_option("--seed", reduce_args.seed, "Random merge order for bipd");

  int gf_m = 0;
  int gf_n = 0;
  std::string gf_format = "text";
  auto* gf_cmd = app.add_subcommand("edge-gf", "Unlabeled bicolored graphs on m + n vertices by edges");
  gf_cmd->add_option("m", gf_m, "White vertices")->required();
  gf_cmd->add_option("n", gf_n, "Black vertices")->required();
  gf_cmd->add_option("--format", gf_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CrosscheckArgs cross_args;
  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare counts with a sequence b-file");
  cross_cmd->add_option("target", cross_args.target, "Species name or expression")->required();
  cross_cmd->add_option("file", cross_args.path, "b-file with lines 'n value'")->required();
  auto* cross_labeled = cross_cmd->add_flag("--labeled", cross_args.labeled, "Labeled counts (default)");
  cross_cmd->add_flag("--unlabeled", cross_args.unlabeled, "Unlabeled counts")->excludes(cross_labeled);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_args, out);
    if (count_cmd->parsed()) return cmd_count(count_args, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (reduce_cmd->parsed()) return cmd_reduce(reduce_args, out);
    if (gf_cmd->parsed()) return cmd_edge_gf(gf_m, gf_n, gf_format, out);
    if (cross_cmd->parsed()) return cmd_crosscheck(cross_args, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace plethys::cli
