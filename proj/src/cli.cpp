#include "bell/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bell/bounds.hpp"
#include "bell/construct.hpp"
#include "bell/fuzz.hpp"
#include "bell/io.hpp"
#include "bell/measures.hpp"
#include "bell/oracle.hpp"

namespace bell::cli {

namespace {

using io::format12;
using nlohmann::json;

constexpr double kOracleTol = 1e-12;
constexpr double kMonotoneTol = 1e-12;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double default_tolerance() {
  const char* env = std::getenv("BELL_TRADEOFF_TOL");
  if (env == nullptr || *env == '\0') return kCheckTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol >= 0.0)) throw Usage(std::string("bad BELL_TRADEOFF_TOL: ") + env);
  return tol;
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

void print_pretty(std::ostream& out, const json& j, int indent = 0) {
  for (const auto& [key, value] : j.items()) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << std::left << std::setw(24) << key;
    if (value.is_structured()) {
      out << '\n';
      print_pretty(out, value, indent + 2);
    } else if (value.is_number_float()) {
      out << format12(value.get<double>()) << '\n';
    } else {
      out << value.dump() << '\n';
    }
  }
}

void emit(std::ostream& out, const json& j, bool pretty) {
  if (pretty) {
    print_pretty(out, j);
  } else {
    out << j.dump(2) << '\n';
  }
}

int cmd_measures(const std::string& file, bool pretty, std::ostream& out) {
  const auto input = io::read_input(file);
  emit(out, io::to_json(measure(input)), pretty);
  return kSuccess;
}

int cmd_check(const std::string& file, double tol, std::ostream& out) {
  const auto input = io::read_input(file, std::max(tol, kNormTolerance));
  const auto r = measure(input);

  const auto t1 = check_theorem1(r.m, r.h, r.s_opt, tol);
  const auto t2 = check_theorem2({r.m, r.h, r.s_opt}, tol);
  const auto card = check_cardinality_bound(input, tol);
  const bool hm = check_hm(r.m, r.h, tol);

  out << verdict(t1.pass) << " theorem1 slack=" << format12(t1.slack) << '\n';
  out << verdict(t2.pass) << " theorem2";
  for (std::size_t j = 0; j < 5; ++j) out << " b" << j + 1 << '=' << format12(t2.slacks[j]);
  out << '\n';
  out << verdict(card.pass) << " cardinality clause=" << card.clause << " lower=" << format12(card.lower)
      << " s_opt=" << format12(card.s_opt) << " upper=" << format12(card.upper) << '\n';
  out << verdict(hm) << " hm slack=" << format12(r.h - r.m / 8.0) << '\n';
  return t1.pass && t2.pass && card.pass && hm ? kSuccess : kCheckFailed;
}

int cmd_realize(double m, double h, double s, const std::string& path, std::ostream& out, std::ostream& err) {
  Realization real = [&] {
    try {
      return realize_with_report(m, h, s);
    } catch (const std::length_error& e) {
      throw Usage(e.what());
    }
  }();
  const json summary{{"n", real.params.n},
                     {"n0", real.params.n0},
                     {"delta_m", io::round12(real.delta_m)},
                     {"delta_h", io::round12(real.delta_h)},
                     {"delta_s", io::round12(real.delta_s)}};
  if (path.empty()) {
    out << io::to_json(real.input).dump(2) << '\n';
    err << summary.dump() << '\n';
  } else {
    io::write_json(path, io::to_json(real.input));
    out << summary.dump(2) << '\n';
  }
  return kSuccess;
}

int cmd_region(const std::string& kind, const std::optional<double>& k, double step, const std::string& path,
               std::ostream& out) {
  RegionKind rk;
  if (kind == "wk") {
    rk = RegionKind::kSlice;
  } else if (kind == "wk0") {
    rk = RegionKind::kUnion;
  } else if (kind == "polyhedron") {
    rk = RegionKind::kPolyhedron;
  } else {
    throw Usage("unknown region kind: " + kind);
  }
  if (rk != RegionKind::kPolyhedron && !k) throw Usage("--k is required for kind " + kind);
  if (!(step > 0.0)) throw Usage("--step must be positive");
  RegionSpec spec;
  try {
    spec = region(rk, k.value_or(0.0));
  } catch (const std::out_of_range& e) {
    throw Usage(e.what());
  }
  const auto samples = region_boundary_samples(spec, step);
  if (path.empty()) {
    io::write_region_csv(out, samples);
  } else {
    std::ofstream file(path);
    if (!file) throw FormatError("cannot write " + path);
    io::write_region_csv(file, samples);
    if (!file) throw FormatError("failed writing " + path);
  }
  return kSuccess;
}

int cmd_fuzz(const FuzzConfig& cfg, bool pretty, std::ostream& out) {
  if (cfg.trials == 0) throw Usage("--trials must be at least 1");
  if (cfg.max_lambdas == 0) throw Usage("--max-lambdas must be at least 1");
  const auto report = run_fuzz(cfg);

  json evaluated = json::object();
  for (const auto& name : fuzz_checks()) evaluated[name] = report.evaluated.at(name);
  json samples = json::array();
  for (const auto& f : report.failures) {
    samples.push_back({{"trial", f.trial},
                       {"seed", f.seed},
                       {"check", f.check},
                       {"detail", io::round12(f.detail)},
                       {"model", io::to_json(f.input)}});
  }
  json j{{"trials", report.trials},  {"seed", report.seed},
         {"max_lambdas", report.max_lambdas}, {"evaluated", evaluated},
         {"failures", report.failures.size()}, {"counterexamples", samples}};
  if (pretty) {
    out << "trials " << report.trials << " seed " << report.seed << " max-lambdas " << report.max_lambdas << '\n';
    for (const auto& name : fuzz_checks()) {
      const auto failed = std::count_if(report.failures.begin(), report.failures.end(),
                                        [&](const Counterexample& c) { return c.check == name; });
      out << verdict(failed == 0) << ' ' << std::left << std::setw(12) << name << report.evaluated.at(name)
          << " evaluated, " << failed << " failed\n";
    }
  } else {
    out << j.dump(2) << '\n';
  }
  return report.ok() ? kSuccess : kCheckFailed;
}

int cmd_oracle(const std::string& file, bool pretty, std::ostream& out) {
  const auto input = io::read_input(file);
  const auto brute = oracle::brute_force_sopt(input);
  const double closed = optimal_chsh(input);
  const double delta = brute.value - closed;
  if (pretty) {
    out << "brute_force " << format12(brute.value) << "\nclosed_form " << format12(closed) << "\ndelta       "
        << delta << "\nminus sign on context " << brute.pattern + 1 << '\n';
    for (std::size_t l = 0; l < brute.strategies.size(); ++l) {
      const auto& st = brute.strategies[l];
      out << "lambda " << l + 1 << ": a=(" << st.a[0] << ',' << st.a[1] << ") b=(" << st.b[0] << ',' << st.b[1]
          << ")\n";
    }
  } else {
    json strategies = json::array();
    for (const auto& st : brute.strategies) strategies.push_back({{"a", st.a}, {"b", st.b}});
    out << json{{"brute_force", io::round12(brute.value)},
                {"closed_form", io::round12(closed)},
                {"delta", delta},
                {"pattern_minus_context", brute.pattern + 1},
                {"strategies", strategies}}
               .dump(2)
        << '\n';
  }
  return std::abs(delta) <= kOracleTol ? kSuccess : kCheckFailed;
}

int cmd_reduce(const std::string& file, const std::string& path, bool pretty, std::ostream& out) {
  const auto input = io::read_input(file);
  if (input.size() < 3) throw Usage("reduce needs at least 3 hidden variables");
  const auto red = reduce(input);
  bool monotone = true;
  for (std::size_t k = 1; k < red.trace.size(); ++k) monotone &= red.trace[k].f <= red.trace[k - 1].f + kMonotoneTol;

  json rows = json::array();
  for (auto r : red.row_order) rows.push_back(r + 1);
  json ctx = json::array();
  for (auto c : red.context_order) ctx.push_back(c + 1);
  if (pretty) {
    for (const auto& s : red.trace) {
      out << std::left << std::setw(10) << s.stage << " n=" << s.n << " f=" << format12(s.f) << '\n';
    }
  } else {
    out << json{{"trace", io::to_json(red.trace)}, {"row_order", rows}, {"context_order", ctx}}.dump(2) << '\n';
  }
  if (!path.empty()) io::write_json(path, io::to_json(red.reduced));
  return monotone ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measurement dependence / hiddenness / CHSH trade-off toolkit", "bell-tradeoff"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  bool pretty = false;
  std::optional<double> tol_flag;

  auto* measures = app.add_subcommand("measures", "Print S_opt, M, H, H' and the F-functional of an input model");
  measures->add_option("file", file, "input-model JSON")->required();
  measures->add_flag("--pretty", pretty, "human-readable output");

  auto* check = app.add_subcommand("check", "Check the relaxed Bell inequalities for an input model");
  check->add_option("file", file, "input-model JSON")->required();
  check->add_option("--tol", tol_flag, "check tolerance (default 1e-9 or BELL_TRADEOFF_TOL)");

  double m = 0.0, h = 0.0, s = 0.0;
  auto* realize_cmd = app.add_subcommand("realize", "Construct a separable input with the given (M, H, S_opt)");
  realize_cmd->add_option("M", m, "measurement dependence")->required();
  realize_cmd->add_option("H", h, "hiddenness")->required();
  realize_cmd->add_option("S", s, "optimal CHSH value")->required();
  realize_cmd->add_option("--out", out_path, "write the model here instead of stdout");

  std::string kind;
  std::optional<double> k;
  double step = 0.05;
  auto* region_cmd = app.add_subcommand("region", "Export region boundary data as CSV");
  region_cmd->add_option("--kind", kind, "wk | wk0 | polyhedron")->required();
  region_cmd->add_option("--k", k, "k (wk) or k0 (wk0), in [0, 2]");
  region_cmd->add_option("--step", step, "boundary sampling step");
  region_cmd->add_option("--out", out_path, "CSV path (default stdout)");

  FuzzConfig fuzz_cfg;
  auto* fuzz = app.add_subcommand("fuzz", "Search random inputs for violations of every invariant");
  fuzz->add_option("--trials", fuzz_cfg.trials, "number of random inputs");
  fuzz->add_option("--seed", fuzz_cfg.seed, "master seed");
  fuzz->add_option("--max-lambdas", fuzz_cfg.max_lambdas, "largest number of hidden variables");
  fuzz->add_option("--threads", fuzz_cfg.threads, "worker threads");
  fuzz->add_option("--tol", tol_flag, "check tolerance");
  fuzz->add_flag("--pretty", pretty, "human-readable output");

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare brute-force S_opt with the closed form");
  oracle_cmd->add_option("file", file, "input-model JSON")->required();
  oracle_cmd->add_flag("--pretty", pretty, "human-readable output");

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the F-trace of one n -> n-1 reduction step");
  reduce_cmd->add_option("file", file, "input-model JSON")->required();
  reduce_cmd->add_option("--out", out_path, "write the reduced model here");
  reduce_cmd->add_flag("--pretty", pretty, "human-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidRequest;
  }

  try {
    const double tol = tol_flag.value_or(default_tolerance());
    if (!(tol >= 0.0)) throw Usage("tolerance must be non-negative");
    if (*measures) return cmd_measures(file, pretty, out);
    if (*check) return cmd_check(file, tol, out);
    if (*realize_cmd) return cmd_realize(m, h, s, out_path, out, err);
    if (*region_cmd) return cmd_region(kind, k, step, out_path, out);
    if (*fuzz) {
      fuzz_cfg.tolerance = tol;
      return cmd_fuzz(fuzz_cfg, pretty, out);
    }
    if (*oracle_cmd) return cmd_oracle(file, pretty, out);
    if (*reduce_cmd) return cmd_reduce(file, out_path, pretty, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidRequest;
  } catch (const InfeasiblePoint& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidRequest;
  } catch (const SelfCheckFailed& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InvalidModel& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kInvalidRequest;
}

}  // namespace bell::cli
