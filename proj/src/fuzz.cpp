#include "bell/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "bell/bounds.hpp"
#include "bell/construct.hpp"
#include "bell/kernels.hpp"
#include "bell/measures.hpp"
#include "bell/oracle.hpp"

namespace bell {

const std::vector<std::string>& fuzz_checks() {
  static const std::vector<std::string> kChecks{"theorem1", "hm",     "theorem2", "cardinality",
                                                "oracle",   "attain", "reduce",   "kernel"};
  return kChecks;
}

namespace {

constexpr double kOracleTol = 1e-12;
constexpr double kAttainTol = 1e-9;
constexpr double kMonotoneTol = 1e-12;

struct TrialOutcome {
  std::vector<std::string> evaluated;
  std::vector<Counterexample> failures;
};

void run_trial(const FuzzConfig& cfg, std::size_t trial, TrialOutcome& out) {
  const std::uint64_t trial_seed = oracle::derive_seed(cfg.seed, trial);
  std::mt19937_64 pick(trial_seed);
  const std::size_t span = cfg.max_lambdas - cfg.min_lambdas + 1;
  const std::size_t n = cfg.min_lambdas + static_cast<std::size_t>(pick() % span);
  const std::uint64_t table_seed = oracle::derive_seed(trial_seed, 0xB311);
  const auto input = oracle::sample_input(n, table_seed);

  auto record = [&](const char* check, bool ok, double detail) {
    out.evaluated.emplace_back(check);
    if (!ok) out.failures.push_back({trial, table_seed, check, input, detail});
  };

  const auto r = measure(input);
  const double tol = cfg.tolerance;

  record("theorem1", r.f >= -tol && check_theorem1(r.m, r.h, r.s_opt, tol).pass, r.f);
  record("hm", check_hm(r.m, r.h, tol), r.h - r.m / 8.0);
  const auto t2 = check_theorem2({r.m, r.h, r.s_opt}, tol);
  record("theorem2", t2.pass && r.s_opt >= 2.0 - tol, *std::min_element(t2.slacks.begin(), t2.slacks.end()));
  const auto card = check_cardinality_bound(input, tol);
  record("cardinality", card.pass, card.upper - card.s_opt);

  const double brute = oracle::brute_force_sopt(input).value;
  record("oracle", std::abs(brute - r.s_opt) <= kOracleTol, brute - r.s_opt);

  const double attained = chsh_value(compose(input, optimal_output(input)));
  record("attain", std::abs(attained - r.s_opt) <= kAttainTol, attained - r.s_opt);

  if (n >= 3) {
    double worst = 0.0;
    bool ok = true;
    try {
      const auto red = reduce(input);
      for (std::size_t k = 1; k < red.trace.size(); ++k) {
        const double rise = red.trace[k].f - red.trace[k - 1].f;
        worst = std::max(worst, rise);
        ok &= rise <= kMonotoneTol;
      }
    } catch (const std::exception&) {
      ok = false;
    }
    record("reduce", ok, worst);
  }

  const auto ref = kernels::scalar::table_stats(input.flat());
  const auto fast = kernels::table_stats(input.flat());
  record("kernel", ref == fast, fast.m_tilde - ref.m_tilde);
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("fuzz needs at least one trial");
  if (config.min_lambdas == 0 || config.max_lambdas < config.min_lambdas) {
    throw std::invalid_argument("fuzz needs 1 <= min-lambdas <= max-lambdas");
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
  std::vector<TrialOutcome> partial(workers);
  auto work = [&](unsigned w) {
    for (std::size_t t = w; t < config.trials; t += workers) run_trial(config, t, partial[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  FuzzReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  report.max_lambdas = config.max_lambdas;
  for (const auto& name : fuzz_checks()) report.evaluated[name] = 0;
  for (auto& p : partial) {
    for (const auto& name : p.evaluated) ++report.evaluated[name];
    for (auto& f : p.failures) report.failures.push_back(std::move(f));
  }
  std::sort(report.failures.begin(), report.failures.end(), [](const Counterexample& a, const Counterexample& b) {
    return std::tie(a.trial, a.check) < std::tie(b.trial, b.check);
  });
  return report;
}

}  // namespace bell
