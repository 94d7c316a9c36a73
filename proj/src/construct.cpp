#include "bell/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bell/bounds.hpp"
#include "bell/measures.hpp"

namespace bell {

namespace {

constexpr double kFeasibilityTol = 1e-12;
constexpr std::size_t kMaxRealizeRows = std::size_t{1} << 24;

}  // namespace

ConstructionParams construction_params(double m, double h, double s) {
  if (!std::isfinite(m) || !std::isfinite(h) || !std::isfinite(s)) {
    throw InfeasiblePoint("finite", std::numeric_limits<double>::quiet_NaN());
  }
  const TradeoffPoint p{m, h, s};
  const auto b = p.slacks();
  static constexpr const char* kNames[] = {"b1", "b2", "b3", "b4", "b5"};
  for (std::size_t j = 0; j < 5; ++j) {
    const bool ok = j == 3 ? b[j] > 0.0 : b[j] >= -kFeasibilityTol;
    if (!ok) throw InfeasiblePoint(kNames[j], b[j]);
  }
  const double b1 = std::max(0.0, b[0]);
  const double b2 = std::max(0.0, b[1]);
  const double b3 = std::max(0.0, b[2]);
  const double b4 = b[3];
  const double b5 = std::max(0.0, b[4]);

  ConstructionParams cp;
  const double guess = std::floor(1.0 / (4.0 * b4)) + 1.0;
  if (!(guess * 4.0 <= static_cast<double>(kMaxRealizeRows))) {
    throw std::length_error("h = " + std::to_string(h) + " needs more than 2^24 hidden variables");
  }
  cp.n0 = static_cast<std::size_t>(guess);
  while (!(b4 - 1.0 / (4.0 * static_cast<double>(cp.n0)) > 0.0)) ++cp.n0;
  cp.n = 4 * cp.n0;
  cp.y = 1.0 / (12.0 * static_cast<double>(cp.n0));

  const double gap = b4 - 1.0 / static_cast<double>(cp.n);
  cp.u = gap / (b5 + gap);
  cp.u_bar = b5 / (b5 + gap);
  cp.t1 = b1 / 2.0;
  cp.t2 = b2 / 4.0;
  cp.t3 = 3.0 * b3 / 4.0;
  return cp;
}

namespace {

std::vector<Row> build_table(const ConstructionParams& cp) {
  const double u = cp.u, ub = cp.u_bar, y = cp.y, t1 = cp.t1, t2 = cp.t2, t3 = cp.t3;
  const std::size_t n0 = cp.n0;

  const double base = 3.0 * t1 * ub * y;  // 3 t1 u_bar y
  const double spread = base + 4.0 * t3 * y;
  const double head = u * (1.0 - 2.0 * t3 / 3.0);

  std::vector<Row> rows(cp.n);
  for (std::size_t l = 1; l <= cp.n; ++l) {
    Row& r = rows[l - 1];
    if (l == 1) {
      r[0] = u * t1 + base;
      r[1] = head + ub * y * (3.0 * t1 + 12.0 * t2 + 4.0 * t3);
      r[2] = head + ub * y * (3.0 * t1 + 4.0 * t3);
      r[3] = head + ub * y * (3.0 * t1 + 4.0 * t3);
    } else if (l <= n0) {
      r[0] = base;
      r[1] = ub * y * (3.0 * t1 + 12.0 * t2 + 4.0 * t3);
      r[2] = ub * y * (3.0 * t1 + 4.0 * t3);
      r[3] = ub * y * (3.0 * t1 + 4.0 * t3);
    } else if (l <= 2 * n0) {
      r[0] = base + 12.0 * t2 * y + 4.0 * t3 * y;
      r[1] = base;
      r[2] = spread;
      r[3] = spread;
    } else if (l <= 3 * n0) {
      r[0] = spread;
      r[1] = spread;
      r[2] = base;
      r[3] = 4.0 * t3 * y + ub * y * (3.0 * t1 + 12.0 * t2);
    } else {
      r[0] = spread;
      r[1] = spread;
      r[2] = 4.0 * t3 * y + ub * y * (3.0 * t1 + 12.0 * t2);
      r[3] = base;
    }
  }
  return rows;
}

}  // namespace

Realization realize_with_report(double m, double h, double s) {
  const auto cp = construction_params(m, h, s);
  auto input = HiddenInput::validate(build_table(cp));
  const auto r = measure(input);
  Realization out{std::move(input), cp, r.m - m, r.h - h, r.s_opt - s};
  if (!(std::abs(out.delta_m) <= kRealizeTolerance && std::abs(out.delta_h) <= kRealizeTolerance &&
        std::abs(out.delta_s) <= kRealizeTolerance)) {
    throw SelfCheckFailed("realized table misses the request: dM=" + std::to_string(out.delta_m) +
                          " dH=" + std::to_string(out.delta_h) + " dS=" + std::to_string(out.delta_s));
  }
  return out;
}

HiddenInput realize(double m, double h, double s) { return realize_with_report(m, h, s).input; }

std::size_t argmin_context(std::span<const double, kContexts> row) noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < kContexts; ++i) {
    if (row[i] < row[best]) best = i;
  }
  return best;
}

std::vector<DeterministicStrategy> optimal_strategies(const HiddenInput& input) {
  // Pattern (+,+,+,-): target signed correlator c_i E_i is -1 at the argmin.
  static constexpr std::array<int, kContexts> kPattern{1, 1, 1, -1};
  std::vector<DeterministicStrategy> out;
  out.reserve(input.size());
  for (std::size_t l = 0; l < input.size(); ++l) {
    const std::size_t flip = argmin_context(input.row(l));
    std::array<int, kContexts> e{};
    for (std::size_t i = 0; i < kContexts; ++i) e[i] = kPattern[i] * (i == flip ? -1 : 1);
    DeterministicStrategy st;
    st.a[0] = 1;
    st.b[0] = e[0];      // a0 b0
    st.b[1] = e[1];      // a0 b1
    st.a[1] = e[2] * st.b[0];  // a1 b0
    // a1 b1 = e[3] follows: the product of the four targets is -1.
    out.push_back(st);
  }
  return out;
}

SeparableOutput optimal_output(const HiddenInput& input) {
  const auto strategies = optimal_strategies(input);
  return SeparableOutput::from_strategies(strategies);
}

namespace {

ReductionStage stage(std::string name, const std::vector<Row>& rows) {
  auto table = HiddenInput::validate(rows);
  const double f = f_functional(table).f;
  const std::size_t n = table.size();
  return {std::move(name), f, n, std::move(table)};
}

}  // namespace

Reduction reduce(const HiddenInput& input) {
  const std::size_t n = input.size();
  if (n < 3) throw std::invalid_argument("reduce needs at least 3 hidden variables, got " + std::to_string(n));

  // lambda_3 := the first row of largest total mass.
  std::size_t heavy = 0;
  double heavy_sum = -1.0;
  for (std::size_t l = 0; l < n; ++l) {
    const auto r = input.row(l);
    const double sum = (r[0] + r[1]) + (r[2] + r[3]);
    if (sum > heavy_sum) {
      heavy_sum = sum;
      heavy = l;
    }
  }
  std::vector<std::size_t> others;
  for (std::size_t l = 0; l < n; ++l) {
    if (l != heavy) others.push_back(l);
  }

  std::vector<std::size_t> row_order{others[0], others[1], heavy};
  row_order.insert(row_order.end(), others.begin() + 2, others.end());
  std::array<std::size_t, kContexts> context_order{0, 1, 2, 3};
  std::vector<ReductionStage> trace;

  // Move the Gamma-minimum to (lambda_1, context 1).
  std::size_t min_row = 0, min_ctx = 0;
  double gamma_min = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < kContexts; ++c) {
      const double v = input(row_order[r], c);
      if (v < gamma_min) {
        gamma_min = v;
        min_row = r;
        min_ctx = c;
      }
    }
  }
  if (min_row == 1) std::swap(row_order[0], row_order[1]);
  std::swap(context_order[0], context_order[min_ctx]);

  std::vector<Row> work(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (std::size_t c = 0; c < kContexts; ++c) work[pos][c] = input(row_order[pos], context_order[c]);
  }
  trace.push_back(stage("input", work));

  // Shift p from lambda_1 to lambda_3 in every context.
  const double p = work[0][0];
  for (std::size_t c = 0; c < kContexts; ++c) {
    work[0][c] -= p;
    work[2][c] += p;
  }
  trace.push_back(stage("shift", work));

  // Gamma' = {lambda_1, lambda_2} x contexts, minus (lambda_1, 1).
  std::vector<std::pair<std::size_t, std::size_t>> gamma;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < kContexts; ++c) {
      if (r != 0 || c != 0) gamma.emplace_back(r, c);
    }
  }
  for (int step = 1;; ++step) {
    bool shared_zero = false;
    for (std::size_t c = 0; c < kContexts; ++c) shared_zero |= work[0][c] == 0.0 && work[1][c] == 0.0;
    if (shared_zero) break;
    if (gamma.empty()) throw std::logic_error("reduce: index set exhausted without a shared zero");

    auto it = std::min_element(gamma.begin(), gamma.end(),
                               [&](const auto& a, const auto& b) { return work[a.first][a.second] < work[b.first][b.second]; });
    const auto [star, star_ctx] = *it;
    const std::size_t other = 1 - star;
    const double q = work[star][star_ctx];
    std::array<bool, kContexts> zero{};
    for (std::size_t c = 0; c < kContexts; ++c) zero[c] = work[star][c] == 0.0;
    for (std::size_t c = 0; c < kContexts; ++c) {
      if (zero[c]) {
        work[other][c] -= q;
      } else {
        work[star][c] -= q;
      }
      work[2][c] += q;
    }
    gamma.erase(it);
    trace.push_back(stage("zero-" + std::to_string(step), work));
  }

  // Merge lambda_1 and lambda_2.
  std::vector<Row> merged;
  merged.reserve(n - 1);
  Row head{};
  for (std::size_t c = 0; c < kContexts; ++c) head[c] = work[0][c] + work[1][c];
  merged.push_back(head);
  merged.insert(merged.end(), work.begin() + 2, work.end());
  trace.push_back(stage("merge", merged));
  auto reduced = trace.back().table;
  return {std::move(reduced), std::move(trace), std::move(row_order), context_order};
}

}  // namespace bell
