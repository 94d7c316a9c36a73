#include "bell/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bell {

std::vector<Violation> check_input(std::span<const Row> rows, double tolerance) {
  std::vector<Violation> out;
  if (rows.empty()) {
    out.push_back({Violation::Kind::kEmptyTable});
    return out;
  }
  std::array<double, kContexts> sums{};
  for (std::size_t l = 0; l < rows.size(); ++l) {
    for (std::size_t i = 0; i < kContexts; ++i) {
      const double p = rows[l][i];
      const int ctx = static_cast<int>(i) + 1;
      if (!std::isfinite(p)) {
        out.push_back({Violation::Kind::kNonFinite, l, ctx, p});
      } else if (p < 0.0) {
        out.push_back({Violation::Kind::kNegativeEntry, l, ctx, p});
      } else if (p > 1.0 + tolerance) {
        out.push_back({Violation::Kind::kEntryAboveOne, l, ctx, p});
      }
      sums[i] += p;
    }
  }
  for (std::size_t i = 0; i < kContexts; ++i) {
    if (!(std::abs(sums[i] - 1.0) <= tolerance)) {
      out.push_back({Violation::Kind::kColumnSumMismatch, 0, static_cast<int>(i) + 1, sums[i]});
    }
  }
  return out;
}

HiddenInput HiddenInput::validate(std::span<const Row> rows, double tolerance) {
  auto violations = check_input(rows, tolerance);
  if (!violations.empty()) throw InvalidModel(std::move(violations));
  std::vector<double> data;
  data.reserve(rows.size() * kContexts);
  for (const auto& r : rows) data.insert(data.end(), r.begin(), r.end());
  return HiddenInput(std::move(data));
}

HiddenInput HiddenInput::from_columns(const std::array<std::vector<double>, kContexts>& columns,
                                      double tolerance) {
  const std::size_t n = columns[0].size();
  for (std::size_t i = 1; i < kContexts; ++i) {
    if (columns[i].size() != n) {
      throw InvalidModel("context " + std::to_string(i + 1) + " has " + std::to_string(columns[i].size()) +
                         " entries, expected " + std::to_string(n));
    }
  }
  std::vector<Row> rows(n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < kContexts; ++i) rows[l][i] = columns[i][l];
  }
  return validate(rows, tolerance);
}

double HiddenInput::at(std::size_t lambda, MeasurementContext c) const {
  return data_.at(lambda * kContexts + c.offset());
}

std::vector<Row> HiddenInput::rows() const {
  std::vector<Row> out(size());
  for (std::size_t l = 0; l < out.size(); ++l) std::copy_n(row(l).begin(), kContexts, out[l].begin());
  return out;
}

std::vector<double> HiddenInput::column(std::size_t context_offset) const {
  std::vector<double> out(size());
  for (std::size_t l = 0; l < out.size(); ++l) out[l] = (*this)(l, context_offset);
  return out;
}

LocalResponse DeterministicStrategy::response() const noexcept {
  auto prob = [](int v) { return v > 0 ? 1.0 : 0.0; };
  return {{prob(a[0]), prob(a[1])}, {prob(b[0]), prob(b[1])}};
}

std::array<DeterministicStrategy, 16> DeterministicStrategy::all() {
  std::array<DeterministicStrategy, 16> out{};
  for (int bits = 0; bits < 16; ++bits) {
    auto sign = [bits](int k) { return (bits >> (3 - k)) & 1 ? -1 : 1; };
    out[static_cast<std::size_t>(bits)] = {{sign(0), sign(1)}, {sign(2), sign(3)}};
  }
  return out;
}

SeparableOutput SeparableOutput::validate(std::vector<LocalResponse> responses) {
  std::vector<Violation> violations;
  for (std::size_t l = 0; l < responses.size(); ++l) {
    const auto& r = responses[l];
    for (double p : {r.alice[0], r.alice[1], r.bob[0], r.bob[1]}) {
      if (!(p >= 0.0 && p <= 1.0)) {
        violations.push_back({std::isfinite(p) ? (p < 0.0 ? Violation::Kind::kNegativeEntry
                                                           : Violation::Kind::kEntryAboveOne)
                                               : Violation::Kind::kNonFinite,
                              l, 0, p});
      }
    }
  }
  if (!violations.empty()) throw InvalidModel(std::move(violations));
  return SeparableOutput(std::move(responses));
}

SeparableOutput SeparableOutput::from_strategies(std::span<const DeterministicStrategy> strategies) {
  std::vector<LocalResponse> r;
  r.reserve(strategies.size());
  for (const auto& s : strategies) r.push_back(s.response());
  return SeparableOutput(std::move(r));
}

bool SeparableOutput::is_deterministic() const noexcept {
  return std::all_of(responses_.begin(), responses_.end(), [](const LocalResponse& r) {
    for (double p : {r.alice[0], r.alice[1], r.bob[0], r.bob[1]}) {
      if (p != 0.0 && p != 1.0) return false;
    }
    return true;
  });
}

Behavior Behavior::validate(const std::array<Distribution, kContexts>& table, double tolerance) {
  std::vector<Violation> violations;
  for (std::size_t i = 0; i < kContexts; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const double p = table[i][k];
      if (!std::isfinite(p)) {
        violations.push_back({Violation::Kind::kNonFinite, k, static_cast<int>(i) + 1, p});
      } else if (p < 0.0) {
        violations.push_back({Violation::Kind::kNegativeEntry, k, static_cast<int>(i) + 1, p});
      } else if (p > 1.0 + tolerance) {
        violations.push_back({Violation::Kind::kEntryAboveOne, k, static_cast<int>(i) + 1, p});
      }
      sum += p;
    }
    if (!(std::abs(sum - 1.0) <= tolerance)) {
      violations.push_back({Violation::Kind::kColumnSumMismatch, 0, static_cast<int>(i) + 1, sum});
    }
  }
  if (!violations.empty()) throw InvalidModel(std::move(violations));
  return Behavior(table);
}

Behavior compose(const HiddenInput& input, const SeparableOutput& output) {
  if (input.size() != output.size()) {
    throw InvalidModel("output covers " + std::to_string(output.size()) + " hidden variables, input has " +
                       std::to_string(input.size()));
  }
  std::array<Behavior::Distribution, kContexts> table{};
  for (const auto c : all_contexts()) {
    auto& dist = table[c.offset()];
    for (std::size_t l = 0; l < input.size(); ++l) {
      const double w = input(l, c.offset());
      const double pa = output[l].alice[static_cast<std::size_t>(c.x())];
      const double pb = output[l].bob[static_cast<std::size_t>(c.y())];
      dist[0] += w * pa * pb;
      dist[1] += w * pa * (1.0 - pb);
      dist[2] += w * (1.0 - pa) * pb;
      dist[3] += w * (1.0 - pa) * (1.0 - pb);
    }
  }
  return Behavior::validate(table);
}

HiddenInput truncate(const std::function<Row(std::size_t)>& row_at, std::size_t alpha, double tolerance) {
  if (alpha == 0) throw InvalidModel("truncation length must be positive");
  std::vector<Row> rows;
  rows.reserve(alpha);
  Row partial{};
  for (std::size_t l = 0; l + 1 < alpha; ++l) {
    rows.push_back(row_at(l));
    for (std::size_t i = 0; i < kContexts; ++i) partial[i] += rows.back()[i];
  }
  Row remainder{};
  for (std::size_t i = 0; i < kContexts; ++i) {
    if (partial[i] > 1.0 + tolerance) {
      throw InvalidModel({{Violation::Kind::kColumnSumMismatch, 0, static_cast<int>(i) + 1, partial[i]}});
    }
    remainder[i] = std::max(0.0, 1.0 - partial[i]);
  }
  rows.push_back(remainder);
  return HiddenInput::validate(rows, tolerance);
}

HiddenInput truncate(std::span<const Row> rows, std::size_t alpha, double tolerance) {
  if (alpha > rows.size() + 1) {
    throw InvalidModel("truncation at " + std::to_string(alpha) + " needs " + std::to_string(alpha - 1) +
                       " rows, got " + std::to_string(rows.size()));
  }
  return truncate([rows](std::size_t l) { return rows[l]; }, alpha, tolerance);
}

}  // namespace bell
