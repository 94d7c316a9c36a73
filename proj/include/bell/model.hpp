#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bell/context.hpp"
#include "bell/errors.hpp"

namespace bell {

/// Default tolerance for probability normalization.
inline constexpr double kNormTolerance = 1e-9;

/// p(lambda | i) for one hidden variable, indexed by context offset 0..3.
using Row = std::array<double, kContexts>;

/// The input of a hidden-variable model: the table p(lambda | i) with n rows
/// (hidden variables) and 4 columns (contexts). Always valid once constructed.
///
/// Storage is row-major, one row of 4 contiguous doubles per hidden variable;
/// the table kernels rely on this layout.
class HiddenInput {
 public:
  /// Validates and wraps a table. Throws InvalidModel listing every violation.
  static HiddenInput validate(std::span<const Row> rows, double tolerance = kNormTolerance);
  /// Same, for context-major data: columns[i][lambda] = p(lambda | i+1).
  static HiddenInput from_columns(const std::array<std::vector<double>, kContexts>& columns,
                                  double tolerance = kNormTolerance);

  std::size_t size() const noexcept { return data_.size() / kContexts; }

  double operator()(std::size_t lambda, std::size_t context_offset) const noexcept {
    return data_[lambda * kContexts + context_offset];
  }
  double at(std::size_t lambda, MeasurementContext c) const;

  std::span<const double, kContexts> row(std::size_t lambda) const noexcept {
    return std::span<const double, kContexts>(data_.data() + lambda * kContexts, kContexts);
  }
  std::vector<Row> rows() const;
  /// Flat row-major view, 4 * size() doubles.
  std::span<const double> flat() const noexcept { return data_; }
  std::vector<double> column(std::size_t context_offset) const;

  friend bool operator==(const HiddenInput&, const HiddenInput&) = default;

 private:
  explicit HiddenInput(std::vector<double> data) : data_(std::move(data)) {}
  std::vector<double> data_;
};

/// Non-throwing validation: returns the list of violations (empty if valid).
std::vector<Violation> check_input(std::span<const Row> rows, double tolerance = kNormTolerance);

/// validate_input(raw, tolerance) as a free function.
inline HiddenInput validate_input(std::span<const Row> rows, double tolerance = kNormTolerance) {
  return HiddenInput::validate(rows, tolerance);
}

/// Local response probabilities for one hidden variable.
struct LocalResponse {
  std::array<double, 2> alice{};  // p(a = +1 | x, lambda), x = 0, 1
  std::array<double, 2> bob{};    // p(b = +1 | y, lambda), y = 0, 1

  friend bool operator==(const LocalResponse&, const LocalResponse&) = default;
};

/// Deterministic local responses a_x, b_y in {-1, +1}.
struct DeterministicStrategy {
  std::array<int, 2> a{1, 1};
  std::array<int, 2> b{1, 1};

  /// a_x * b_y for context i.
  int correlator(MeasurementContext c) const noexcept { return a[c.x()] * b[c.y()]; }
  LocalResponse response() const noexcept;

  /// All 16 strategies, ordered by the bit pattern (a0, a1, b0, b1) with +1 first.
  static std::array<DeterministicStrategy, 16> all();

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

/// The separable output: one local response pair per hidden variable.
class SeparableOutput {
 public:
  static SeparableOutput validate(std::vector<LocalResponse> responses);
  static SeparableOutput from_strategies(std::span<const DeterministicStrategy> strategies);

  std::size_t size() const noexcept { return responses_.size(); }
  const LocalResponse& operator[](std::size_t lambda) const noexcept { return responses_[lambda]; }
  std::span<const LocalResponse> responses() const noexcept { return responses_; }
  bool is_deterministic() const noexcept;

  friend bool operator==(const SeparableOutput&, const SeparableOutput&) = default;

 private:
  explicit SeparableOutput(std::vector<LocalResponse> r) : responses_(std::move(r)) {}
  std::vector<LocalResponse> responses_;
};

/// Outcome pairs in the fixed order (+1,+1), (+1,-1), (-1,+1), (-1,-1).
inline constexpr std::array<std::array<int, 2>, 4> kOutcomePairs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

/// p(a, b | x, y) for all four contexts.
class Behavior {
 public:
  using Distribution = std::array<double, 4>;

  static Behavior validate(const std::array<Distribution, kContexts>& table,
                           double tolerance = kNormTolerance);

  const Distribution& operator[](MeasurementContext c) const noexcept { return table_[c.offset()]; }
  const std::array<Distribution, kContexts>& table() const noexcept { return table_; }

 private:
  explicit Behavior(const std::array<Distribution, kContexts>& t) : table_(t) {}
  std::array<Distribution, kContexts> table_;
};

/// p(a,b|x,y) = sum_lambda p(lambda|x,y) p(a|x,lambda) p(b|y,lambda).
/// Throws InvalidModel if the output does not cover every hidden variable.
Behavior compose(const HiddenInput& input, const SeparableOutput& output);

/// Truncation of a (possibly countable) table at alpha rows: rows 1..alpha-1
/// are copied and row alpha carries the remaining mass of each column.
/// Requires at least alpha-1 rows; throws InvalidModel when a partial column
/// sum exceeds 1 + tolerance.
HiddenInput truncate(std::span<const Row> rows, std::size_t alpha, double tolerance = kNormTolerance);
/// Same, for a row generator over an infinite hidden-variable set.
HiddenInput truncate(const std::function<Row(std::size_t)>& row_at, std::size_t alpha,
                     double tolerance = kNormTolerance);

}  // namespace bell
