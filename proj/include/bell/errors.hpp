#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bell {

/// One reason a raw probability table was rejected.
struct Violation {
  enum class Kind { kEmptyTable, kNonFinite, kNegativeEntry, kEntryAboveOne, kColumnSumMismatch, kShape };

  Kind kind;
  std::size_t lambda = 0;   // 0-based row, when meaningful
  int context = 0;          // 1-based context index, when meaningful
  double value = 0.0;       // offending entry or column sum

  std::string describe() const;
};

/// Raised when a table, behavior or local response fails validation.
class InvalidModel : public std::invalid_argument {
 public:
  explicit InvalidModel(std::vector<Violation> violations);
  explicit InvalidModel(const std::string& what);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A requested (m, h, s) lies outside the realizable polyhedron.
class InfeasiblePoint : public std::domain_error {
 public:
  InfeasiblePoint(std::string slack, double value);

  const std::string& slack() const noexcept { return slack_; }
  double value() const noexcept { return value_; }

 private:
  std::string slack_;
  double value_;
};

/// A construction produced a table whose measures do not reproduce the request.
class SelfCheckFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or unreadable model/CSV file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bell
