#include "bell/errors.hpp"

#include <sstream>

namespace bell {

namespace {

std::string join(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid model:";
  for (const auto& v : violations) os << ' ' << v.describe() << ';';
  return os.str();
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kEmptyTable:
      os << "EmptyTable";
      break;
    case Kind::kNonFinite:
      os << "NonFinite(lambda=" << lambda + 1 << ", i=" << context << ")";
      break;
    case Kind::kNegativeEntry:
      os << "NegativeEntry(lambda=" << lambda + 1 << ", i=" << context << ", value=" << value << ")";
      break;
    case Kind::kEntryAboveOne:
      os << "EntryAboveOne(lambda=" << lambda + 1 << ", i=" << context << ", value=" << value << ")";
      break;
    case Kind::kColumnSumMismatch:
      os << "ColumnSumMismatch(i=" << context << ", sum=" << value << ")";
      break;
    case Kind::kShape:
      os << "Shape(lambda=" << lambda + 1 << ")";
      break;
  }
  return os.str();
}

InvalidModel::InvalidModel(std::vector<Violation> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

InvalidModel::InvalidModel(const std::string& what) : std::invalid_argument(what) {}

namespace {

std::string infeasible_message(const std::string& slack, double value) {
  std::ostringstream os;
  os.precision(12);
  os << "infeasible point: " << slack << (slack == "b4" ? " <= 0" : " < 0") << " (" << slack << " = " << value
     << ")";
  return os.str();
}

}  // namespace

InfeasiblePoint::InfeasiblePoint(std::string slack, double value)
    : std::domain_error(infeasible_message(slack, value)),
      slack_(std::move(slack)),
      value_(value) {}

}  // namespace bell
