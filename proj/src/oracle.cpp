#include "bell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace bell::oracle {

BruteForceResult brute_force_sopt(const HiddenInput& input) {
  const auto strategies = DeterministicStrategy::all();
  const auto contexts = all_contexts();

  BruteForceResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t minus = 0; minus < kContexts; ++minus) {
    double total = 0.0;
    std::vector<DeterministicStrategy> chosen(input.size());
    for (std::size_t l = 0; l < input.size(); ++l) {
      double lambda_best = -std::numeric_limits<double>::infinity();
      for (const auto& st : strategies) {
        double v = 0.0;
        for (const auto c : contexts) {
          const double sign = c.offset() == minus ? -1.0 : 1.0;
          v += sign * input(l, c.offset()) * st.correlator(c);
        }
        if (v > lambda_best) {
          lambda_best = v;
          chosen[l] = st;
        }
      }
      total += lambda_best;
    }
    if (total > best.value) {
      best.value = total;
      best.pattern = minus;
      best.strategies = std::move(chosen);
    }
  }
  return best;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index + 1));
}

namespace {

std::vector<double> simplex_column(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<double> col(n);
  double sum = 0.0;
  while (!(sum > 0.0)) {
    sum = 0.0;
    for (auto& v : col) {
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      v = -std::log1p(-u);
      sum += v;
    }
  }
  for (auto& v : col) v /= sum;
  return col;
}

}  // namespace

HiddenInput sample_input(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_input needs n >= 1");
  std::array<std::vector<double>, kContexts> columns;
  for (std::size_t c = 0; c < kContexts; ++c) columns[c] = simplex_column(n, derive_seed(seed, c));
  return HiddenInput::from_columns(columns, 1e-12);
}

HiddenInput sample_independent_input(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_independent_input needs n >= 1");
  const auto col = simplex_column(n, derive_seed(seed, 0));
  return HiddenInput::from_columns({col, col, col, col}, 1e-12);
}

namespace {

constexpr double kBox = 1e6;
constexpr double kFeasTol = 1e-9;

// Solves the d x d system rows[k] . x = rhs[k] by Cramer's rule.
bool solve(int d, const std::array<Point, 3>& rows, const std::array<double, 3>& rhs, Point& x) {
  if (d == 2) {
    const double det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    if (std::abs(det) < 1e-12) return false;
    x = {(rhs[0] * rows[1][1] - rows[0][1] * rhs[1]) / det, (rows[0][0] * rhs[1] - rhs[0] * rows[1][0]) / det, 0.0};
    return true;
  }
  auto det3 = [](const Point& a, const Point& b, const Point& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
  };
  const double det = det3(rows[0], rows[1], rows[2]);
  if (std::abs(det) < 1e-12) return false;
  for (int j = 0; j < 3; ++j) {
    auto m = rows;
    for (int k = 0; k < 3; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = rhs[static_cast<std::size_t>(k)];
    x[static_cast<std::size_t>(j)] = det3(m[0], m[1], m[2]) / det;
  }
  return true;
}

bool close(const Point& a, const Point& b) {
  return std::abs(a[0] - b[0]) <= kFeasTol && std::abs(a[1] - b[1]) <= kFeasTol && std::abs(a[2] - b[2]) <= kFeasTol;
}

}  // namespace

VertexEnumeration enumerate_vertices(std::span<const Halfspace> halfspaces, int dimension) {
  if (dimension != 2 && dimension != 3) throw std::invalid_argument("enumerate_vertices supports d = 2 or 3");
  const auto d = static_cast<std::size_t>(dimension);

  std::vector<Halfspace> system;
  for (const auto& hs : halfspaces) {
    Halfspace h = hs;
    for (std::size_t j = d; j < 3; ++j) h.normal[j] = 0.0;
    system.push_back(h);
  }
  const std::size_t user = system.size();
  for (std::size_t j = 0; j < d; ++j) {
    Point e{};
    e[j] = 1.0;
    system.push_back({e, kBox});
    e[j] = -1.0;
    system.push_back({e, kBox});
  }

  std::vector<Point> found;
  std::vector<bool> on_box;
  const std::size_t total = system.size();
  std::array<std::size_t, 3> pick{};
  auto consider = [&]() {
    std::array<Point, 3> rows{};
    std::array<double, 3> rhs{};
    for (std::size_t k = 0; k < d; ++k) {
      rows[k] = system[pick[k]].normal;
      rhs[k] = system[pick[k]].offset;
    }
    Point x{};
    if (!solve(dimension, rows, rhs, x)) return;
    if (!satisfies_all(system, x, kFeasTol)) return;
    for (const auto& f : found) {
      if (close(f, x)) return;
    }
    bool box = false;
    for (std::size_t c = user; c < total; ++c) box |= std::abs(system[c].slack(x)) <= kFeasTol * kBox;
    found.push_back(x);
    on_box.push_back(box);
  };
  for (pick[0] = 0; pick[0] < total; ++pick[0]) {
    for (pick[1] = pick[0] + 1; pick[1] < total; ++pick[1]) {
      if (d == 2) {
        consider();
        continue;
      }
      for (pick[2] = pick[1] + 1; pick[2] < total; ++pick[2]) consider();
    }
  }

  VertexEnumeration out;
  if (found.empty()) {
    out.status = EnumerationStatus::kEmpty;
    return out;
  }
  out.status = EnumerationStatus::kBounded;
  for (std::size_t v = 0; v < found.size(); ++v) {
    if (on_box[v]) {
      out.status = EnumerationStatus::kUnbounded;
    } else {
      out.vertices.push_back(found[v]);
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end(), [](const Point& a, const Point& b) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (std::abs(a[j] - b[j]) > kFeasTol) return a[j] < b[j];
    }
    return false;
  });
  return out;
}

}  // namespace bell::oracle
