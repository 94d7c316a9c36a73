#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bell/geometry.hpp"
#include "bell/model.hpp"

namespace bell {

inline constexpr double kCheckTolerance = 1e-9;

struct Verdict {
  bool pass = false;
  double slack = 0.0;
};

/// S <= 2 + (3/4) m + 2 h; slack = 2 + (3/4) m + 2 h - s.
Verdict check_theorem1(double m, double h, double s, double tol = kCheckTolerance);

/// An (m, h, s) triple with its five affine slacks against the polyhedron P.
struct TradeoffPoint {
  double m = 0.0;
  double h = 0.0;
  double s = 0.0;

  double b1() const noexcept { return 4.0 - s; }
  double b2() const noexcept { return 3.0 * m + 2.0 - s; }
  double b3() const noexcept { return s - m - 2.0; }
  double b4() const noexcept { return 1.0 - h; }
  double b5() const noexcept { return h - s / 2.0 + 3.0 * m / 8.0 + 1.0; }

  std::array<double, 5> slacks() const noexcept { return {b1(), b2(), b3(), b4(), b5()}; }
};

struct Theorem2Verdict {
  bool pass = false;
  std::array<double, 5> slacks{};  // b1..b5
  /// Name of the first failing constraint ("b1".."b5"), empty on pass.
  std::string violated;
};

/// b1, b2, b3, b5 >= -tol and b4 > 0 (h < 1 strictly).
Theorem2Verdict check_theorem2(const TradeoffPoint& p, double tol = kCheckTolerance);

struct CardinalityVerdict {
  bool pass = false;
  std::size_t n = 0;
  double m = 0.0;
  double h = 0.0;
  double s_opt = 0.0;
  double lower = 0.0;  // 2 + M
  double upper = 0.0;  // the n-specific upper bound on S_opt
  std::string clause;  // "n=1", "n=2", "n=3", "n>=4"
};

/// The per-#(Lambda) classification of (M, H, S_opt). The n = 2 equality is
/// checked as |2 + M - S_opt| <= tol. For n >= 3 the lower bound 2 + M is
/// also asserted: it holds for every separable model, since
/// sum_l min_i p(l|i) <= 1 - M/2.
CardinalityVerdict check_cardinality_bound(const HiddenInput& input, double tol = kCheckTolerance);

/// h >= m/8 - tol.
bool check_hm(double m, double h, double tol = kCheckTolerance);

enum class RegionKind { kSlice, kUnion, kPolyhedron };  // w_k, W_k0, closure of P

struct RegionSpec {
  RegionKind kind = RegionKind::kPolyhedron;
  double parameter = 0.0;  // k or k0; unused for the polyhedron
  int dimension = 3;       // 2 for the (m,h) regions, 3 for (m,h,s)
  /// Vertices of the closure (h <= 1). Planar regions list them
  /// counter-clockwise with coincident vertices merged.
  std::vector<Point> vertices;
  std::vector<Halfspace> halfspaces;
};

/// Throws std::out_of_range for a planar parameter outside [0, 2].
RegionSpec region(RegionKind kind, double parameter = 0.0);

/// Membership in w_k / W_k0 with h < 1 strict; tol loosens the closed faces.
bool in_slice(double m, double h, double k, double tol = 0.0) noexcept;
bool in_union(double m, double h, double k0, double tol = 0.0) noexcept;

struct BoundarySamples {
  int dimension = 2;
  std::vector<Point> points;
  /// Edges as vertex index pairs (polyhedron only; points are the vertices).
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Closed boundary polyline of a planar region, spaced at most `step` apart,
/// or the vertices plus edges of the polyhedron. Every emitted point is
/// re-checked against the half-spaces within 1e-9.
/// Throws std::invalid_argument unless step > 0.
BoundarySamples region_boundary_samples(const RegionSpec& spec, double step);

}  // namespace bell
