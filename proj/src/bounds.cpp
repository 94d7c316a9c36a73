#include "bell/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bell/measures.hpp"

namespace bell {

Verdict check_theorem1(double m, double h, double s, double tol) {
  const double slack = 2.0 + 0.75 * m + 2.0 * h - s;
  return {slack >= -tol, slack};
}

Theorem2Verdict check_theorem2(const TradeoffPoint& p, double tol) {
  Theorem2Verdict v;
  v.slacks = p.slacks();
  static constexpr const char* kNames[] = {"b1", "b2", "b3", "b4", "b5"};
  for (std::size_t j = 0; j < 5; ++j) {
    const bool ok = j == 3 ? v.slacks[j] > 0.0 : v.slacks[j] >= -tol;
    if (!ok && v.violated.empty()) v.violated = kNames[j];
  }
  v.pass = v.violated.empty();
  return v;
}

CardinalityVerdict check_cardinality_bound(const HiddenInput& input, double tol) {
  const auto r = measure(input);
  CardinalityVerdict v;
  v.n = input.size();
  v.m = r.m;
  v.h = r.h;
  v.s_opt = r.s_opt;
  v.lower = 2.0 + r.m;
  const double relaxed = 0.75 * r.m + 2.0 * r.h;
  if (v.n == 1) {
    v.clause = "n=1";
    v.upper = 2.0;
    v.pass = std::abs(r.s_opt - 2.0) <= tol && std::abs(r.m) <= tol && std::abs(r.h) <= tol;
  } else if (v.n == 2) {
    v.clause = "n=2";
    v.upper = 2.0 + std::min(relaxed, 2.0);
    v.pass = std::abs(v.lower - r.s_opt) <= tol && r.s_opt <= v.upper + tol;
  } else {
    const double cap = v.n == 3 ? 2.0 * r.m : 3.0 * r.m;
    v.clause = v.n == 3 ? "n=3" : "n>=4";
    v.upper = 2.0 + std::min({cap, relaxed, 2.0});
    v.pass = v.lower <= r.s_opt + tol && r.s_opt <= v.upper + tol;
  }
  return v;
}

bool check_hm(double m, double h, double tol) { return h >= m / 8.0 - tol; }

namespace {

void check_parameter(double p) {
  if (!(p >= 0.0 && p <= 2.0)) {
    throw std::out_of_range("region parameter must lie in [0, 2], got " + std::to_string(p));
  }
}

std::vector<Point> merge_coincident(const std::vector<Point>& ring) {
  constexpr double kEps = 1e-12;
  auto same = [](const Point& a, const Point& b) {
    return std::abs(a[0] - b[0]) <= kEps && std::abs(a[1] - b[1]) <= kEps && std::abs(a[2] - b[2]) <= kEps;
  };
  std::vector<Point> out;
  for (const auto& p : ring) {
    if (out.empty() || !same(out.back(), p)) out.push_back(p);
  }
  while (out.size() > 1 && same(out.front(), out.back())) out.pop_back();
  return out;
}

}  // namespace

RegionSpec region(RegionKind kind, double parameter) {
  RegionSpec spec;
  spec.kind = kind;
  switch (kind) {
    case RegionKind::kSlice: {
      check_parameter(parameter);
      const double k = parameter;
      spec.parameter = k;
      spec.dimension = 2;
      spec.halfspaces = {
          {{-1.0, 0.0, 0.0}, -k / 3.0},
          {{1.0, 0.0, 0.0}, k},
          {{-3.0 / 8.0, -1.0, 0.0}, -k / 2.0},
          {{0.0, 1.0, 0.0}, 1.0},
      };
      spec.vertices = merge_coincident({{k / 3.0, 3.0 * k / 8.0, 0.0},
                                        {k, k / 8.0, 0.0},
                                        {k, 1.0, 0.0},
                                        {k / 3.0, 1.0, 0.0}});
      break;
    }
    case RegionKind::kUnion: {
      check_parameter(parameter);
      const double k0 = parameter;
      spec.parameter = k0;
      spec.dimension = 2;
      spec.halfspaces = {
          {{-1.0, 0.0, 0.0}, -k0 / 3.0},
          {{1.0, 0.0, 0.0}, 2.0},
          {{1.0 / 8.0, -1.0, 0.0}, 0.0},
          {{-3.0 / 8.0, -1.0, 0.0}, -k0 / 2.0},
          {{0.0, 1.0, 0.0}, 1.0},
      };
      spec.vertices = merge_coincident({{k0 / 3.0, 3.0 * k0 / 8.0, 0.0},
                                        {k0, k0 / 8.0, 0.0},
                                        {2.0, 0.25, 0.0},
                                        {2.0, 1.0, 0.0},
                                        {k0 / 3.0, 1.0, 0.0}});
      break;
    }
    case RegionKind::kPolyhedron:
      spec.dimension = 3;
      spec.halfspaces = {
          {{0.0, 0.0, 1.0}, 4.0},               // b1 = 4 - s
          {{-3.0, 0.0, 1.0}, 2.0},              // b2 = 3m + 2 - s
          {{1.0, 0.0, -1.0}, -2.0},             // b3 = s - m - 2
          {{0.0, 1.0, 0.0}, 1.0},               // b4 = 1 - h, closed
          {{-3.0 / 8.0, -1.0, 0.5}, 1.0},       // b5 = h - s/2 + 3m/8 + 1
      };
      spec.vertices = {{0.0, 0.0, 2.0},         {0.0, 1.0, 2.0},  {2.0 / 3.0, 0.75, 4.0},
                       {2.0 / 3.0, 1.0, 4.0},   {2.0, 0.25, 4.0}, {2.0, 1.0, 4.0}};
      break;
  }
  return spec;
}

bool in_slice(double m, double h, double k, double tol) noexcept {
  return k / 3.0 - tol <= m && m <= k + tol && h >= -3.0 * m / 8.0 + k / 2.0 - tol && h < 1.0;
}

bool in_union(double m, double h, double k0, double tol) noexcept {
  return k0 / 3.0 - tol <= m && m <= 2.0 + tol && h >= m / 8.0 - tol && h >= -3.0 * m / 8.0 + k0 / 2.0 - tol &&
         h < 1.0;
}

BoundarySamples region_boundary_samples(const RegionSpec& spec, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("sampling step must be positive");
  constexpr double kMembershipTol = 1e-9;
  BoundarySamples out;
  out.dimension = spec.dimension;

  if (spec.kind == RegionKind::kPolyhedron) {
    out.points = spec.vertices;
    std::vector<std::vector<std::size_t>> active(spec.vertices.size());
    for (std::size_t v = 0; v < spec.vertices.size(); ++v) {
      for (std::size_t c = 0; c < spec.halfspaces.size(); ++c) {
        if (std::abs(spec.halfspaces[c].slack(spec.vertices[v])) <= kMembershipTol) active[v].push_back(c);
      }
    }
    for (std::size_t a = 0; a < active.size(); ++a) {
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        std::vector<std::size_t> common;
        std::set_intersection(active[a].begin(), active[a].end(), active[b].begin(), active[b].end(),
                              std::back_inserter(common));
        if (common.size() + 1 >= static_cast<std::size_t>(spec.dimension)) out.edges.emplace_back(a, b);
      }
    }
  } else {
    const auto& ring = spec.vertices;
    for (std::size_t j = 0; j < ring.size(); ++j) {
      const Point& from = ring[j];
      const Point& to = ring[(j + 1) % ring.size()];
      const double len = std::hypot(to[0] - from[0], to[1] - from[1]);
      const auto segments = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / step - 1e-12)));
      for (std::size_t t = 0; t < segments; ++t) {
        const double w = static_cast<double>(t) / static_cast<double>(segments);
        out.points.push_back({from[0] + w * (to[0] - from[0]), from[1] + w * (to[1] - from[1]), 0.0});
      }
    }
    if (!ring.empty()) out.points.push_back(ring.front());
  }

  for (const auto& p : out.points) {
    if (!satisfies_all(spec.halfspaces, p, kMembershipTol)) {
      throw std::logic_error("boundary sample outside its region");
    }
  }
  return out;
}

}  // namespace bell
