#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropocalc/cycles.hpp"
#include "tropocalc/rational.hpp"
#include "tropocalc/tropical_algebra.hpp"

namespace tropo {

/// Vertex of a plane tropical curve together with the 2-cell of the Newton
/// subdivision dual to it.
struct CurveVertex {
  Point2 position;
  /// Vertices of the dual cell, counter-clockwise.
  std::vector<IVec2> dual_cell;
  /// Every exponent attaining the maximum at `position` (cell vertices plus any
  /// lattice points of the cell that lie on its lifted face).
  std::vector<IVec2> active_terms;
};

struct CurveEdge {
  EdgeKind kind = EdgeKind::bounded;
  int from = 0;
  int to = -1;
  /// Primitive, pointing away from `from`.
  IVec2 direction{};
  std::int64_t weight = 1;
  /// Endpoints of the dual subdivision edge.
  std::array<IVec2, 2> dual_edge{};
};

/// Corner locus of a planar tropical polynomial, built from the regular
/// subdivision of its Newton polygon.
struct PlanarCurve {
  TropPolynomial source;  // canonicalized
  std::vector<CurveVertex> vertices;
  std::vector<CurveEdge> edges;
  /// Cells of the dual subdivision; cell i is dual to vertex i.
  std::vector<std::vector<IVec2>> subdivision() const;
};

/// Throws DimensionMismatch unless f is bivariate and DegenerateInput when it
/// has fewer than two essential terms.
PlanarCurve build_curve(const TropPolynomial& f);

BalancingReport check_balancing(const PlanarCurve& curve);

/// d when the Newton polygon is the triangle (0,0), (d,0), (0,d).
std::optional<int> curve_degree(const PlanarCurve& curve);

/// Lattice length of the boundary of every bounded complementary region (one
/// per interior vertex of the subdivision), largest first.
std::vector<Rational> bounded_cycle_lengths(const PlanarCurve& curve);

Cycle1 as_cycle(const PlanarCurve& curve);

/// Exact membership of a point in the support of the curve.
bool on_curve(const PlanarCurve& curve, const Point2& point);

/// Ray-count degree of a planar cycle: d when the rays are d copies (with
/// weight) of each of (-1,0), (0,-1), (1,1) and nothing else.
std::optional<int> cycle_degree(const Cycle1& cycle);

}  // namespace tropo
