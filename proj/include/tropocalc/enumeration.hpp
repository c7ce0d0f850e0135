#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tropocalc/cycles.hpp"
#include "tropocalc/rational.hpp"

namespace tropo {

/// Number of point conditions for degree d and genus g: 3d - 1 + g.
int constraint_count(int d, int g);

/// Abstract trivalent graph with unbounded ends, together with the weighted
/// integer vector carried by each edge. Nodes 0..ends-1 are the ends (1-valent);
/// the remaining nodes are trivalent vertices.
struct PlaneType {
  int ends = 0;
  int nodes = 0;
  std::vector<std::array<int, 2>> edges;
  /// Weighted direction of edge i, pointing from edges[i][0] to edges[i][1].
  std::vector<IVec2> vectors;
};

/// Trivalent trees with 3d ends of directions (-1,0), (0,-1), (1,1), one type
/// per isomorphism class, keeping only those with nonzero edge vectors and no
/// vertex with parallel edges.
std::vector<PlaneType> rational_types(int d);

/// Dual graphs of the unimodular triangulations of the degree-3 triangle.
std::vector<PlaneType> elliptic_cubic_types();

/// |det| of two of the three weighted edge vectors leaving a vertex. Throws
/// NotTrivalent unless exactly three vectors are given, InvalidArgument when
/// they do not sum to zero.
std::int64_t vertex_multiplicity(std::span<const IVec2> weighted);

/// (-1)^(interior lattice points of the dual triangle), by Pick's formula.
int vertex_real_sign(std::span<const IVec2> weighted);

/// Product of vertex multiplicities. Throws NotTrivalent.
std::int64_t curve_multiplicity(const Cycle1& curve);

/// 0 with an even edge weight, otherwise the product of vertex signs.
int real_multiplicity(const Cycle1& curve);

struct EmbeddedSolution {
  Cycle1 curve;
  /// incidence[i] is the edge carrying point i.
  std::vector<std::size_t> incidence;
};

struct CountedSolution {
  EmbeddedSolution solution;
  std::int64_t m = 0;
  int m_real = 0;
};

struct CountResult {
  int d = 0;
  int g = 0;
  std::vector<Point2> points;
  std::vector<CountedSolution> solutions;
  std::int64_t N_trop = 0;
  std::int64_t W_trop = 0;
};

struct CountOptions {
  /// 0 picks TROPOCALC_THREADS, then the hardware concurrency.
  unsigned threads = 0;
};

/// Tropical curves of degree d and genus g through the points, with
/// multiplicities. Supported: g = 0 with d <= 3, and (d, g) = (3, 1).
/// Throws UnsupportedDegree, InvalidArgument (wrong number of points) and
/// NonGenericConfiguration.
CountResult count_curves(int d, int g, const std::vector<Point2>& points,
                         const CountOptions& options = {});

/// Sum of real multiplicities of the rational curves through the points.
std::int64_t welschinger_count(int d, const std::vector<Point2>& points,
                               const CountOptions& options = {});

/// Seeded configuration of constraint_count(d, g) points with coordinates in
/// (1/20)Z, |x| <= 50000, no two points on a line of a possible edge slope.
std::vector<Point2> sample_configuration(int d, int g, std::uint64_t seed);

}  // namespace tropo
