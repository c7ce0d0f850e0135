#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropocalc/rational.hpp"

namespace tropo {

enum class EdgeKind { bounded, ray };

using PointN = std::vector<Rational>;
using DirectionN = std::vector<std::int64_t>;

/// Edge of a weighted rational 1-complex. Bounded edges run from `from` to
/// `to`; rays start at `from` and have `to == -1`. `direction` is primitive and
/// points away from `from`.
struct CycleEdge {
  EdgeKind kind = EdgeKind::bounded;
  int from = 0;
  int to = -1;
  DirectionN direction;
  std::int64_t weight = 1;

  friend bool operator==(const CycleEdge&, const CycleEdge&) = default;
};

/// Weighted rational-slope graph in R^n. Construction checks the structural
/// invariants (primitive directions, nonzero weights, bounded displacements
/// that are positive multiples of their direction); balancing is a separate,
/// reportable property.
class Cycle1 {
 public:
  Cycle1(int ambient_dim, std::vector<PointN> vertices, std::vector<CycleEdge> edges);

  int ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<PointN>& vertices() const noexcept { return vertices_; }
  const std::vector<CycleEdge>& edges() const noexcept { return edges_; }

  /// Lattice length t of a bounded edge: to = from + t * direction.
  Rational lattice_length(std::size_t edge) const;

  friend bool operator==(const Cycle1&, const Cycle1&) = default;

 private:
  int ambient_dim_;
  std::vector<PointN> vertices_;
  std::vector<CycleEdge> edges_;
};

struct BalancingViolation {
  int vertex = 0;
  /// Sum of weight * outgoing primitive direction at the vertex.
  DirectionN residual;
};

struct BalancingReport {
  std::vector<BalancingViolation> violations;
  bool balanced() const noexcept { return violations.empty(); }
};

BalancingReport check_balancing_cycle(const Cycle1& cycle);

struct WeightedPoint {
  PointN position;
  std::int64_t weight = 0;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// Finite formal sum of points. Coincident positions are merged, zero totals
/// dropped, and points kept in lexicographic order of position.
class ZeroCycle {
 public:
  ZeroCycle() = default;
  explicit ZeroCycle(std::vector<WeightedPoint> points);

  const std::vector<WeightedPoint>& points() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }

  friend bool operator==(const ZeroCycle&, const ZeroCycle&) = default;

 private:
  std::vector<WeightedPoint> points_;
};

/// Sum of the weights.
std::int64_t degree(const ZeroCycle& z);

Cycle1 translate(const Cycle1& cycle, std::span<const Rational> shift);

/// Direction of the infinitesimal translation used to resolve non-transverse
/// intersections.
using Perturbation = Point2;

/// The two fixed generic directions: (1, 103993/33102) and
/// (1, -665857/470832), convergents of pi and -sqrt(2).
Perturbation primary_perturbation();
Perturbation fallback_perturbation();

/// Stable intersection of two planar 1-cycles using an explicit perturbation
/// direction. Returns nullopt when `direction` is not generic for this pair.
std::optional<ZeroCycle> stable_intersection(const Cycle1& first, const Cycle1& second,
                                             const Perturbation& direction);

/// Stable intersection with the primary direction, falling back to the second
/// one on degeneracy; when both are generic their results are cross-checked.
/// Throws AmbientDimUnsupported unless both cycles live in R^2.
ZeroCycle stable_intersection(const Cycle1& first, const Cycle1& second);

}  // namespace tropo
