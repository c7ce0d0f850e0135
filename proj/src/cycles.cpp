#include "tropocalc/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropocalc/error.hpp"

namespace tropo {

namespace {

bool is_primitive(const DirectionN& d) {
  std::int64_t g = 0;
  for (auto c : d) g = std::gcd(g, c);
  return g == 1;
}

// t with b - a = t * d, when it exists.
std::optional<Rational> displacement_multiple(const PointN& a, const PointN& b,
                                              const DirectionN& d) {
  std::optional<Rational> t;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Rational delta = b[i] - a[i];
    if (d[i] == 0) {
      if (delta != 0) return std::nullopt;
      continue;
    }
    Rational ti = delta / d[i];
    if (t && *t != ti) return std::nullopt;
    t = ti;
  }
  return t;
}

}  // namespace

Cycle1::Cycle1(int ambient_dim, std::vector<PointN> vertices, std::vector<CycleEdge> edges)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (ambient_dim_ <= 0) throw Error(ErrorCode::InvalidCycle, "ambient dimension must be positive");
  const auto n = static_cast<std::size_t>(ambient_dim_);
  for (const auto& v : vertices_) {
    if (v.size() != n) throw Error(ErrorCode::InvalidCycle, "vertex has wrong dimension");
  }
  const int nv = static_cast<int>(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const std::string tag = "edge " + std::to_string(i) + ": ";
    if (e.direction.size() != n) throw Error(ErrorCode::InvalidCycle, tag + "direction has wrong dimension");
    if (!is_primitive(e.direction)) throw Error(ErrorCode::InvalidCycle, tag + "direction is not primitive");
    if (e.weight == 0) throw Error(ErrorCode::InvalidCycle, tag + "zero weight");
    if (e.from < 0 || e.from >= nv) throw Error(ErrorCode::InvalidCycle, tag + "bad start vertex");
    if (e.kind == EdgeKind::ray) {
      if (e.to != -1) throw Error(ErrorCode::InvalidCycle, tag + "ray with an end vertex");
      continue;
    }
    if (e.to < 0 || e.to >= nv) throw Error(ErrorCode::InvalidCycle, tag + "bad end vertex");
    auto t = displacement_multiple(vertices_[e.from], vertices_[e.to], e.direction);
    if (!t || *t <= 0) {
      throw Error(ErrorCode::InvalidCycle, tag + "displacement is not a positive multiple of the direction");
    }
  }
}

Rational Cycle1::lattice_length(std::size_t edge) const {
  const auto& e = edges_.at(edge);
  if (e.kind != EdgeKind::bounded) throw Error(ErrorCode::InvalidArgument, "ray has no finite length");
  return *displacement_multiple(vertices_[e.from], vertices_[e.to], e.direction);
}

BalancingReport check_balancing_cycle(const Cycle1& cycle) {
  const auto n = static_cast<std::size_t>(cycle.ambient_dim());
  std::vector<DirectionN> sums(cycle.vertices().size(), DirectionN(n, 0));
  for (const auto& e : cycle.edges()) {
    for (std::size_t i = 0; i < n; ++i) sums[e.from][i] += e.weight * e.direction[i];
    if (e.kind == EdgeKind::bounded) {
      for (std::size_t i = 0; i < n; ++i) sums[e.to][i] -= e.weight * e.direction[i];
    }
  }
  BalancingReport report;
  for (std::size_t v = 0; v < sums.size(); ++v) {
    bool zero = std::all_of(sums[v].begin(), sums[v].end(), [](auto c) { return c == 0; });
    if (!zero) report.violations.push_back({static_cast<int>(v), sums[v]});
  }
  return report;
}

ZeroCycle::ZeroCycle(std::vector<WeightedPoint> points) {
  std::map<PointN, std::int64_t> merged;
  for (auto& p : points) merged[p.position] += p.weight;
  for (auto& [pos, w] : merged) {
    if (w != 0) points_.push_back({pos, w});
  }
}

std::int64_t degree(const ZeroCycle& z) {
  std::int64_t total = 0;
  for (const auto& p : z.points()) total += p.weight;
  return total;
}

Cycle1 translate(const Cycle1& cycle, std::span<const Rational> shift) {
  if (static_cast<int>(shift.size()) != cycle.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "translation vector has wrong dimension");
  }
  auto vertices = cycle.vertices();
  for (auto& v : vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
  }
  return Cycle1(cycle.ambient_dim(), std::move(vertices), cycle.edges());
}

Perturbation primary_perturbation() { return {Rational(1), Rational(103993, 33102)}; }

Perturbation fallback_perturbation() { return {Rational(1), Rational(-665857, 470832)}; }

namespace {

// Sign of a + b*eps for all sufficiently small eps > 0; 0 only when a = b = 0.
int eventual_sign(const Rational& a, const Rational& b) {
  if (a != 0) return sgn(a);
  return sgn(b);
}

}  // namespace

std::optional<ZeroCycle> stable_intersection(const Cycle1& first, const Cycle1& second,
                                             const Perturbation& direction) {
  if (first.ambient_dim() != 2 || second.ambient_dim() != 2) {
    throw Error(ErrorCode::AmbientDimUnsupported, "stable intersection is only implemented in R^2");
  }
  std::vector<WeightedPoint> hits;
  for (std::size_t i = 0; i < first.edges().size(); ++i) {
    const auto& e1 = first.edges()[i];
    const auto& p1 = first.vertices()[e1.from];
    const IVec2 u1{e1.direction[0], e1.direction[1]};
    std::optional<Rational> len1;
    if (e1.kind == EdgeKind::bounded) len1 = first.lattice_length(i);
    for (std::size_t j = 0; j < second.edges().size(); ++j) {
      const auto& e2 = second.edges()[j];
      const IVec2 u2{e2.direction[0], e2.direction[1]};
      const std::int64_t d = det(u1, u2);
      if (d == 0) continue;  // parallel edges separate under a generic shift
      const auto& p2 = second.vertices()[e2.from];
      // s*u1 - t*u2 = (p2 - p1) + eps*direction; Cramer with det(u1, -u2) = -d.
      const Rational rx = p2[0] - p1[0];
      const Rational ry = p2[1] - p1[1];
      const Rational& vx = direction[0];
      const Rational& vy = direction[1];
      Rational s0 = (rx * u2[1] - ry * u2[0]) / d;
      Rational s1 = (vx * u2[1] - vy * u2[0]) / d;
      Rational t0 = (rx * u1[1] - ry * u1[0]) / d;
      Rational t1 = (vx * u1[1] - vy * u1[0]) / d;

      const int s_low = eventual_sign(s0, s1);
      const int t_low = eventual_sign(t0, t1);
      if (s_low == 0 || t_low == 0) return std::nullopt;
      if (s_low < 0 || t_low < 0) continue;
      if (len1) {
        int s_high = eventual_sign(*len1 - s0, -s1);
        if (s_high == 0) return std::nullopt;
        if (s_high < 0) continue;
      }
      if (e2.kind == EdgeKind::bounded) {
        int t_high = eventual_sign(second.lattice_length(j) - t0, -t1);
        if (t_high == 0) return std::nullopt;
        if (t_high < 0) continue;
      }
      PointN at{p1[0] + s0 * u1[0], p1[1] + s0 * u1[1]};
      hits.push_back({std::move(at), e1.weight * e2.weight * (d < 0 ? -d : d)});
    }
  }
  return ZeroCycle(std::move(hits));
}

ZeroCycle stable_intersection(const Cycle1& first, const Cycle1& second) {
  auto primary = stable_intersection(first, second, primary_perturbation());
  auto fallback = stable_intersection(first, second, fallback_perturbation());
  if (primary && fallback && !(*primary == *fallback)) {
    throw Error(ErrorCode::InvalidArgument,
                "stable intersection depends on the perturbation direction");
  }
  if (primary) return *primary;
  if (fallback) return *fallback;
  throw Error(ErrorCode::InvalidArgument, "no generic perturbation direction found");
}

}  // namespace tropo
