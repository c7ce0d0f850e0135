#include "tropocalc/planar_curve.hpp"

#include <algorithm>
#include <map>

#include "tropocalc/convex.hpp"
#include "tropocalc/error.hpp"

namespace tropo {

namespace {

IVec2 to_ivec(const Exponent& j) { return {j[0], j[1]}; }

struct Term {
  IVec2 exponent;
  Rational value;
};

Rational affine(const Term& t, const Point2& x) {
  return t.value + t.exponent[0] * x[0] + t.exponent[1] * x[1];
}

std::vector<IVec2> active_at(const std::vector<Term>& terms, const Point2& x) {
  Rational best = affine(terms.front(), x);
  for (const auto& t : terms) best = std::max(best, affine(t, x));
  std::vector<IVec2> out;
  for (const auto& t : terms) {
    if (affine(t, x) == best) out.push_back(t.exponent);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Outward normal of a counter-clockwise polygon along the edge a -> b.
IVec2 outward_normal(const IVec2& a, const IVec2& b) {
  return primitive(IVec2{b[1] - a[1], -(b[0] - a[0])});
}

std::int64_t lattice_gcd(const IVec2& a, const IVec2& b) {
  auto g = gcd(b[0] - a[0], b[1] - a[1]);
  return g < 0 ? -g : g;
}

std::optional<Rational> multiple_of(const Point2& from, const Point2& to, const IVec2& u) {
  Rational dx = to[0] - from[0];
  Rational dy = to[1] - from[1];
  // Parallel to u iff the cross product vanishes.
  if (dx * u[1] - dy * u[0] != 0) return std::nullopt;
  return u[0] != 0 ? Rational(dx / u[0]) : Rational(dy / u[1]);
}

void build_two_dimensional(PlanarCurve& curve, const std::vector<Term>& terms,
                           const std::vector<Term>& essential) {
  std::map<Point2, std::vector<IVec2>> cells;
  const std::size_t m = essential.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        const auto& t1 = essential[a];
        const auto& t2 = essential[b];
        const auto& t3 = essential[c];
        const std::int64_t dx2 = t2.exponent[0] - t1.exponent[0];
        const std::int64_t dy2 = t2.exponent[1] - t1.exponent[1];
        const std::int64_t dx3 = t3.exponent[0] - t1.exponent[0];
        const std::int64_t dy3 = t3.exponent[1] - t1.exponent[1];
        const std::int64_t dt = dx2 * dy3 - dy2 * dx3;
        if (dt == 0) continue;
        // <j2 - j1, x> = a1 - a2 and <j3 - j1, x> = a1 - a3.
        const Rational b0 = t1.value - t2.value;
        const Rational b1 = t1.value - t3.value;
        Point2 x{Rational((b0 * dy3 - dy2 * b1) / dt), Rational((dx2 * b1 - b0 * dx3) / dt)};
        if (cells.count(x)) continue;
        const Rational top = affine(t1, x);
        bool face = std::all_of(terms.begin(), terms.end(),
                                [&](const Term& t) { return affine(t, x) <= top; });
        if (face) cells.emplace(x, active_at(terms, x));
      }
    }
  }

  std::map<std::pair<IVec2, IVec2>, std::vector<std::pair<int, IVec2>>> dual_edges;
  for (auto& [x, active] : cells) {
    CurveVertex v;
    v.position = x;
    v.active_terms = active;
    v.dual_cell = convex::convex_hull(active);
    const int index = static_cast<int>(curve.vertices.size());
    const auto& poly = v.dual_cell;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const IVec2& p = poly[i];
      const IVec2& q = poly[(i + 1) % poly.size()];
      auto key = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
      dual_edges[key].emplace_back(index, outward_normal(p, q));
    }
    curve.vertices.push_back(std::move(v));
  }

  for (const auto& [key, sides] : dual_edges) {
    CurveEdge e;
    e.dual_edge = {key.first, key.second};
    e.weight = lattice_gcd(key.first, key.second);
    e.from = sides[0].first;
    e.direction = sides[0].second;
    if (sides.size() == 1) {
      e.kind = EdgeKind::ray;
      e.to = -1;
    } else if (sides.size() == 2) {
      e.kind = EdgeKind::bounded;
      e.to = sides[1].first;
      auto t = multiple_of(curve.vertices[e.from].position, curve.vertices[e.to].position,
                           e.direction);
      if (!t || *t <= 0) throw Error(ErrorCode::InvalidArgument, "inconsistent dual subdivision");
    } else {
      throw Error(ErrorCode::InvalidArgument, "subdivision edge shared by more than two cells");
    }
    curve.edges.push_back(e);
  }
}

// Newton polygon is a segment: the curve is a family of parallel lines, each
// stored as a 2-valent vertex with two opposite rays.
void build_one_dimensional(PlanarCurve& curve, const std::vector<Term>& terms,
                           std::vector<Term> essential) {
  std::sort(essential.begin(), essential.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (std::size_t i = 0; i + 1 < essential.size(); ++i) {
    const auto& ta = essential[i];
    const auto& tb = essential[i + 1];
    const IVec2 e{tb.exponent[0] - ta.exponent[0], tb.exponent[1] - ta.exponent[1]};
    const Rational scale = (ta.value - tb.value) / (e[0] * e[0] + e[1] * e[1]);
    CurveVertex v;
    v.position = {Rational(scale * e[0]), Rational(scale * e[1])};
    v.active_terms = active_at(terms, v.position);
    v.dual_cell = {ta.exponent, tb.exponent};
    const int index = static_cast<int>(curve.vertices.size());
    curve.vertices.push_back(std::move(v));
    const IVec2 u = outward_normal(ta.exponent, tb.exponent);
    const std::int64_t w = lattice_gcd(ta.exponent, tb.exponent);
    curve.edges.push_back({EdgeKind::ray, index, -1, u, w, {ta.exponent, tb.exponent}});
    curve.edges.push_back(
        {EdgeKind::ray, index, -1, IVec2{-u[0], -u[1]}, w, {ta.exponent, tb.exponent}});
  }
}

}  // namespace

std::vector<std::vector<IVec2>> PlanarCurve::subdivision() const {
  std::vector<std::vector<IVec2>> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(v.dual_cell);
  return out;
}

PlanarCurve build_curve(const TropPolynomial& f) {
  if (f.dimension() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "plane curves need a bivariate polynomial");
  }
  const auto essential_set = essential_support(f);
  if (essential_set.size() < 2) {
    throw Error(ErrorCode::DegenerateInput, "a single essential monomial has an empty corner locus");
  }
  PlanarCurve curve{canonicalize(f), {}, {}};
  std::vector<Term> terms;
  for (const auto& [j, a] : curve.source.terms()) terms.push_back({to_ivec(j), a});
  std::vector<Term> essential;
  std::vector<IVec2> essential_points;
  for (const auto& j : essential_set) {
    essential.push_back({to_ivec(j), f.terms().at(j)});
    essential_points.push_back(to_ivec(j));
  }
  if (convex::convex_hull(essential_points).size() >= 3) {
    build_two_dimensional(curve, terms, essential);
  } else {
    build_one_dimensional(curve, terms, essential);
  }
  return curve;
}

Cycle1 as_cycle(const PlanarCurve& curve) {
  std::vector<PointN> vertices;
  vertices.reserve(curve.vertices.size());
  for (const auto& v : curve.vertices) vertices.push_back({v.position[0], v.position[1]});
  std::vector<CycleEdge> edges;
  edges.reserve(curve.edges.size());
  for (const auto& e : curve.edges) {
    edges.push_back({e.kind, e.from, e.to, {e.direction[0], e.direction[1]}, e.weight});
  }
  return Cycle1(2, std::move(vertices), std::move(edges));
}

BalancingReport check_balancing(const PlanarCurve& curve) {
  return check_balancing_cycle(as_cycle(curve));
}

std::optional<int> curve_degree(const PlanarCurve& curve) {
  std::vector<IVec2> support;
  for (const auto& [j, a] : curve.source.terms()) support.push_back(to_ivec(j));
  auto hull = convex::convex_hull(support);
  if (hull.size() != 3) return std::nullopt;
  std::sort(hull.begin(), hull.end());
  const std::int64_t d = hull[2][0];
  if (d <= 0) return std::nullopt;
  if (hull[0] == IVec2{0, 0} && hull[1] == IVec2{0, d} && hull[2] == IVec2{d, 0}) {
    return static_cast<int>(d);
  }
  return std::nullopt;
}

std::vector<Rational> bounded_cycle_lengths(const PlanarCurve& curve) {
  std::vector<IVec2> support;
  for (const auto& [j, a] : curve.source.terms()) support.push_back(to_ivec(j));
  const auto hull = convex::convex_hull(support);
  std::map<IVec2, Rational> around;
  if (hull.size() >= 3) {
    auto on_boundary = [&](const IVec2& p) {
      for (std::size_t i = 0; i < hull.size(); ++i) {
        std::array<IVec2, 2> side{hull[i], hull[(i + 1) % hull.size()]};
        if (convex::polygon_contains(side, p)) return true;
      }
      return false;
    };
    for (const auto& v : curve.vertices) {
      for (const auto& p : v.dual_cell) {
        if (!on_boundary(p)) around.emplace(p, Rational(0));
      }
    }
    for (const auto& e : curve.edges) {
      if (e.kind != EdgeKind::bounded) continue;
      auto t = multiple_of(curve.vertices[e.from].position, curve.vertices[e.to].position,
                           e.direction);
      for (const auto& p : e.dual_edge) {
        if (auto it = around.find(p); it != around.end()) it->second += *t;
      }
    }
  }
  std::vector<Rational> out;
  for (auto& [p, length] : around) out.push_back(length);
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return out;
}

bool on_curve(const PlanarCurve& curve, const Point2& point) {
  for (const auto& e : curve.edges) {
    const auto& from = curve.vertices[e.from].position;
    auto t = multiple_of(from, point, e.direction);
    if (!t || *t < 0) continue;
    if (e.kind == EdgeKind::ray) return true;
    auto length = multiple_of(from, curve.vertices[e.to].position, e.direction);
    if (*t <= *length) return true;
  }
  for (const auto& v : curve.vertices) {
    if (v.position == point) return true;
  }
  return false;
}

std::optional<int> cycle_degree(const Cycle1& cycle) {
  if (cycle.ambient_dim() != 2) return std::nullopt;
  std::map<DirectionN, std::int64_t> rays;
  for (const auto& e : cycle.edges()) {
    if (e.kind == EdgeKind::ray) rays[e.direction] += e.weight;
  }
  const std::int64_t d = rays[{-1, 0}];
  if (d <= 0 || rays.size() != 3 || rays[{0, -1}] != d || rays[{1, 1}] != d) return std::nullopt;
  return static_cast<int>(d);
}

}  // namespace tropo
