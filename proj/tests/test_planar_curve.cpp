#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tropocalc/error.hpp"
#include "tropocalc/planar_curve.hpp"

using namespace tropo;

namespace {

const char* const kLine = "1 + 0x + 0y";
const char* const kConic = "10+5.5x+0x^2+8.5y+6.5y^2+4.5xy";
const char* const kLeftCubic = "5+4x+2.25x^2+0x^3+4y+2.5xy+1x^2y+3y^2+1.5xy^2+1.5y^3";
const char* const kRightCubic =
    "17.5+12.25x+7x^2+0x^3+16.75y+12xy+5.5x^2y+15.5y^2+10xy^2+13y^3";

PlanarCurve curve(const char* text) { return build_curve(parse_polynomial(text, 2)); }

std::vector<Point2> positions(const PlanarCurve& c) {
  std::vector<Point2> out;
  for (const auto& v : c.vertices) out.push_back(v.position);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<Rational, 2>> as_arrays(const std::vector<Point2>& p) {
  return {p.begin(), p.end()};
}

int count_kind(const PlanarCurve& c, EdgeKind kind) {
  return static_cast<int>(std::count_if(c.edges.begin(), c.edges.end(),
                                        [&](const CurveEdge& e) { return e.kind == kind; }));
}

std::vector<std::int64_t> heavy_weights(const PlanarCurve& c) {
  std::vector<std::int64_t> out;
  for (const auto& e : c.edges) {
    if (e.weight >= 2) out.push_back(e.weight);
  }
  return out;
}

// Multiset of (direction, weight) over rays.
std::map<IVec2, std::int64_t> ray_profile(const PlanarCurve& c) {
  std::map<IVec2, std::int64_t> out;
  for (const auto& e : c.edges) {
    if (e.kind == EdgeKind::ray) out[e.direction] += e.weight;
  }
  return out;
}

Point2 random_point(std::mt19937_64& rng) {
  return {oracle::random_rational(rng, 15, 7), oracle::random_rational(rng, 15, 7)};
}

}  // namespace

TEST_SUITE("planar_curve") {

TEST_CASE("tropical line") {
  const auto c = curve(kLine);
  REQUIRE(c.vertices.size() == 1);
  CHECK(c.vertices[0].position == Point2{1, 1});
  CHECK(count_kind(c, EdgeKind::ray) == 3);
  CHECK(count_kind(c, EdgeKind::bounded) == 0);
  CHECK(ray_profile(c) == std::map<IVec2, std::int64_t>{{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 1}, 1}});
  CHECK(curve_degree(c) == 1);
  CHECK(check_balancing(c).balanced());
  CHECK(bounded_cycle_lengths(c).empty());
}

TEST_CASE("conic vertices agree with the tie-point oracle") {
  const auto c = curve(kConic);
  const auto expected = oracle::corner_vertices(parse_polynomial(kConic));
  CHECK(as_arrays(positions(c)) == expected);
  CHECK(expected == std::vector<std::array<Rational, 2>>{
                        {4, Rational(3, 2)}, {4, 2}, {Rational(9, 2), 1}, {Rational(11, 2), 1}});
  CHECK(count_kind(c, EdgeKind::bounded) == 3);
  CHECK(count_kind(c, EdgeKind::ray) == 6);
  CHECK(ray_profile(c) == std::map<IVec2, std::int64_t>{{{-1, 0}, 2}, {{0, -1}, 2}, {{1, 1}, 2}});
  CHECK(curve_degree(c) == 2);
  CHECK(heavy_weights(c).empty());
}

TEST_CASE("right cubic: one bounded cycle of length 9/2 and one weight-2 edge") {
  const auto c = curve(kRightCubic);
  CHECK(bounded_cycle_lengths(c) == std::vector<Rational>{Rational(9, 2)});
  CHECK(heavy_weights(c) == std::vector<std::int64_t>{2});
  CHECK(curve_degree(c) == 3);
  CHECK(check_balancing(c).balanced());
  CHECK(as_arrays(positions(c)) == oracle::corner_vertices(parse_polynomial(kRightCubic)));
}

TEST_CASE("left cubic: no bounded cycle and two weight-2 edges") {
  const auto c = curve(kLeftCubic);
  CHECK(bounded_cycle_lengths(c).empty());
  CHECK(heavy_weights(c) == std::vector<std::int64_t>{2, 2});
  CHECK(curve_degree(c) == 3);
  CHECK(check_balancing(c).balanced());
  CHECK(as_arrays(positions(c)) == oracle::corner_vertices(parse_polynomial(kLeftCubic)));
  // xy lies below the envelope of its neighbours, so no cell has it as a vertex.
  for (const auto& cell : c.subdivision()) {
    CHECK(std::find(cell.begin(), cell.end(), IVec2{1, 1}) == cell.end());
  }
}

TEST_CASE("curves over random polynomials are balanced and match the oracle") {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 60; ++n) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const auto f = n % 2 ? oracle::random_full(rng, d) : oracle::random_sparse(rng, d);
    const auto c = build_curve(f);
    CHECK(check_balancing(c).balanced());
    CHECK(check_balancing_cycle(as_cycle(c)).balanced());
    const auto expected = oracle::corner_vertices(f);
    if (!expected.empty()) CHECK(as_arrays(positions(c)) == expected);
  }
}

TEST_CASE("duality: edges are orthogonal to their dual edges with lattice-length weight") {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 40; ++n) {
    const auto c = build_curve(oracle::random_full(rng, 1 + static_cast<int>(rng() % 3)));
    for (const auto& e : c.edges) {
      const IVec2 dual{e.dual_edge[1][0] - e.dual_edge[0][0], e.dual_edge[1][1] - e.dual_edge[0][1]};
      CHECK(dual[0] * e.direction[0] + dual[1] * e.direction[1] == 0);
      CHECK(std::abs(gcd(dual[0], dual[1])) == e.weight);
    }
    // Number of cells equals the number of vertices.
    CHECK(c.subdivision().size() == c.vertices.size());
  }
}

TEST_CASE("sampled points on edges lie on the curve, generic points do not") {
  std::mt19937_64 rng(47);
  for (int n = 0; n < 40; ++n) {
    const auto f = oracle::random_full(rng, 1 + static_cast<int>(rng() % 3));
    const auto c = build_curve(f);
    for (const auto& e : c.edges) {
      const Point2& a = c.vertices[e.from].position;
      for (const Rational& t : {Rational(1, 3), Rational(1, 2), Rational(5, 7)}) {
        const Rational s = e.kind == EdgeKind::ray ? 4 * t : t;
        Point2 p;
        if (e.kind == EdgeKind::ray) {
          p = {a[0] + s * e.direction[0], a[1] + s * e.direction[1]};
        } else {
          const Point2& b = c.vertices[e.to].position;
          p = {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
        }
        CHECK(on_curve(c, p));
        const std::vector<Rational> x{p[0], p[1]};
        CHECK(argmax_terms(f, x).size() >= 2);
      }
    }
    for (int k = 0; k < 20; ++k) {
      const Point2 p = random_point(rng);
      const std::vector<Rational> x{p[0], p[1]};
      CHECK(on_curve(c, p) == (argmax_terms(canonicalize(f), x).size() >= 2));
    }
  }
}

TEST_CASE("degree from rays and from the Newton polygon") {
  CHECK(curve_degree(curve("0 + 0x^2 + 0y^2")) == 2);
  CHECK(!curve_degree(curve("0 + 0x + 0y + 0xy")).has_value());
  CHECK(cycle_degree(as_cycle(curve(kRightCubic))) == 3);
  CHECK(!cycle_degree(as_cycle(curve("0 + 0x + 0xy"))).has_value());
}

TEST_CASE("weights: the binomial 0 + 0x^2 gives a weight-2 vertical line") {
  const auto c = curve("0 + 0x^2");
  CHECK(count_kind(c, EdgeKind::ray) == 2);
  CHECK(heavy_weights(c) == std::vector<std::int64_t>{2, 2});
  for (const auto& e : c.edges) CHECK(e.direction[0] == 0);
  CHECK(on_curve(c, Point2{0, 17}));
  CHECK(!on_curve(c, Point2{Rational(1, 5), 0}));
}

TEST_CASE("negative control: an unbalanced star is reported") {
  const Cycle1 bad(2, {{0, 0}},
                   {{EdgeKind::ray, 0, -1, {1, 0}, 1},
                    {EdgeKind::ray, 0, -1, {0, 1}, 1},
                    {EdgeKind::ray, 0, -1, {-1, -1}, 2}});
  const auto report = check_balancing_cycle(bad);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].vertex == 0);
  CHECK(report.violations[0].residual == DirectionN{-1, -1});
}

TEST_CASE("errors") {
  for (const char* text : {"5", "3 + 1 + 0", "7x"}) {
    CAPTURE(text);
    try {
      curve(text);
      FAIL("expected DegenerateInput");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateInput);
    }
  }
  try {
    build_curve(parse_polynomial("1 + 0x + 0z"));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

}  // TEST_SUITE
