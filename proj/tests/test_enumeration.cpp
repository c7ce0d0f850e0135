#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "tropocalc/enumeration.hpp"
#include "tropocalc/error.hpp"
#include "tropocalc/planar_curve.hpp"

using namespace tropo;

namespace {

const CountOptions kOneThread{1};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

// Exact membership of p in edge e of a planar cycle.
bool on_edge(const Cycle1& c, std::size_t e, const Point2& p) {
  const CycleEdge& edge = c.edges()[e];
  const PointN& a = c.vertices()[edge.from];
  const Rational dx = p[0] - a[0], dy = p[1] - a[1];
  if (dx * edge.direction[1] != dy * edge.direction[0]) return false;
  const Rational along = dx * edge.direction[0] + dy * edge.direction[1];
  if (along < 0) return false;
  if (edge.kind == EdgeKind::ray) return true;
  const PointN& b = c.vertices()[edge.to];
  return along <= (b[0] - a[0]) * edge.direction[0] + (b[1] - a[1]) * edge.direction[1];
}

int first_betti(const Cycle1& c) {
  int bounded = 0;
  for (const auto& e : c.edges()) bounded += e.kind == EdgeKind::bounded;
  return bounded - static_cast<int>(c.vertices().size()) + 1;
}

void check_solutions(const CountResult& r) {
  std::int64_t n = 0, w = 0;
  for (const auto& s : r.solutions) {
    const Cycle1& c = s.solution.curve;
    CHECK(check_balancing_cycle(c).balanced());
    CHECK(cycle_degree(c) == r.d);
    CHECK(first_betti(c) == r.g);
    REQUIRE(s.solution.incidence.size() == r.points.size());
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      CHECK(on_edge(c, s.solution.incidence[i], r.points[i]));
    }
    CHECK(s.m == curve_multiplicity(c));
    CHECK(s.m_real == real_multiplicity(c));
    CHECK(s.m > 0);
    n += s.m;
    w += s.m_real;
  }
  CHECK(r.N_trop == n);
  CHECK(r.W_trop == w);
}

std::vector<std::int64_t> partition(const CountResult& r) {
  std::vector<std::int64_t> out;
  for (const auto& s : r.solutions) out.push_back(s.m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("constraint count") {
  CHECK(constraint_count(1, 0) == 2);
  CHECK(constraint_count(3, 0) == 8);
  CHECK(constraint_count(3, 1) == 9);
}

TEST_CASE("vertex multiplicity") {
  const std::vector<IVec2> line{{-1, 0}, {0, -1}, {1, 1}};
  CHECK(vertex_multiplicity(line) == 1);
  CHECK(vertex_real_sign(line) == 1);
  // Any two of the three vectors give the same determinant.
  std::vector<IVec2> heavy{{1, 1}, {1, -1}, {-2, 0}};
  for (int turn = 0; turn < 3; ++turn) {
    CHECK(vertex_multiplicity(heavy) == 2);
    std::rotate(heavy.begin(), heavy.begin() + 1, heavy.end());
  }
  const std::vector<IVec2> three{{-1, -1}, {-1, 2}, {2, -1}};
  CHECK(vertex_multiplicity(three) == 3);
  CHECK(vertex_real_sign(three) == -1);
  const std::vector<IVec2> unbalanced{{1, 0}, {0, 1}, {1, 1}};
  CHECK(code_of([&] { vertex_multiplicity(unbalanced); }) == ErrorCode::InvalidArgument);
  const std::vector<IVec2> two{{1, 0}, {-1, 0}};
  CHECK(code_of([&] { vertex_multiplicity(two); }) == ErrorCode::NotTrivalent);
}

TEST_CASE("real sign agrees with a direct count of interior points") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  int checked = 0;
  while (checked < 300) {
    const IVec2 u{coord(rng), coord(rng)}, v{coord(rng), coord(rng)};
    if (det(u, v) == 0) continue;
    const std::vector<IVec2> star{u, v, {-u[0] - v[0], -u[1] - v[1]}};
    // The dual triangle has sides u, v, -(u + v) turned by a quarter.
    const IVec2 uv{u[0] + v[0], u[1] + v[1]};
    const std::int64_t inside = oracle::interior_points(u, uv);
    CHECK(vertex_real_sign(star) == (inside % 2 ? -1 : 1));
    CHECK(vertex_multiplicity(star) == std::abs(det(u, v)));
    ++checked;
  }
}

TEST_CASE("types") {
  CHECK(rational_types(1).size() == 1);
  for (int d = 1; d <= 3; ++d) {
    for (const auto& t : rational_types(d)) {
      CHECK(t.ends == 3 * d);
      CHECK(t.nodes == 2 * t.ends - 2);
      CHECK(t.edges.size() == static_cast<std::size_t>(2 * t.ends - 3));
    }
  }
  const auto elliptic = elliptic_cubic_types();
  CHECK(elliptic.size() == 79);
  for (const auto& t : elliptic) {
    CHECK(t.ends == 9);
    CHECK(static_cast<int>(t.edges.size()) - t.nodes + 1 == 1);
    // Every trivalent node is balanced.
    std::vector<IVec2> sum(t.nodes, IVec2{0, 0});
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      sum[t.edges[e][0]][0] += t.vectors[e][0];
      sum[t.edges[e][0]][1] += t.vectors[e][1];
      sum[t.edges[e][1]][0] -= t.vectors[e][0];
      sum[t.edges[e][1]][1] -= t.vectors[e][1];
    }
    for (int v = t.ends; v < t.nodes; ++v) CHECK(sum[v] == IVec2{0, 0});
  }
}

TEST_CASE("line through two points") {
  const auto r = count_curves(1, 0, {Point2{0, 0}, Point2{5, 7}}, kOneThread);
  CHECK(r.N_trop == 1);
  REQUIRE(r.solutions.size() == 1);
  // (0,0) on the downward ray and (5,7) on the diagonal ray of a line with
  // vertex (0,2).
  CHECK(r.solutions[0].solution.curve.vertices() == std::vector<PointN>{{0, 2}});
  check_solutions(r);
}

TEST_CASE("degrees one and two over seeds") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CAPTURE(seed);
    for (int d = 1; d <= 2; ++d) {
      const auto r = count_curves(d, 0, sample_configuration(d, 0, seed), kOneThread);
      CHECK(r.N_trop == 1);
      CHECK(r.W_trop == 1);
      check_solutions(r);
    }
  }
}

TEST_CASE("rational cubics") {
  for (std::uint64_t seed : {3u, 4u}) {
    CAPTURE(seed);
    const auto r = count_curves(3, 0, sample_configuration(3, 0, seed));
    CHECK(r.N_trop == 12);
    CHECK(r.W_trop == 8);
    const auto p = partition(r);
    const bool eight = p == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1, 1, 4};
    const bool nine = p == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3};
    CHECK((eight || nine));
    check_solutions(r);
  }
}

TEST_CASE("welschinger count") {
  CHECK(welschinger_count(2, sample_configuration(2, 0, 5), kOneThread) == 1);
}

TEST_CASE("sampler") {
  const auto a = sample_configuration(3, 0, 9);
  CHECK(a == sample_configuration(3, 0, 9));
  CHECK(a != sample_configuration(3, 0, 10));
  CHECK(a.size() == 8);
  CHECK(sample_configuration(3, 1, 9).size() == 9);
  for (const auto& p : a) {
    for (const auto& x : p) {
      CHECK(20 % x.get_den() == 0);
      CHECK(abs(x) <= 50000);
    }
  }
}

TEST_CASE("thread count does not change the result") {
  const auto points = sample_configuration(2, 0, 6);
  const auto one = count_curves(2, 0, points, {1});
  const auto four = count_curves(2, 0, points, {4});
  CHECK(one.N_trop == four.N_trop);
  REQUIRE(one.solutions.size() == four.solutions.size());
  for (std::size_t i = 0; i < one.solutions.size(); ++i) {
    CHECK(one.solutions[i].solution.curve == four.solutions[i].solution.curve);
  }
}

TEST_CASE("errors") {
  // Two points on a horizontal line: a line through them is not rigid.
  CHECK(code_of([] { count_curves(1, 0, {Point2{0, 0}, Point2{5, 0}}, kOneThread); }) ==
        ErrorCode::NonGenericConfiguration);
  CHECK(code_of([] { count_curves(1, 0, {Point2{0, 0}, Point2{3, 3}}, kOneThread); }) ==
        ErrorCode::NonGenericConfiguration);
  CHECK(code_of([] { count_curves(4, 0, {}, kOneThread); }) == ErrorCode::UnsupportedDegree);
  CHECK(code_of([] { count_curves(2, 1, {}, kOneThread); }) == ErrorCode::UnsupportedDegree);
  CHECK(code_of([] { count_curves(1, 0, {Point2{0, 0}}, kOneThread); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { sample_configuration(0, 0, 1); }) == ErrorCode::InvalidArgument);
}

}  // TEST_SUITE

TEST_SUITE("enumeration_genus1") {

TEST_CASE("elliptic cubics through nine points") {
  for (std::uint64_t seed : {1u, 2u}) {
    CAPTURE(seed);
    const auto r = count_curves(3, 1, sample_configuration(3, 1, seed));
    CHECK(r.N_trop == 1);
    check_solutions(r);
  }
}

}  // TEST_SUITE
