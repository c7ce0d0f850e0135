#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "graphs.hpp"
#include "tropocalc/error.hpp"
#include "tropocalc/metric_graph.hpp"

using namespace tropo;

namespace {

using Matrix = std::vector<std::vector<Rational>>;
using namespace graphs;

// Four leaves with zero-length pendants: either a star, or a split ij|kl with
// Z_ij = Z_kl = 0 and the other four distances equal to the internal length.
bool four_leaf_realizable(const std::vector<Rational>& v) {
  // Pair order: 12 13 14 23 24 34.
  const std::array<std::array<int, 2>, 3> splits{{{0, 5}, {1, 4}, {2, 3}}};
  for (const auto& s : splits) {
    if (v[s[0]] != 0 || v[s[1]] != 0) continue;
    std::optional<Rational> t;
    bool ok = true;
    for (int i = 0; i < 6; ++i) {
      if (i == s[0] || i == s[1]) continue;
      if (!t) t = v[i];
      ok = ok && v[i] == *t;
    }
    if (ok && *t >= 0) return true;
  }
  return false;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("metric_graph") {

TEST_CASE("genus of the standard graphs") {
  CHECK(genus(theta(1, 2, 3)) == 2);
  CHECK(genus(dumbbell(1, 2, 3)) == 2);
  CHECK(genus(circle(Rational(9, 2))) == 1);
  CHECK(genus(caterpillar(1, 2)) == 0);
  CHECK(one_forms_dimension(theta(1, 2, 3)) == 2);
  CHECK(one_forms_dimension(circle(1)) == 1);
  CHECK(one_forms_dimension(caterpillar(1, 1)) == 0);
}

TEST_CASE("jacobian of the 4.5-circle") {
  const auto lattice = jacobian(circle(Rational(9, 2)));
  CHECK(lattice.genus == 1);
  CHECK(lattice.gram == Matrix{{Rational(9, 2)}});
}

TEST_CASE("theta gram in the basis e_a - e_b, e_b - e_c") {
  std::mt19937_64 rng(71);
  for (int n = 0; n < 20; ++n) {
    const Rational a = positive(rng), b = positive(rng), c = positive(rng);
    const auto g = theta(a, b, c);
    const Matrix gram = period_gram(g, {{1, -1, 0}, {0, 1, -1}});
    CHECK(gram == Matrix{{a + b, -b}, {-b, b + c}});
    CHECK(positive_definite(gram));
    CHECK(positive_definite(jacobian(g).gram));
  }
}

TEST_CASE("dumbbell gram is diagonal") {
  const auto lattice = jacobian(dumbbell(2, 7, Rational(1, 3)));
  CHECK(lattice.gram == Matrix{{2, 0}, {0, Rational(1, 3)}});
}

TEST_CASE("gram is symmetric and positive definite on random graphs") {
  std::mt19937_64 rng(73);
  for (int n = 0; n < 40; ++n) {
    const int extra = 1 + static_cast<int>(rng() % 4);
    const auto g = random_graph(rng, 1 + static_cast<int>(rng() % 5), extra);
    const auto lattice = jacobian(g);
    const int h = static_cast<int>(g.edges().size() - g.vertices().size()) + 1;
    CHECK(h >= extra);
    CHECK(lattice.genus == h);
    CHECK(lattice.basis.size() == static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < h; ++j) CHECK(lattice.gram[i][j] == lattice.gram[j][i]);
    }
    CHECK(positive_definite(lattice.gram));
    CHECK(period_gram(g, lattice.basis) == lattice.gram);
  }
}

TEST_CASE("period_gram rejects chains that are not closed") {
  CHECK(code_of([] { period_gram(theta(1, 1, 1), {{1, 0, 0}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { period_gram(theta(1, 1, 1), {{1, -1}}); }) == ErrorCode::InvalidArgument);
  CHECK(!positive_definite(Matrix{{1, 2}, {2, 1}}));
}

TEST_CASE("Abel-Jacobi on a circle is the arc length modulo L") {
  const Rational L(9, 2);
  const auto g = circle(L);
  for (const Rational& t : {Rational(1), Rational(7, 3), Rational(4)}) {
    const GraphDivisor d{{std::nullopt, 0, t, 1}, {std::string("o"), 0, 0, -1}};
    CHECK(abel_jacobi(g, d) == std::vector<Rational>{t});
  }
  const GraphDivisor twice{{std::nullopt, 0, Rational(3), 2}, {std::string("o"), 0, 0, -2}};
  CHECK(abel_jacobi(g, twice) == std::vector<Rational>{Rational(3, 2)});
  CHECK(abel_jacobi(g, {}) == std::vector<Rational>{0});
}

TEST_CASE("Abel-Jacobi on the theta graph: midpoint of e_a minus u") {
  const Rational a(3), b(5), c(2);
  const auto g = theta(a, b, c);
  const GraphDivisor d{{std::nullopt, 0, a / 2, 1}, {std::string("u"), 0, 0, -1}};
  // The chain is half of e_a; each basis cycle pairs with it through its
  // signed traversal of e_a.
  const auto lattice = jacobian(g);
  std::vector<Rational> expected;
  for (const auto& cycle : lattice.basis) expected.push_back(cycle[0] * a / 2);
  CHECK(lattice_equivalent(lattice.gram, abel_jacobi_coordinates(g, d), expected));
}

TEST_CASE("Abel-Jacobi does not depend on the chain") {
  std::mt19937_64 rng(79);
  int checked = 0;
  while (checked < 20) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto g = random_graph(rng, n, 1 + static_cast<int>(rng() % 3));
    if (genus(g) > 3) continue;
    GraphDivisor d;
    long total = 0;
    for (int k = 0; k < 3; ++k) {
      const std::size_t e = rng() % g.edges().size();
      const long w = static_cast<long>(rng() % 5) - 2;
      const Rational off = *g.edges()[e].length * Rational(static_cast<long>(rng() % 7), 6);
      d.push_back({std::nullopt, e, off, w});
      total += w;
    }
    d.push_back({g.vertices()[rng() % g.vertices().size()], 0, 0, -total});

    std::vector<std::size_t> priority(g.edges().size());
    std::iota(priority.begin(), priority.end(), 0);
    std::shuffle(priority.begin(), priority.end(), rng);
    const ChainRoute other{rng() % g.vertices().size(), priority};
    const auto lattice = jacobian(g);
    const auto x = abel_jacobi_coordinates(g, d);
    const auto y = abel_jacobi_coordinates(g, d, other);
    CHECK(lattice_equivalent(lattice.gram, x, y));
    CHECK(lattice_equivalent(lattice.gram, abel_jacobi(g, d), x));
    ++checked;
  }
}

TEST_CASE("lattice equivalence") {
  const Matrix gram{{2, -1}, {-1, 3}};
  CHECK(lattice_equivalent(gram, {Rational(1, 2), 0}, {Rational(5, 2), -1}));
  CHECK(!lattice_equivalent(gram, {Rational(1, 2), 0}, {Rational(3, 2), 0}));
}

TEST_CASE("moduli vector of the caterpillar") {
  std::mt19937_64 rng(83);
  for (int n = 0; n < 10; ++n) {
    const Rational a = positive(rng), b = positive(rng);
    const auto z = moduli_distance_vector(caterpillar(a, b));
    CHECK(z.labels == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
    REQUIRE(z.values.size() == 10);
    CHECK(z.pairs[0] == std::pair<std::string, std::string>{"x1", "x2"});
    CHECK(z.values[0] == 0);
    CHECK(z.pairs[1] == std::pair<std::string, std::string>{"x1", "x3"});
    CHECK(z.values[1] == a);
    CHECK(z.pairs[3] == std::pair<std::string, std::string>{"x1", "x5"});
    CHECK(z.values[3] == a + b);
    const auto back = is_tree_metric(z.values);
    REQUIRE(back.is_tree_metric);
    CHECK(moduli_distance_vector(*back.tree).values == z.values);
  }
}

TEST_CASE("star trees and k = 3") {
  for (int k = 3; k <= 7; ++k) {
    std::vector<std::string> vertices{"c"};
    std::vector<GraphEdge> edges;
    std::map<std::string, std::string> markings;
    for (int i = 1; i <= k; ++i) {
      vertices.push_back("m" + std::to_string(i));
      edges.push_back({{"c", vertices.back()}, std::nullopt});
      markings["x" + std::to_string(i)] = vertices.back();
    }
    const auto z = moduli_distance_vector(MetricGraph(vertices, edges, markings));
    CHECK(z.values == std::vector<Rational>(static_cast<std::size_t>(k * (k - 1) / 2), Rational(0)));
    CHECK(is_tree_metric(z.values).is_tree_metric);
  }
  std::mt19937_64 rng(89);
  for (int n = 0; n < 10; ++n) {
    CHECK(moduli_distance_vector(random_tree(rng, 3)).values == std::vector<Rational>(3, Rational(0)));
  }
  CHECK(!is_tree_metric({1, 1, 0}).is_tree_metric);
}

TEST_CASE("tree metric round trip for random trees") {
  std::mt19937_64 rng(97);
  for (int n = 0; n < 50; ++n) {
    const int k = 3 + static_cast<int>(rng() % 5);
    const auto tree = random_tree(rng, k);
    const auto z = moduli_distance_vector(tree);
    const auto back = is_tree_metric(z.values, z.labels);
    REQUIRE(back.is_tree_metric);
    const auto again = moduli_distance_vector(*back.tree);
    CHECK(again.labels == z.labels);
    CHECK(again.values == z.values);
  }
}

TEST_CASE("four-point condition against all four-leaf shapes") {
  CHECK(!is_tree_metric({1, 0, 0, 0, 0, 1}).is_tree_metric);
  CHECK(!four_leaf_realizable({1, 0, 0, 0, 0, 1}));
  // Every vector in {0, 1, 2}^6.
  for (int code = 0; code < 729; ++code) {
    std::vector<Rational> v;
    for (int i = 0, c = code; i < 6; ++i, c /= 3) v.push_back(c % 3);
    CAPTURE(code);
    CHECK(is_tree_metric(v).is_tree_metric == four_leaf_realizable(v));
  }
  CHECK(!is_tree_metric({-1, 0, 0}).is_tree_metric);
}

TEST_CASE("natural label order") {
  CHECK(label_less("x2", "x10"));
  CHECK(!label_less("x10", "x2"));
  CHECK(label_less("a", "b"));
}

TEST_CASE("errors") {
  CHECK(code_of([] { MetricGraph({"a", "b"}, {}); }) == ErrorCode::DisconnectedGraph);
  CHECK(code_of([] { MetricGraph({"a", "b"}, {{{"a", "c"}, 1}}); }) == ErrorCode::InvalidGraph);
  CHECK(code_of([] { MetricGraph({"a", "b"}, {{{"a", "b"}, 0}}); }) == ErrorCode::InvalidGraph);
  CHECK(code_of([] { MetricGraph({"a", "a"}, {{{"a", "a"}, 1}}); }) == ErrorCode::InvalidGraph);
  CHECK(code_of([] { jacobian(caterpillar(1, 1)); }) == ErrorCode::GenusZero);
  CHECK(code_of([] {
          abel_jacobi(circle(1), {{std::string("o"), 0, 0, 1}});
        }) == ErrorCode::NonZeroDegree);
  CHECK(code_of([] { moduli_distance_vector(theta(1, 1, 1)); }) == ErrorCode::NotATree);
  CHECK(code_of([] {
          MetricGraph g({"c", "m1", "m2", "m3"},
                        {{{"c", "m1"}, {}}, {{"c", "m2"}, {}}, {{"c", "m3"}, {}}},
                        {{"x1", "m1"}, {"x2", "m2"}});
          moduli_distance_vector(g);
        }) == ErrorCode::UnmarkedLeaf);
  CHECK(code_of([] { is_tree_metric({1, 2}); }) == ErrorCode::InvalidArgument);
}

}  // TEST_SUITE
