#pragma once

// Graph builders shared by the metric graph tests and the acceptance checks.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropocalc/metric_graph.hpp"

namespace graphs {

using tropo::GraphEdge;
using tropo::MetricGraph;
using tropo::Rational;

inline Rational positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 60), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline MetricGraph theta(const Rational& a, const Rational& b, const Rational& c) {
  return MetricGraph({"u", "v"}, {{{"u", "v"}, a}, {{"u", "v"}, b}, {{"u", "v"}, c}});
}

inline MetricGraph dumbbell(const Rational& a, const Rational& b, const Rational& c) {
  return MetricGraph({"p", "q"}, {{{"p", "p"}, a}, {{"p", "q"}, b}, {{"q", "q"}, c}});
}

inline MetricGraph circle(const Rational& length) { return MetricGraph({"o"}, {{{"o", "o"}, length}}); }

// Caterpillar: x1, x2 at the first internal vertex, x3 in the middle, x4, x5
// at the last; internal edges a then b.
inline MetricGraph caterpillar(const Rational& a, const Rational& b) {
  std::vector<std::string> vertices{"c1", "c2", "c3", "m1", "m2", "m3", "m4", "m5"};
  std::vector<GraphEdge> edges{{{"c1", "c2"}, a}, {{"c2", "c3"}, b},
                               {{"m1", "c1"}, {}}, {{"m2", "c1"}, {}}, {{"m3", "c2"}, {}},
                               {{"m4", "c3"}, {}}, {{"m5", "c3"}, {}}};
  std::map<std::string, std::string> markings{
      {"x1", "m1"}, {"x2", "m2"}, {"x3", "m3"}, {"x4", "m4"}, {"x5", "m5"}};
  return MetricGraph(vertices, edges, markings);
}

// Random connected graph on n vertices with `extra` edges beyond a random
// spanning tree, loops and parallel edges allowed. A vertex left 1-valent gets
// a loop, since finite edges may not end at leaves.
inline MetricGraph random_graph(std::mt19937_64& rng, int n, int extra) {
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<GraphEdge> edges;
  for (int i = 1; i < n; ++i) {
    const int j = static_cast<int>(rng() % static_cast<unsigned>(i));
    edges.push_back({{vertices[i], vertices[j]}, positive(rng)});
  }
  for (int k = 0; k < extra; ++k) {
    const auto a = rng() % static_cast<unsigned>(n), b = rng() % static_cast<unsigned>(n);
    edges.push_back({{vertices[a], vertices[b]}, positive(rng)});
  }
  std::vector<int> valence(n, 0);
  for (const auto& e : edges) {
    for (const auto& end : e.ends) ++valence[std::stoi(end.substr(1))];
  }
  for (int i = 0; i < n; ++i) {
    if (valence[i] == 1) edges.push_back({{vertices[i], vertices[i]}, positive(rng)});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return MetricGraph(vertices, edges);
}

// Random marked tree with k leaves: grow from a tripod by subdividing a random
// edge and hanging a new leaf from the new vertex.
inline MetricGraph random_tree(std::mt19937_64& rng, int k) {
  struct E {
    int u, v;
    std::optional<Rational> len;
  };
  int next = 0;
  std::vector<int> leaf_of;  // vertex of marking i
  std::vector<E> edges;
  const int center = next++;
  for (int i = 0; i < 3; ++i) {
    leaf_of.push_back(next);
    edges.push_back({next++, center, std::nullopt});
  }
  for (int i = 3; i < k; ++i) {
    const std::size_t pick = rng() % edges.size();
    const E old = edges[pick];
    const int w = next++;
    edges[pick] = {old.u, w, old.len ? std::optional<Rational>(positive(rng)) : std::nullopt};
    edges.push_back({w, old.v, positive(rng)});
    if (!old.len) {
      // old.u is the leaf; keep it pendant at w.
      edges[pick].len = std::nullopt;
    }
    leaf_of.push_back(next);
    edges.push_back({next++, w, std::nullopt});
  }
  std::vector<std::string> names;
  for (int i = 0; i < next; ++i) names.push_back("n" + std::to_string(i));
  std::vector<GraphEdge> out;
  for (const auto& e : edges) out.push_back({{names[e.u], names[e.v]}, e.len});
  std::map<std::string, std::string> markings;
  for (int i = 0; i < k; ++i) markings["x" + std::to_string(i + 1)] = names[leaf_of[i]];
  return MetricGraph(names, out, markings);
}

}  // namespace graphs
