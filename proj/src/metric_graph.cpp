#include "tropocalc/metric_graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "tropocalc/error.hpp"

namespace tropo {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

struct RootedTree {
  std::vector<bool> in_tree;
  std::vector<std::size_t> parent;
  std::vector<long> parent_edge;  // -1 at the root
  std::vector<int> depth;
};

RootedTree spanning_tree(const MetricGraph& g, const std::vector<std::size_t>& priority,
                         std::size_t root) {
  const std::size_t nv = g.vertices().size();
  const std::size_t ne = g.edges().size();
  std::vector<std::size_t> order = priority;
  if (order.empty()) {
    order.resize(ne);
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != ne || root >= nv) {
    throw Error(ErrorCode::InvalidArgument, "bad spanning tree route");
  }
  RootedTree t;
  t.in_tree.assign(ne, false);
  UnionFind uf(nv);
  std::vector<std::vector<std::size_t>> incident(nv);
  for (auto e : order) {
    auto [u, v] = g.endpoints(e);
    if (uf.unite(u, v)) {
      t.in_tree[e] = true;
      incident[u].push_back(e);
      incident[v].push_back(e);
    }
  }
  t.parent.assign(nv, nv);
  t.parent_edge.assign(nv, -1);
  t.depth.assign(nv, -1);
  std::queue<std::size_t> queue;
  queue.push(root);
  t.depth[root] = 0;
  t.parent[root] = root;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop();
    for (auto e : incident[x]) {
      auto [u, v] = g.endpoints(e);
      auto y = u == x ? v : u;
      if (t.depth[y] >= 0) continue;
      t.depth[y] = t.depth[x] + 1;
      t.parent[y] = x;
      t.parent_edge[y] = static_cast<long>(e);
      queue.push(y);
    }
  }
  return t;
}

// Adds the signed tree path from -> to into chain.
void add_path(const MetricGraph& g, const RootedTree& t, std::size_t from, std::size_t to,
              EdgeChain& chain) {
  // Climbing from x to its parent traverses the parent edge forward iff x is
  // its first end.
  auto climb_sign = [&](std::size_t x) {
    auto e = static_cast<std::size_t>(t.parent_edge[x]);
    return g.endpoints(e)[0] == x ? 1 : -1;
  };
  while (from != to) {
    if (t.depth[from] >= t.depth[to]) {
      chain[t.parent_edge[from]] += climb_sign(from);
      from = t.parent[from];
    } else {
      chain[t.parent_edge[to]] -= climb_sign(to);
      to = t.parent[to];
    }
  }
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::InvalidArgument, "singular period matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::size_t pair_count(std::size_t k) { return k * (k - 1) / 2; }

}  // namespace

MetricGraph::MetricGraph(std::vector<std::string> vertices, std::vector<GraphEdge> edges,
                         std::map<std::string, std::string> markings)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), markings_(std::move(markings)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second) {
      throw Error(ErrorCode::InvalidGraph, "duplicate vertex '" + vertices_[i] + "'");
    }
  }
  if (vertices_.empty()) throw Error(ErrorCode::InvalidGraph, "graph has no vertices");
  valence_.assign(vertices_.size(), 0);
  for (const auto& e : edges_) {
    auto u = index_of(e.ends[0]);
    auto v = index_of(e.ends[1]);
    ends_.push_back({u, v});
    ++valence_[u];
    ++valence_[v];
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const std::string tag = "edge " + std::to_string(i) + ": ";
    const bool leaf = valence_[ends_[i][0]] == 1 || valence_[ends_[i][1]] == 1;
    if (leaf && e.length) throw Error(ErrorCode::InvalidGraph, tag + "a leaf must have infinite length");
    if (!leaf && !e.length) throw Error(ErrorCode::InvalidGraph, tag + "only leaves may be infinite");
    if (e.length && *e.length <= 0) throw Error(ErrorCode::InvalidGraph, tag + "length must be positive");
  }
  std::set<std::string> marked;
  for (const auto& [label, vertex] : markings_) {
    if (valence_[index_of(vertex)] != 1) {
      throw Error(ErrorCode::InvalidGraph, "marking " + label + " is not on a 1-valent vertex");
    }
    if (!marked.insert(vertex).second) {
      throw Error(ErrorCode::InvalidGraph, "vertex '" + vertex + "' carries two markings");
    }
  }
  UnionFind uf(vertices_.size());
  std::size_t components = vertices_.size();
  for (const auto& [u, v] : ends_) components -= uf.unite(u, v) ? 1 : 0;
  if (components != 1) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
}

std::size_t MetricGraph::index_of(const std::string& vertex) const {
  auto it = index_.find(vertex);
  if (it == index_.end()) throw Error(ErrorCode::InvalidGraph, "unknown vertex '" + vertex + "'");
  return it->second;
}

int genus(const MetricGraph& g) {
  return static_cast<int>(g.edges().size()) - static_cast<int>(g.vertices().size()) + 1;
}

int one_forms_dimension(const MetricGraph& g) { return genus(g); }

std::vector<EdgeChain> cycle_basis(const MetricGraph& g) {
  const auto tree = spanning_tree(g, {}, 0);
  std::vector<EdgeChain> basis;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (tree.in_tree[e]) continue;
    EdgeChain chain(g.edges().size(), 0);
    chain[e] = 1;
    auto [u, v] = g.endpoints(e);
    add_path(g, tree, v, u, chain);
    basis.push_back(std::move(chain));
  }
  return basis;
}

std::vector<std::vector<Rational>> period_gram(const MetricGraph& g,
                                               const std::vector<EdgeChain>& cycles) {
  const std::size_t ne = g.edges().size();
  for (const auto& c : cycles) {
    if (c.size() != ne) throw Error(ErrorCode::InvalidArgument, "cycle has wrong number of edges");
    std::vector<long> boundary(g.vertices().size(), 0);
    for (std::size_t e = 0; e < ne; ++e) {
      if (c[e] == 0) continue;
      if (!g.edges()[e].length) throw Error(ErrorCode::InvalidArgument, "cycle runs along a leaf");
      boundary[g.endpoints(e)[1]] += c[e];
      boundary[g.endpoints(e)[0]] -= c[e];
    }
    if (std::any_of(boundary.begin(), boundary.end(), [](long b) { return b != 0; })) {
      throw Error(ErrorCode::InvalidArgument, "chain is not a cycle");
    }
  }
  const std::size_t n = cycles.size();
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t e = 0; e < ne; ++e) {
        if (cycles[i][e] != 0 && cycles[j][e] != 0) {
          gram[i][j] += *g.edges()[e].length * (cycles[i][e] * cycles[j][e]);
        }
      }
    }
  }
  return gram;
}

PeriodLattice jacobian(const MetricGraph& g) {
  const int h = genus(g);
  if (h == 0) throw Error(ErrorCode::GenusZero, "a tree has a trivial Jacobian");
  PeriodLattice lattice;
  lattice.genus = h;
  lattice.basis = cycle_basis(g);
  lattice.gram = period_gram(g, lattice.basis);
  return lattice;
}

bool positive_definite(const std::vector<std::vector<Rational>>& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<std::vector<Rational>> minor(k);
    for (std::size_t i = 0; i < k; ++i) minor[i].assign(m[i].begin(), m[i].begin() + k);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

std::vector<Rational> abel_jacobi_coordinates(const MetricGraph& g, const GraphDivisor& d,
                                              const ChainRoute& route) {
  long total = 0;
  for (const auto& p : d) total += p.weight;
  if (total != 0) throw Error(ErrorCode::NonZeroDegree, "divisor has degree " + std::to_string(total));
  if (genus(g) == 0) throw Error(ErrorCode::GenusZero, "a tree has a trivial Jacobian");

  const std::size_t ne = g.edges().size();
  const auto tree = spanning_tree(g, route.priority, route.root);
  std::vector<Rational> flow(ne, Rational(0));
  for (const auto& p : d) {
    EdgeChain path(ne, 0);
    if (p.vertex) {
      add_path(g, tree, route.root, g.index_of(*p.vertex), path);
    } else {
      if (p.edge >= ne) throw Error(ErrorCode::InvalidArgument, "divisor point on unknown edge");
      const auto& length = g.edges()[p.edge].length;
      if (!length) throw Error(ErrorCode::InvalidArgument, "divisor point on an infinite leaf");
      if (p.offset < 0 || p.offset > *length) {
        throw Error(ErrorCode::InvalidArgument, "divisor offset outside the edge");
      }
      add_path(g, tree, route.root, g.endpoints(p.edge)[0], path);
      flow[p.edge] += p.weight * p.offset;
    }
    for (std::size_t e = 0; e < ne; ++e) {
      if (path[e] != 0) flow[e] += *g.edges()[e].length * (p.weight * path[e]);
    }
  }
  std::vector<Rational> coords;
  for (const auto& cycle : cycle_basis(g)) {
    Rational x = 0;
    for (std::size_t e = 0; e < ne; ++e) {
      if (cycle[e] != 0) x += flow[e] * cycle[e];
    }
    coords.push_back(x);
  }
  return coords;
}

std::vector<Rational> abel_jacobi(const MetricGraph& g, const GraphDivisor& d) {
  auto x = abel_jacobi_coordinates(g, d);
  const auto gram = jacobian(g).gram;
  auto c = solve(gram, x);
  for (auto& ci : c) ci -= floor(ci);
  std::vector<Rational> reduced(c.size(), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) reduced[i] += gram[i][j] * c[j];
  }
  return reduced;
}

bool lattice_equivalent(const std::vector<std::vector<Rational>>& gram,
                        const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> delta(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) delta[i] = x[i] - y[i];
  for (const auto& c : solve(gram, delta)) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool label_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    std::string digits = s.substr(cut);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    return std::make_tuple(s.substr(0, cut), digits.size(), digits);
  };
  auto ka = split(a);
  auto kb = split(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

ModuliVector moduli_distance_vector(const MetricGraph& g) {
  if (genus(g) != 0) throw Error(ErrorCode::NotATree, "graph has a cycle");
  std::set<std::string> marked;
  for (const auto& [label, vertex] : g.markings()) marked.insert(vertex);
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    if (g.valence(v) == 1 && !marked.count(g.vertices()[v])) {
      throw Error(ErrorCode::UnmarkedLeaf, "leaf '" + g.vertices()[v] + "' carries no marking");
    }
  }
  if (g.markings().size() < 3) throw Error(ErrorCode::InvalidArgument, "need at least three markings");

  ModuliVector out;
  for (const auto& [label, vertex] : g.markings()) out.labels.push_back(label);
  std::sort(out.labels.begin(), out.labels.end(), label_less);

  const std::size_t nv = g.vertices().size();
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [u, v] = g.endpoints(e);
    incident[u].push_back(e);
    incident[v].push_back(e);
  }
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    const auto source = g.index_of(g.markings().at(out.labels[i]));
    std::vector<std::optional<Rational>> dist(nv);
    dist[source] = Rational(0);
    std::queue<std::size_t> queue;
    queue.push(source);
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop();
      for (auto e : incident[x]) {
        auto [u, v] = g.endpoints(e);
        auto y = u == x ? v : u;
        if (dist[y]) continue;
        dist[y] = *dist[x] + g.edges()[e].length.value_or(Rational(0));
        queue.push(y);
      }
    }
    for (std::size_t j = i + 1; j < out.labels.size(); ++j) {
      out.pairs.emplace_back(out.labels[i], out.labels[j]);
      out.values.push_back(*dist[g.index_of(g.markings().at(out.labels[j]))]);
    }
  }
  return out;
}

TreeMetricResult is_tree_metric(const std::vector<Rational>& values,
                                std::vector<std::string> labels) {
  std::size_t k = 2;
  while (pair_count(k) < values.size()) ++k;
  if (k < 3 || pair_count(k) != values.size()) {
    throw Error(ErrorCode::InvalidArgument, "vector length is not k(k-1)/2 for any k >= 3");
  }
  if (labels.empty()) {
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (labels.size() != k) throw Error(ErrorCode::InvalidArgument, "wrong number of labels");

  std::vector<std::vector<Rational>> z(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0, n = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j, ++n) z[i][j] = z[j][i] = values[n];
  }
  TreeMetricResult result;
  for (const auto& v : values) {
    if (v < 0) return result;
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        for (std::size_t d = c + 1; d < k; ++d) {
          std::array<Rational, 3> s{z[a][b] + z[c][d], z[a][c] + z[b][d], z[a][d] + z[b][c]};
          std::sort(s.begin(), s.end());
          if (s[1] != s[2]) return result;
        }
      }
    }
  }
  // Markings sit at distance zero from the finite part of the tree.
  for (std::size_t i = 0; i < k; ++i) {
    std::optional<Rational> pendant;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        if (j == i || l == i) continue;
        Rational p = z[i][j] + z[i][l] - z[j][l];
        if (p < 0) return result;
        if (!pendant || p < *pendant) pendant = p;
      }
    }
    if (*pendant != 0) return result;
  }

  // Additive-tree insertion; node i < k is the position of marking i.
  std::vector<std::map<std::size_t, Rational>> adj(k);
  auto link = [&](std::size_t u, std::size_t v, const Rational& len) {
    adj[u][v] = len;
    adj[v][u] = len;
  };
  auto path_between = [&](std::size_t from, std::size_t to) {
    std::vector<std::size_t> prev(adj.size(), adj.size());
    std::queue<std::size_t> queue;
    queue.push(from);
    prev[from] = from;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop();
      for (const auto& [y, len] : adj[x]) {
        if (prev[y] != adj.size()) continue;
        prev[y] = x;
        queue.push(y);
      }
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  };
  link(0, 1, z[0][1]);
  for (std::size_t m = 2; m < k; ++m) {
    std::size_t bi = 0, bj = 1;
    Rational best = z[0][m] + z[1][m] - z[0][1];
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        Rational p = z[i][m] + z[j][m] - z[i][j];
        if (p < best) {
          best = p;
          bi = i;
          bj = j;
        }
      }
    }
    const Rational pendant = best / 2;
    const Rational along = z[bi][m] - pendant;
    auto path = path_between(bi, bj);
    Rational walked = 0;
    std::size_t attach = path.back();
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      if (walked == along) {
        attach = path[s];
        break;
      }
      const Rational len = adj[path[s]][path[s + 1]];
      if (walked + len > along) {
        attach = adj.size();
        adj.emplace_back();
        adj[path[s]].erase(path[s + 1]);
        adj[path[s + 1]].erase(path[s]);
        link(path[s], attach, along - walked);
        link(attach, path[s + 1], walked + len - along);
        break;
      }
      walked += len;
    }
    link(attach, m, pendant);
  }

  // Contract zero-length edges and emit the marked tree.
  UnionFind uf(adj.size());
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (const auto& [v, len] : adj[u]) {
      if (len == 0) uf.unite(u, v);
    }
  }
  std::set<std::string> taken(labels.begin(), labels.end());
  std::map<std::size_t, std::string> names;
  std::vector<std::string> vertices;
  std::size_t counter = 0;
  auto name_of = [&](std::size_t node) {
    auto root = uf.find(node);
    auto it = names.find(root);
    if (it != names.end()) return it->second;
    std::string id;
    do {
      id = "v" + std::to_string(counter++);
    } while (taken.count(id));
    vertices.push_back(id);
    return names[root] = id;
  };
  std::vector<GraphEdge> edges;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (const auto& [v, len] : adj[u]) {
      if (u < v && len != 0) edges.push_back({{name_of(u), name_of(v)}, len});
    }
  }
  std::map<std::string, std::string> markings;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back({{name_of(i), labels[i]}, std::nullopt});
    vertices.push_back(labels[i]);
    markings[labels[i]] = labels[i];
  }
  MetricGraph tree(std::move(vertices), std::move(edges), std::move(markings));

  // The pair order of the input follows `labels`; compare in that order.
  std::map<std::pair<std::string, std::string>, Rational> got;
  auto mv = moduli_distance_vector(tree);
  for (std::size_t n = 0; n < mv.pairs.size(); ++n) {
    got[mv.pairs[n]] = mv.values[n];
    got[{mv.pairs[n].second, mv.pairs[n].first}] = mv.values[n];
  }
  for (std::size_t i = 0, n = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j, ++n) {
      if (got.at({labels[i], labels[j]}) != values[n]) return result;
    }
  }
  result.is_tree_metric = true;
  result.tree = std::move(tree);
  return result;
}

}  // namespace tropo
