#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropocalc/rational.hpp"

namespace tropo {

struct GraphEdge {
  std::array<std::string, 2> ends;
  /// nullopt is an infinite leaf.
  std::optional<Rational> length;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Compact tropical curve: a connected graph with positive rational lengths on
/// finite edges and infinite leaves. Markings name 1-valent vertices.
class MetricGraph {
 public:
  /// Throws InvalidGraph on unknown or duplicate ids, a finite edge at a
  /// 1-valent vertex, an infinite edge elsewhere, a nonpositive length or a
  /// bad marking; DisconnectedGraph when not connected.
  MetricGraph(std::vector<std::string> vertices, std::vector<GraphEdge> edges,
              std::map<std::string, std::string> markings = {});

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  /// label -> vertex id
  const std::map<std::string, std::string>& markings() const noexcept { return markings_; }

  std::size_t index_of(const std::string& vertex) const;
  std::size_t valence(std::size_t vertex) const { return valence_.at(vertex); }
  /// Vertex indices of edge i.
  std::array<std::size_t, 2> endpoints(std::size_t edge) const { return ends_.at(edge); }

  friend bool operator==(const MetricGraph& a, const MetricGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.markings_ == b.markings_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
  std::map<std::string, std::string> markings_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::array<std::size_t, 2>> ends_;
  std::vector<std::size_t> valence_;
};

/// First Betti number E - V + 1.
int genus(const MetricGraph& g);
int one_forms_dimension(const MetricGraph& g);

/// Integral 1-cycle as signed traversal counts, one entry per edge.
using EdgeChain = std::vector<int>;

/// Cycle basis from the spanning tree that takes edges greedily in input
/// order: non-tree edge e = (u, v) gives the cycle "e from u to v, then the
/// tree path back to u". Ordered by the index of the non-tree edge.
std::vector<EdgeChain> cycle_basis(const MetricGraph& g);

struct PeriodLattice {
  int genus = 0;
  std::vector<EdgeChain> basis;
  /// gram[i][j] = sum over edges of length * basis[i][e] * basis[j][e].
  std::vector<std::vector<Rational>> gram;
};

/// Period lattice in the default cycle basis. Throws GenusZero.
PeriodLattice jacobian(const MetricGraph& g);

/// Gram matrix of an explicit family of cycles. Throws InvalidArgument when a
/// chain has the wrong length or is not closed.
std::vector<std::vector<Rational>> period_gram(const MetricGraph& g,
                                               const std::vector<EdgeChain>& cycles);

/// Sylvester criterion.
bool positive_definite(const std::vector<std::vector<Rational>>& m);

struct DivisorPoint {
  /// Either a vertex id, or an edge index with an offset measured from the
  /// edge's first end.
  std::optional<std::string> vertex;
  std::size_t edge = 0;
  Rational offset;
  long weight = 0;
};

using GraphDivisor = std::vector<DivisorPoint>;

/// Spanning tree used to route the 1-chain: edges are tried in `priority`
/// order (input order when empty) and paths start at `root`.
struct ChainRoute {
  std::size_t root = 0;
  std::vector<std::size_t> priority;
};

/// Integrals of the default basis cycles over a 1-chain bounding d, without
/// lattice reduction. Throws NonZeroDegree, GenusZero, InvalidArgument.
std::vector<Rational> abel_jacobi_coordinates(const MetricGraph& g, const GraphDivisor& d,
                                              const ChainRoute& route = {});

/// Abel-Jacobi image reduced into the fundamental parallelepiped of the
/// lattice spanned by the gram columns.
std::vector<Rational> abel_jacobi(const MetricGraph& g, const GraphDivisor& d);

/// True when gram^{-1} (x - y) is integral.
bool lattice_equivalent(const std::vector<std::vector<Rational>>& gram,
                        const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Natural order of marking labels: "x2" before "x10".
bool label_less(const std::string& a, const std::string& b);

struct ModuliVector {
  std::vector<std::string> labels;
  /// Pairs (i, j), i < j, lexicographic in label order.
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<Rational> values;
};

/// Distances between markings along finite edges. Throws NotATree,
/// UnmarkedLeaf, InvalidArgument (fewer than three markings).
ModuliVector moduli_distance_vector(const MetricGraph& g);

struct TreeMetricResult {
  bool is_tree_metric = false;
  std::optional<MetricGraph> tree;
};

/// Tests whether a pairwise distance vector (pair order as above, labels
/// x1..xk unless given) comes from a marked tree with zero-length leaves, and
/// reconstructs one.
TreeMetricResult is_tree_metric(const std::vector<Rational>& values,
                                std::vector<std::string> labels = {});

}  // namespace tropo
