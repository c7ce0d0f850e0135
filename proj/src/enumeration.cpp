#include "tropocalc/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "tropocalc/error.hpp"

namespace tropo {

int constraint_count(int d, int g) { return 3 * d - 1 + g; }

namespace {

const std::array<IVec2, 3> kEndDirections{IVec2{-1, 0}, IVec2{0, -1}, IVec2{1, 1}};

IVec2 operator+(const IVec2& a, const IVec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
IVec2 operator-(const IVec2& a) { return {-a[0], -a[1]}; }

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// ---------------------------------------------------------------------------
// Rational types: trivalent trees with coloured ends.

struct Tree {
  int ends = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> colour;
};

std::string encode(const Tree& t, int v, int from) {
  if (v < t.ends) return std::to_string(t.colour[v]);
  std::vector<std::string> parts;
  for (int c : t.adj[v]) {
    if (c != from) parts.push_back(encode(t, c, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p + ",";
  return s + ")";
}

std::string canonical_form(const Tree& t) {
  std::string best;
  for (int v = t.ends; v < static_cast<int>(t.adj.size()); ++v) {
    auto s = encode(t, v, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// All trees obtained by inserting the ends one at a time into an edge, up to
// colour-preserving isomorphism at every stage.
std::vector<Tree> coloured_trees(const std::vector<int>& colours) {
  const int n = static_cast<int>(colours.size());
  Tree start;
  start.ends = n;
  start.colour = colours;
  start.adj.assign(n + 1, {});
  for (int i = 0; i < 3; ++i) {
    start.adj[i].push_back(n);
    start.adj[n].push_back(i);
  }
  std::vector<Tree> level{start};
  for (int leaf = 3; leaf < n; ++leaf) {
    std::map<std::string, Tree> next;
    for (const auto& t : level) {
      for (int a = 0; a < static_cast<int>(t.adj.size()); ++a) {
        for (int b : t.adj[a]) {
          if (a > b) continue;
          Tree u = t;
          const int m = static_cast<int>(u.adj.size());
          u.adj.emplace_back();
          *std::find(u.adj[a].begin(), u.adj[a].end(), b) = m;
          *std::find(u.adj[b].begin(), u.adj[b].end(), a) = m;
          u.adj[m] = {a, b, leaf};
          u.adj[leaf].push_back(m);
          next.emplace(canonical_form(u), std::move(u));
        }
      }
    }
    level.clear();
    for (auto& [key, t] : next) level.push_back(std::move(t));
  }
  return level;
}

// Sum of the end directions on b's side of the edge a-b.
IVec2 side(const Tree& t, int a, int b) {
  if (b < t.ends) return kEndDirections[t.colour[b]];
  IVec2 sum{0, 0};
  for (int c : t.adj[b]) {
    if (c != a) sum = sum + side(t, b, c);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Checked arithmetic for the solver.

using i128 = __int128;

struct Overflow {};

i128 mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
i128 sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
int sign(i128 a) { return (a > 0) - (a < 0); }
i128 gcd_abs(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  constexpr i128 kWord = i128{1} << 63;
  if (a < kWord && b < kWord) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
mpz_class to_mpz(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return negative ? mpz_class(-r) : r;
}

mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
int sign(const mpz_class& a) { return sgn(a); }
mpz_class gcd_abs(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
mpz_class to_mpz(const mpz_class& v) { return v; }

// Projective point (X/Z, Y/Z) with Z > 0, in coordinates scaled by a common
// denominator of the input points.
template <class Num>
struct Hom {
  Num x, y, z;
};

// ---------------------------------------------------------------------------
// One cut set of one type: the marked edges S split the graph into trees that
// each contain exactly one end.

struct Anchor {
  bool slot = false;
  int id = 0;  // slot index or node
  IVec2 w{};   // from the vertex towards the anchor
};

struct Layout {
  std::vector<std::array<Anchor, 2>> anchors;  // per node; used for vertices
  std::vector<int> parent;                     // parent vertex, -1 when the parent is an end
  std::vector<std::vector<int>> waiting;       // per slot, vertices anchored at it
  std::vector<int> slot_edge;                  // slot -> edge index
  std::vector<int> order;                      // slots in tie-break order
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};

// True when removing the edges in `cut` leaves a forest whose components each
// contain exactly one end.
bool admissible_cut(const PlaneType& t, std::uint64_t cut) {
  UnionFind uf(t.nodes);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (cut >> e & 1) continue;
    if (!uf.unite(t.edges[e][0], t.edges[e][1])) return false;
  }
  std::vector<int> ends_in(t.nodes, 0);
  for (int v = 0; v < t.ends; ++v) ++ends_in[uf.find(v)];
  for (int v = 0; v < t.nodes; ++v) {
    if (uf.find(v) == v && ends_in[v] != 1) return false;
  }
  return true;
}

Layout make_layout(const PlaneType& t, std::uint64_t cut) {
  Layout lay;
  lay.anchors.resize(t.nodes);
  lay.parent.assign(t.nodes, -1);
  std::vector<std::vector<int>> incident(t.nodes);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    incident[t.edges[e][0]].push_back(static_cast<int>(e));
    incident[t.edges[e][1]].push_back(static_cast<int>(e));
  }
  std::vector<int> slot_of(t.edges.size(), -1);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (cut >> e & 1) {
      slot_of[e] = static_cast<int>(lay.slot_edge.size());
      lay.slot_edge.push_back(static_cast<int>(e));
    }
  }
  lay.waiting.resize(lay.slot_edge.size());
  auto vector_from = [&](int e, int x) {
    return t.edges[e][0] == x ? t.vectors[e] : -t.vectors[e];
  };
  auto other = [&](int e, int x) { return t.edges[e][0] == x ? t.edges[e][1] : t.edges[e][0]; };

  std::vector<std::vector<int>> components;
  for (int r = 0; r < t.ends; ++r) {
    const int e0 = incident[r][0];
    if (slot_of[e0] >= 0) continue;
    std::vector<int> post;  // slots (encoded -1 - s) and vertices in post-order
    std::function<void(int, int)> visit = [&](int x, int via) {
      int k = 0;
      for (int e : incident[x]) {
        if (e == via) continue;
        Anchor& a = lay.anchors[x][k++];
        a.w = vector_from(e, x);
        if (slot_of[e] >= 0) {
          a.slot = true;
          a.id = slot_of[e];
          lay.waiting[a.id].push_back(x);
          post.push_back(-1 - a.id);
        } else {
          const int c = other(e, x);
          a.slot = false;
          a.id = c;
          lay.parent[c] = x;
          visit(c, e);
        }
      }
      post.push_back(x);
    };
    visit(other(e0, r), e0);
    components.push_back(std::move(post));
  }
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<char> seen(lay.slot_edge.size(), 0);
  for (const auto& post : components) {
    for (int z : post) {
      if (z >= 0) continue;
      const int s = -1 - z;
      if (!seen[s]) {
        seen[s] = 1;
        lay.order.push_back(s);
      }
    }
  }
  return lay;
}

struct RawSolution {
  std::vector<Rational> key;
  CountedSolution counted;
};

template <class Num>
class Solver {
 public:
  Solver(const PlaneType& type, const Layout& layout, const std::vector<Hom<Num>>& points,
         const mpz_class& scale, std::vector<RawSolution>& out)
      : t_(type), lay_(layout), points_(points), scale_(scale), out_(out) {
    pos_.resize(t_.nodes);
    ready_.assign(t_.nodes, 0);
    slot_point_.assign(lay_.slot_edge.size(), -1);
  }

  void run() { search(0, (std::uint32_t{1} << points_.size()) - 1); }

 private:
  // Returns false when the vertex would lie on the wrong side of an anchor. A
  // vertex landing exactly on an anchor is recorded as degenerate.
  const Hom<Num>& anchor_point(const Anchor& a) const {
    return a.slot ? points_[slot_point_[a.id]] : pos_[a.id];
  }

  bool known(const Anchor& a) const {
    return a.slot ? slot_point_[a.id] >= 0 : ready_[a.id] == 2;
  }

  // Signs of the two edge lengths at v for anchor points q0, q1.
  std::pair<int, int> length_signs(int v, const Hom<Num>& q0, const Hom<Num>& q1) const {
    const IVec2& w1 = lay_.anchors[v][0].w;
    const IVec2& w2 = lay_.anchors[v][1].w;
    const Num rx = sub(mul(q0.x, q1.z), mul(q1.x, q0.z));
    const Num ry = sub(mul(q0.y, q1.z), mul(q1.y, q0.z));
    const int sd = -sign(det(w1, w2));
    const Num a = sub(mul(Num(w2[0]), ry), mul(Num(w2[1]), rx));
    const Num b = sub(mul(Num(w1[0]), ry), mul(Num(w1[1]), rx));
    return {sign(a) * sd, sign(b) * sd};
  }

  bool place(int v) {
    const Hom<Num> q[2] = {anchor_point(lay_.anchors[v][0]), anchor_point(lay_.anchors[v][1])};
    const auto [s1, s2] = length_signs(v, q[0], q[1]);
    if (s1 < 0 || s2 < 0) return false;
    if (s1 == 0 || s2 == 0) degenerate_.push_back(v);
    const IVec2& w1 = lay_.anchors[v][0].w;
    const IVec2& w2 = lay_.anchors[v][1].w;
    const Num rx = sub(mul(q[0].x, q[1].z), mul(q[1].x, q[0].z));
    const Num ry = sub(mul(q[0].y, q[1].z), mul(q[1].y, q[0].z));
    const Num d = Num(-det(w1, w2));
    const Num a = sub(mul(Num(w2[0]), ry), mul(Num(w2[1]), rx));
    const Num zz = mul(q[0].z, q[1].z);
    Hom<Num> h{sub(mul(mul(q[0].x, q[1].z), d), mul(a, Num(w1[0]))),
               sub(mul(mul(q[0].y, q[1].z), d), mul(a, Num(w1[1]))), mul(zz, d)};
    if (sign(h.z) < 0) {
      h.x = -h.x;
      h.y = -h.y;
      h.z = -h.z;
    }
    Num g = gcd_abs(gcd_abs(h.x, h.y), h.z);
    if (g != 1) {
      h.x /= g;
      h.y /= g;
      h.z /= g;
    }
    pos_[v] = h;
    return true;
  }

  // Marks one more anchor of v as known and cascades towards the ends.
  bool notify(int v) {
    while (v >= 0) {
      touched_.push_back(v);
      if (++ready_[v] < 2) return true;
      if (!place(v)) return false;
      v = lay_.parent[v];
    }
    return true;
  }

  // Points that slot s may still take, judged by the vertices whose other
  // anchor is already known.
  std::uint32_t candidates(int s, std::uint32_t free) const {
    std::uint32_t mask = free;
    for (int v : lay_.waiting[s]) {
      const int j = lay_.anchors[v][0].slot && lay_.anchors[v][0].id == s ? 0 : 1;
      const Anchor& other = lay_.anchors[v][1 - j];
      if (!known(other)) continue;
      const Hom<Num>& q = anchor_point(other);
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        const int p = __builtin_ctz(rest);
        const auto [s1, s2] = j == 0 ? length_signs(v, points_[p], q) : length_signs(v, q, points_[p]);
        if (s1 < 0 || s2 < 0) mask &= ~(std::uint32_t{1} << p);
      }
    }
    return mask;
  }

  void search(std::size_t depth, std::uint32_t free) {
    if (depth == lay_.order.size()) {
      emit();
      return;
    }
    int s = -1;
    std::uint32_t choices = 0;
    for (int c : lay_.order) {
      if (slot_point_[c] >= 0) continue;
      const std::uint32_t mask = candidates(c, free);
      if (mask == 0) return;
      if (s < 0 || __builtin_popcount(mask) < __builtin_popcount(choices)) {
        s = c;
        choices = mask;
      }
    }
    for (std::uint32_t rest = choices; rest != 0; rest &= rest - 1) {
      const int p = __builtin_ctz(rest);
      slot_point_[s] = p;
      const std::size_t mark = touched_.size();
      const std::size_t degenerate_mark = degenerate_.size();
      bool ok = true;
      for (int v : lay_.waiting[s]) {
        if (!(ok = notify(v))) break;
      }
      if (ok) search(depth + 1, free & ~(std::uint32_t{1} << p));
      while (touched_.size() > mark) {
        --ready_[touched_.back()];
        touched_.pop_back();
      }
      degenerate_.resize(degenerate_mark);
      slot_point_[s] = -1;
    }
  }

  Rational coordinate(const Num& num, const Num& den) const {
    Rational r(to_mpz(num), to_mpz(den) * scale_);
    r.canonicalize();
    return r;
  }

  void emit() {
    if (!degenerate_.empty()) {
      throw Error(ErrorCode::NonGenericConfiguration,
                  "a solution has a marked point on a vertex or a contracted edge");
    }
    const int vertices = t_.nodes - t_.ends;
    std::vector<PointN> positions(vertices);
    for (int v = t_.ends; v < t_.nodes; ++v) {
      positions[v - t_.ends] = {coordinate(pos_[v].x, pos_[v].z), coordinate(pos_[v].y, pos_[v].z)};
    }
    std::vector<CycleEdge> edges;
    for (std::size_t e = 0; e < t_.edges.size(); ++e) {
      int a = t_.edges[e][0];
      int b = t_.edges[e][1];
      IVec2 w = t_.vectors[e];
      CycleEdge ce;
      if (a < t_.ends) {
        std::swap(a, b);
        w = -w;
      }
      const std::int64_t weight = abs64(gcd(w[0], w[1]));
      ce.direction = {w[0] / weight, w[1] / weight};
      ce.weight = weight;
      ce.from = a - t_.ends;
      if (b < t_.ends) {
        ce.kind = EdgeKind::ray;
        ce.to = -1;
      } else {
        ce.kind = EdgeKind::bounded;
        ce.to = b - t_.ends;
      }
      edges.push_back(std::move(ce));
    }
    std::vector<std::size_t> incidence(points_.size());
    for (std::size_t s = 0; s < lay_.slot_edge.size(); ++s) {
      incidence[slot_point_[s]] = static_cast<std::size_t>(lay_.slot_edge[s]);
    }
    RawSolution raw{{}, {EmbeddedSolution{Cycle1(2, std::move(positions), std::move(edges)),
                                          std::move(incidence)},
                         0, 0}};
    out_.push_back(std::move(raw));
  }

  const PlaneType& t_;
  const Layout& lay_;
  const std::vector<Hom<Num>>& points_;
  const mpz_class& scale_;
  std::vector<RawSolution>& out_;
  std::vector<Hom<Num>> pos_;
  std::vector<int> ready_;
  std::vector<int> touched_;
  std::vector<int> degenerate_;
  std::vector<int> slot_point_;
};

// ---------------------------------------------------------------------------

bool on_edge(const Cycle1& c, std::size_t e, const PointN& p) {
  const auto& edge = c.edges()[e];
  const auto& a = c.vertices()[edge.from];
  const Rational dx = p[0] - a[0];
  const Rational dy = p[1] - a[1];
  if (dx * edge.direction[1] - dy * edge.direction[0] != 0) return false;
  const Rational t = edge.direction[0] != 0 ? Rational(dx / edge.direction[0])
                                            : Rational(dy / edge.direction[1]);
  if (t < 0) return false;
  return edge.kind == EdgeKind::ray || t <= c.lattice_length(e);
}

std::vector<Rational> solution_key(const Cycle1& c) {
  std::vector<std::array<Rational, 6>> rows;
  for (const auto& e : c.edges()) {
    const auto& a = c.vertices()[e.from];
    if (e.kind == EdgeKind::ray) {
      rows.push_back({Rational(1), a[0], a[1], Rational(e.direction[0]), Rational(e.direction[1]),
                      Rational(e.weight)});
    } else {
      auto from = a;
      auto to = c.vertices()[e.to];
      if (to < from) std::swap(from, to);
      rows.push_back({Rational(0), from[0], from[1], to[0], to[1], Rational(e.weight)});
    }
  }
  std::sort(rows.begin(), rows.end());
  std::vector<Rational> key;
  for (auto& r : rows) key.insert(key.end(), r.begin(), r.end());
  return key;
}

void check_generic(const EmbeddedSolution& s, const std::vector<Point2>& points) {
  const Cycle1& c = s.curve;
  std::set<PointN> seen;
  for (const auto& v : c.vertices()) {
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::NonGenericConfiguration, "two vertices of a solution coincide");
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PointN p{points[i][0], points[i][1]};
    std::size_t hits = 0;
    for (std::size_t e = 0; e < c.edges().size(); ++e) hits += on_edge(c, e, p) ? 1 : 0;
    if (hits != 1) {
      throw Error(ErrorCode::NonGenericConfiguration,
                  "a marked point lies on several edges of a solution");
    }
  }
}

unsigned thread_count(const CountOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("TROPOCALC_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Task {
  std::size_t type;
  std::uint64_t cut;
};

std::vector<Task> make_tasks(const std::vector<PlaneType>& types, int marked) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const int m = static_cast<int>(types[i].edges.size());
    if (marked > m || m > 63) continue;
    // Gosper's hack over all m-bit masks with `marked` bits set.
    std::uint64_t cut = (std::uint64_t{1} << marked) - 1;
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (cut < limit) {
      if (admissible_cut(types[i], cut)) tasks.push_back({i, cut});
      const std::uint64_t c = cut & (~cut + 1);
      const std::uint64_t r = cut + c;
      cut = (((r ^ cut) >> 2) / c) | r;
    }
  }
  return tasks;
}

template <class Num>
std::vector<RawSolution> solve_all(const std::vector<PlaneType>& types,
                                   const std::vector<Task>& tasks,
                                   const std::vector<Point2>& points, unsigned threads) {
  mpz_class scale = 1;
  for (const auto& p : points) {
    for (const auto& c : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Hom<Num>> scaled;
  for (const auto& p : points) {
    mpz_class x = p[0].get_num() * (scale / p[0].get_den());
    mpz_class y = p[1].get_num() * (scale / p[1].get_den());
    if constexpr (std::is_same_v<Num, i128>) {
      if (!x.fits_slong_p() || !y.fits_slong_p()) throw Overflow{};
      scaled.push_back({Num(x.get_si()), Num(y.get_si()), Num(1)});
    } else {
      scaled.push_back({x, y, Num(1)});
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex guard;
  std::exception_ptr failure;
  std::vector<std::vector<RawSolution>> found(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        const auto& type = types[tasks[i].type];
        const Layout layout = make_layout(type, tasks[i].cut);
        Solver<Num>(type, layout, scaled, scale, found[id]).run();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!failure) failure = std::current_exception();
      next = tasks.size();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(worker, id);
  worker(0);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<RawSolution> all;
  for (auto& part : found) {
    for (auto& s : part) all.push_back(std::move(s));
  }
  return all;
}

void check_supported(int d, int g) {
  const bool rational = g == 0 && d >= 1 && d <= 3;
  const bool elliptic = g == 1 && d == 3;
  if (!rational && !elliptic) {
    throw Error(ErrorCode::UnsupportedDegree,
                "counting is available for g = 0 with d <= 3 and for d = 3, g = 1; got d = " +
                    std::to_string(d) + ", g = " + std::to_string(g));
  }
}

}  // namespace

std::vector<PlaneType> rational_types(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  std::vector<int> colours;
  for (int c = 0; c < 3; ++c) colours.insert(colours.end(), d, c);
  std::vector<PlaneType> out;
  for (const auto& t : coloured_trees(colours)) {
    PlaneType p;
    p.ends = t.ends;
    p.nodes = static_cast<int>(t.adj.size());
    bool ok = true;
    for (int a = 0; a < p.nodes && ok; ++a) {
      for (int b : t.adj[a]) {
        if (a > b) continue;
        IVec2 w = side(t, a, b);
        if (w[0] == 0 && w[1] == 0) ok = false;
        p.edges.push_back({a, b});
        p.vectors.push_back(w);
      }
    }
    for (int v = t.ends; v < p.nodes && ok; ++v) {
      const auto& nb = t.adj[v];
      if (det(side(t, v, nb[0]), side(t, v, nb[1])) == 0) ok = false;
    }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

std::vector<PlaneType> elliptic_cubic_types() {
  constexpr int kSize = 3;
  std::vector<IVec2> lattice;
  for (std::int64_t i = 0; i <= kSize; ++i) {
    for (std::int64_t j = 0; i + j <= kSize; ++j) lattice.push_back({i, j});
  }
  const int n = static_cast<int>(lattice.size());
  auto on_boundary = [&](const IVec2& p) { return p[0] == 0 || p[1] == 0 || p[0] + p[1] == kSize; };

  // Primitive segments between lattice points of the triangle.
  std::vector<std::array<int, 2>> segments;
  std::vector<std::array<int, 2>> boundary;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const IVec2 e{lattice[b][0] - lattice[a][0], lattice[b][1] - lattice[a][1]};
      if (abs64(gcd(e[0], e[1])) != 1) continue;
      const bool side_a = on_boundary(lattice[a]);
      const bool side_b = on_boundary(lattice[b]);
      const bool along = side_a && side_b &&
                         ((lattice[a][0] == 0 && lattice[b][0] == 0) ||
                          (lattice[a][1] == 0 && lattice[b][1] == 0) ||
                          (lattice[a][0] + lattice[a][1] == kSize && lattice[b][0] + lattice[b][1] == kSize));
      (along ? boundary : segments).push_back({a, b});
    }
  }
  auto orient = [&](int a, int b, int c) {
    const IVec2 u{lattice[b][0] - lattice[a][0], lattice[b][1] - lattice[a][1]};
    const IVec2 v{lattice[c][0] - lattice[a][0], lattice[c][1] - lattice[a][1]};
    const auto x = det(u, v);
    return (x > 0) - (x < 0);
  };
  auto cross = [&](const std::array<int, 2>& s, const std::array<int, 2>& t) {
    if (s[0] == t[0] || s[0] == t[1] || s[1] == t[0] || s[1] == t[1]) return false;
    return orient(s[0], s[1], t[0]) * orient(s[0], s[1], t[1]) < 0 &&
           orient(t[0], t[1], s[0]) * orient(t[0], t[1], s[1]) < 0;
  };
  // A triangulation of n points, h of them on the boundary, has 3n - 3 - h edges.
  const std::size_t interior_edges = 3 * n - 3 - 2 * boundary.size();

  std::vector<std::vector<std::array<int, 2>>> triangulations;
  std::vector<std::array<int, 2>> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t i) {
    if (chosen.size() == interior_edges) {
      triangulations.push_back(chosen);
      return;
    }
    if (segments.size() - i < interior_edges - chosen.size()) return;
    const auto& s = segments[i];
    if (std::none_of(chosen.begin(), chosen.end(), [&](const auto& t) { return cross(s, t); })) {
      chosen.push_back(s);
      grow(i + 1);
      chosen.pop_back();
    }
    grow(i + 1);
  };
  grow(0);

  std::vector<PlaneType> out;
  for (const auto& inner : triangulations) {
    std::vector<std::array<int, 2>> all = boundary;
    all.insert(all.end(), inner.begin(), inner.end());
    std::set<std::array<int, 2>> has(all.begin(), all.end());
    auto linked = [&](int a, int b) { return has.count({std::min(a, b), std::max(a, b)}) > 0; };
    // Faces: unimodular triangles all of whose sides are present, stored
    // counter-clockwise.
    std::vector<std::array<int, 3>> faces;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          if (!linked(a, b) || !linked(b, c) || !linked(a, c)) continue;
          const int o = orient(a, b, c);
          const IVec2 u{lattice[b][0] - lattice[a][0], lattice[b][1] - lattice[a][1]};
          const IVec2 v{lattice[c][0] - lattice[a][0], lattice[c][1] - lattice[a][1]};
          if (abs64(det(u, v)) != 1) continue;
          faces.push_back(o > 0 ? std::array<int, 3>{a, b, c} : std::array<int, 3>{a, c, b});
        }
      }
    }
    PlaneType p;
    p.ends = static_cast<int>(boundary.size());
    p.nodes = p.ends + static_cast<int>(faces.size());
    std::map<std::array<int, 2>, std::vector<std::pair<int, IVec2>>> sides;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      for (int k = 0; k < 3; ++k) {
        const int a = faces[f][k];
        const int b = faces[f][(k + 1) % 3];
        const IVec2 e{lattice[b][0] - lattice[a][0], lattice[b][1] - lattice[a][1]};
        sides[{std::min(a, b), std::max(a, b)}].emplace_back(p.ends + static_cast<int>(f),
                                                            IVec2{e[1], -e[0]});
      }
    }
    int next_end = 0;
    for (const auto& [seg, at] : sides) {
      if (at.size() == 1) {
        p.edges.push_back({at[0].first, next_end++});
      } else {
        p.edges.push_back({at[0].first, at[1].first});
      }
      p.vectors.push_back(at[0].second);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::int64_t vertex_multiplicity(std::span<const IVec2> weighted) {
  if (weighted.size() != 3) {
    throw Error(ErrorCode::NotTrivalent, "vertex has " + std::to_string(weighted.size()) + " edges");
  }
  const IVec2 sum = weighted[0] + weighted[1] + weighted[2];
  if (sum[0] != 0 || sum[1] != 0) throw Error(ErrorCode::InvalidArgument, "vertex is not balanced");
  return abs64(det(weighted[0], weighted[1]));
}

int vertex_real_sign(std::span<const IVec2> weighted) {
  const std::int64_t m = vertex_multiplicity(weighted);
  std::int64_t boundary = 0;
  for (const auto& w : weighted) boundary += abs64(gcd(w[0], w[1]));
  const std::int64_t interior = (m - boundary + 2) / 2;
  return interior % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<std::vector<IVec2>> vertex_stars(const Cycle1& curve) {
  if (curve.ambient_dim() != 2) throw Error(ErrorCode::AmbientDimUnsupported, "planar curves only");
  std::vector<std::vector<IVec2>> stars(curve.vertices().size());
  for (const auto& e : curve.edges()) {
    const IVec2 w{e.weight * e.direction[0], e.weight * e.direction[1]};
    stars[e.from].push_back(w);
    if (e.kind == EdgeKind::bounded) stars[e.to].push_back(-w);
  }
  return stars;
}

}  // namespace

std::int64_t curve_multiplicity(const Cycle1& curve) {
  std::int64_t m = 1;
  for (const auto& star : vertex_stars(curve)) m *= vertex_multiplicity(star);
  return m;
}

int real_multiplicity(const Cycle1& curve) {
  const auto stars = vertex_stars(curve);
  for (const auto& star : stars) vertex_multiplicity(star);
  for (const auto& e : curve.edges()) {
    if (e.weight % 2 == 0) return 0;
  }
  int s = 1;
  for (const auto& star : stars) s *= vertex_real_sign(star);
  return s;
}

CountResult count_curves(int d, int g, const std::vector<Point2>& points,
                         const CountOptions& options) {
  check_supported(d, g);
  const int needed = constraint_count(d, g);
  if (static_cast<int>(points.size()) != needed) {
    throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(d) + " and genus " +
                                                std::to_string(g) + " need " +
                                                std::to_string(needed) + " points");
  }
  if (std::set<Point2>(points.begin(), points.end()).size() != points.size()) {
    throw Error(ErrorCode::NonGenericConfiguration, "repeated point");
  }
  const auto types = g == 0 ? rational_types(d) : elliptic_cubic_types();
  const auto tasks = make_tasks(types, needed);
  const unsigned threads = thread_count(options);

  std::vector<RawSolution> raw;
  try {
    raw = solve_all<i128>(types, tasks, points, threads);
  } catch (const Overflow&) {
    raw = solve_all<mpz_class>(types, tasks, points, threads);
  }

  std::map<std::vector<Rational>, CountedSolution> unique;
  for (auto& r : raw) {
    check_generic(r.counted.solution, points);
    auto key = solution_key(r.counted.solution.curve);
    unique.emplace(std::move(key), std::move(r.counted));
  }
  CountResult result;
  result.d = d;
  result.g = g;
  result.points = points;
  for (auto& [key, s] : unique) {
    s.m = curve_multiplicity(s.solution.curve);
    s.m_real = real_multiplicity(s.solution.curve);
    result.N_trop += s.m;
    result.W_trop += s.m_real;
    result.solutions.push_back(std::move(s));
  }
  return result;
}

std::int64_t welschinger_count(int d, const std::vector<Point2>& points,
                               const CountOptions& options) {
  return count_curves(d, 0, points, options).W_trop;
}

std::vector<Point2> sample_configuration(int d, int g, std::uint64_t seed) {
  if (d < 1 || g < 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  std::vector<IVec2> slopes;
  for (std::int64_t a = -d; a <= d; ++a) {
    for (std::int64_t b = -d; b <= d; ++b) {
      if (abs64(gcd(a, b)) != 1) continue;
      if (std::max<std::int64_t>({0, a, b}) - std::min<std::int64_t>({0, a, b}) <= d) {
        slopes.push_back({a, b});
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coordinate(-1000000, 1000000);
  std::vector<Point2> points;
  const int needed = constraint_count(d, g);
  while (static_cast<int>(points.size()) < needed) {
    Point2 p{Rational(coordinate(rng), 20), Rational(coordinate(rng), 20)};
    p[0].canonicalize();
    p[1].canonicalize();
    const bool clash = std::any_of(points.begin(), points.end(), [&](const Point2& q) {
      const Rational dx = p[0] - q[0];
      const Rational dy = p[1] - q[1];
      return std::any_of(slopes.begin(), slopes.end(),
                         [&](const IVec2& s) { return dx * s[1] - dy * s[0] == 0; });
    });
    if (!clash) points.push_back(p);
  }
  return points;
}

}  // namespace tropo
