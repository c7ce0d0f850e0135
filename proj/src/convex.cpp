#include "tropocalc/convex.hpp"

#include <algorithm>

namespace tropo::convex {

std::optional<std::vector<Rational>> barycentric(std::span<const Exponent> simplex,
                                                 const Exponent& target) {
  const std::size_t k = simplex.size();
  const std::size_t n = target.size();
  const std::size_t rows = n + 1;
  // Augmented system [A | b]: one row per coordinate plus sum(lambda) = 1.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < k; ++s) m[i][s] = simplex[s][i];
    m[i][k] = target[i];
  }
  for (std::size_t s = 0; s < k; ++s) m[n][s] = 1;
  m[n][k] = 1;

  std::size_t row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) return std::nullopt;  // dependent vertices
    std::swap(m[row], m[pivot]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= k; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (m[r][k] != 0) return std::nullopt;  // target outside the affine span
  }
  std::vector<Rational> lambda(k);
  for (std::size_t s = 0; s < k; ++s) lambda[s] = m[s][k] / m[s][s];
  return lambda;
}

namespace {

void envelope_search(std::span<const Exponent> points, std::span<const Rational> values,
                     const Exponent& target, std::size_t max_size, std::size_t start,
                     std::vector<std::size_t>& chosen, std::optional<Rational>& best) {
  if (!chosen.empty()) {
    std::vector<Exponent> simplex;
    simplex.reserve(chosen.size());
    for (auto i : chosen) simplex.push_back(points[i]);
    if (auto lambda = barycentric(simplex, target)) {
      bool inside = std::all_of(lambda->begin(), lambda->end(),
                                [](const Rational& l) { return l >= 0; });
      if (inside) {
        Rational v = 0;
        for (std::size_t s = 0; s < chosen.size(); ++s) v += (*lambda)[s] * values[chosen[s]];
        if (!best || v > *best) best = v;
      }
    }
  }
  if (chosen.size() == max_size) return;
  for (std::size_t i = start; i < points.size(); ++i) {
    chosen.push_back(i);
    envelope_search(points, values, target, max_size, i + 1, chosen, best);
    chosen.pop_back();
  }
}

}  // namespace

std::optional<Rational> concave_envelope_at(std::span<const Exponent> points,
                                            std::span<const Rational> values,
                                            const Exponent& target) {
  std::optional<Rational> best;
  std::vector<std::size_t> chosen;
  envelope_search(points, values, target, target.size() + 1, 0, chosen, best);
  return best;
}

namespace {

std::int64_t cross(const IVec2& o, const IVec2& a, const IVec2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<IVec2> convex_hull(std::vector<IVec2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<IVec2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    const auto& p = points[i];
    while (k >= t && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool polygon_contains(std::span<const IVec2> hull, const IVec2& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) {
    if (cross(hull[0], hull[1], p) != 0) return false;
    return std::min(hull[0][0], hull[1][0]) <= p[0] && p[0] <= std::max(hull[0][0], hull[1][0]) &&
           std::min(hull[0][1], hull[1][1]) <= p[1] && p[1] <= std::max(hull[0][1], hull[1][1]);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  }
  return true;
}

}  // namespace tropo::convex
