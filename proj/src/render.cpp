#include "tropocalc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "tropocalc/error.hpp"

namespace tropo {

namespace {

const char* const kPalette[] = {"#1f4e9c", "#b03a2e", "#2e7d32", "#7b1fa2"};

void require_planar(const Cycle1& c) {
  if (c.ambient_dim() != 2) throw Error(ErrorCode::AmbientDimUnsupported, "only planar cycles can be drawn");
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  Point2 low;
  Point2 high;
  double scale;

  double x(const Rational& v) const { return Rational(v - low[0]).get_d() * scale; }
  double y(const Rational& v) const { return Rational(high[1] - v).get_d() * scale; }
};

}  // namespace

RenderSpec fit_render_spec(std::span<const Cycle1> curves, const ZeroCycle* marks) {
  std::vector<PointN> pts;
  for (const auto& c : curves) {
    require_planar(c);
    pts.insert(pts.end(), c.vertices().begin(), c.vertices().end());
  }
  if (marks) {
    for (const auto& p : marks->points()) pts.push_back(p.position);
  }
  RenderSpec spec;
  if (pts.empty()) {
    spec.low = {Rational(-1), Rational(-1)};
    spec.high = {Rational(1), Rational(1)};
    return spec;
  }
  Point2 low{pts[0][0], pts[0][1]};
  Point2 high = low;
  for (const auto& p : pts) {
    for (int i = 0; i < 2; ++i) {
      low[i] = std::min(low[i], p[i]);
      high[i] = std::max(high[i], p[i]);
    }
  }
  Rational span = std::max(high[0] - low[0], high[1] - low[1]);
  if (span == 0) span = 2;
  spec.ray_extent = span / 3;
  const Rational pad = span / 2;
  spec.low = {Rational(low[0] - pad), Rational(low[1] - pad)};
  spec.high = {Rational(high[0] + pad), Rational(high[1] + pad)};
  return spec;
}

std::string render_svg(std::span<const Cycle1> curves, const ZeroCycle* marks,
                       const RenderSpec& spec) {
  if (spec.ray_extent <= 0) throw Error(ErrorCode::InvalidArgument, "ray_extent must be positive");
  if (spec.high[0] <= spec.low[0] || spec.high[1] <= spec.low[1]) {
    throw Error(ErrorCode::InvalidArgument, "empty viewport");
  }
  auto inside = [&](const PointN& p) {
    return p[0] >= spec.low[0] && p[0] <= spec.high[0] && p[1] >= spec.low[1] && p[1] <= spec.high[1];
  };
  for (const auto& c : curves) {
    require_planar(c);
    if (!std::all_of(c.vertices().begin(), c.vertices().end(), inside)) {
      throw Error(ErrorCode::InvalidArgument, "viewport does not contain every vertex");
    }
  }
  const Rational width = spec.high[0] - spec.low[0];
  const Rational height = spec.high[1] - spec.low[1];
  const Frame f{spec.low, spec.high, spec.pixels / std::max(width, height).get_d()};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width.get_d() * f.scale)
      << "\" height=\"" << num(height.get_d() * f.scale) << "\" viewBox=\"0 0 "
      << num(width.get_d() * f.scale) << " " << num(height.get_d() * f.scale) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const Cycle1& c = curves[k];
    const char* colour = kPalette[k % std::size(kPalette)];
    out << "<g stroke=\"" << colour << "\" stroke-linecap=\"round\" fill=\"none\">\n";
    for (const auto& e : c.edges()) {
      const PointN& a = c.vertices()[e.from];
      PointN b;
      if (e.kind == EdgeKind::ray) {
        b = {Rational(a[0] + spec.ray_extent * e.direction[0]),
             Rational(a[1] + spec.ray_extent * e.direction[1])};
      } else {
        b = c.vertices()[e.to];
      }
      const double w = spec.stroke * (e.weight >= 2 ? 2.0 * static_cast<double>(e.weight) : 1.0);
      out << "<line x1=\"" << num(f.x(a[0])) << "\" y1=\"" << num(f.y(a[1])) << "\" x2=\""
          << num(f.x(b[0])) << "\" y2=\"" << num(f.y(b[1])) << "\" stroke-width=\"" << num(w)
          << "\"/>\n";
      if (spec.labels && e.weight >= 2) {
        out << "<text x=\"" << num((f.x(a[0]) + f.x(b[0])) / 2 + 4) << "\" y=\""
            << num((f.y(a[1]) + f.y(b[1])) / 2 - 4) << "\" font-size=\"12\" fill=\"" << colour
            << "\" stroke=\"none\">" << e.weight << "</text>\n";
      }
    }
    out << "</g>\n";
  }
  if (marks) {
    out << "<g fill=\"black\">\n";
    for (const auto& p : marks->points()) {
      const double r = 3.0 + 2.0 * static_cast<double>(std::max<std::int64_t>(p.weight, 1) - 1);
      out << "<circle cx=\"" << num(f.x(p.position[0])) << "\" cy=\"" << num(f.y(p.position[1]))
          << "\" r=\"" << num(r) << "\"/>\n";
      if (spec.labels && p.weight != 1) {
        out << "<text x=\"" << num(f.x(p.position[0]) + r + 2) << "\" y=\""
            << num(f.y(p.position[1]) - r - 2) << "\" font-size=\"12\">" << p.weight << "</text>\n";
      }
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropo
