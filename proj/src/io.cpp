#include "tropocalc/io.hpp"

#include <set>

#include "tropocalc/error.hpp"

namespace tropo::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) schema(std::string("expected an object holding \"") + key + "\"");
  auto it = doc.find(key);
  if (it == doc.end()) schema(std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_array()) schema(std::string("\"") + key + "\" must be an array");
  return v;
}

std::int64_t integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) schema(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::string text(const Json& v, const char* what) {
  if (!v.is_string()) schema(std::string(what) + " must be a string");
  return v.get<std::string>();
}

Json point_json(std::span<const Rational> p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(rational_json(c));
  return out;
}

PointN point_from(const Json& v) {
  if (!v.is_array() || v.empty()) schema("a point must be a nonempty array");
  PointN p;
  for (const auto& c : v) p.push_back(rational_from(c));
  return p;
}

Point2 point2_from(const Json& v) {
  PointN p = point_from(v);
  if (p.size() != 2) schema("expected a planar point");
  return {p[0], p[1]};
}

Json ivec_json(std::span<const std::int64_t> v) {
  Json out = Json::array();
  for (auto c : v) out.push_back(c);
  return out;
}

Json edge_json(EdgeKind kind, std::int64_t weight, std::span<const std::int64_t> dir, int from,
               int to) {
  Json e;
  e["kind"] = kind == EdgeKind::ray ? "ray" : "bounded";
  e["weight"] = weight;
  e["dir"] = ivec_json(dir);
  e["ends"] = kind == EdgeKind::ray ? Json::array({from}) : Json::array({from, to});
  return e;
}

CycleEdge edge_from(const Json& e) {
  CycleEdge out;
  const std::string kind = text(field(e, "kind"), "edge kind");
  if (kind == "ray") {
    out.kind = EdgeKind::ray;
  } else if (kind == "bounded") {
    out.kind = EdgeKind::bounded;
  } else {
    schema("edge kind must be \"bounded\" or \"ray\"");
  }
  out.weight = integer(field(e, "weight"), "edge weight");
  for (const auto& c : array_field(e, "dir")) out.direction.push_back(integer(c, "direction"));
  const Json& ends = array_field(e, "ends");
  if (ends.size() != (out.kind == EdgeKind::ray ? 1u : 2u)) schema("wrong number of edge ends");
  out.from = static_cast<int>(integer(ends[0], "edge end"));
  out.to = out.kind == EdgeKind::ray ? -1 : static_cast<int>(integer(ends[1], "edge end"));
  return out;
}

}  // namespace

Json parse(std::string_view input) {
  try {
    return Json::parse(input.begin(), input.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json rational_json(const Rational& value) { return to_string(value); }

Rational rational_from(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  return parse_rational(text(value, "a rational"));
}

Json curve_json(const PlanarCurve& curve) {
  Json doc;
  doc["polynomial"] = to_text(curve.source);
  Json vertices = Json::array();
  for (const auto& v : curve.vertices) vertices.push_back({{"pos", point_json(v.position)}});
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : curve.edges) {
    edges.push_back(edge_json(e.kind, e.weight, e.direction, e.from, e.to));
  }
  doc["edges"] = std::move(edges);
  Json cells = Json::array();
  for (const auto& cell : curve.subdivision()) {
    Json c = Json::array();
    for (const auto& j : cell) c.push_back(ivec_json(j));
    cells.push_back(std::move(c));
  }
  doc["subdivision"] = std::move(cells);
  return doc;
}

PlanarCurve curve_from_json(const Json& doc) {
  const std::string poly = text(field(doc, "polynomial"), "\"polynomial\"");
  PlanarCurve curve = build_curve(parse_polynomial(poly, 2));
  if (curve_json(curve) != doc) schema("curve data disagrees with its polynomial");
  return curve;
}

Json cycle_json(const Cycle1& cycle) {
  Json doc;
  Json vertices = Json::array();
  for (const auto& v : cycle.vertices()) vertices.push_back({{"pos", point_json(v)}});
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : cycle.edges()) {
    edges.push_back(edge_json(e.kind, e.weight, e.direction, e.from, e.to));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

Cycle1 cycle_from_json(const Json& doc) {
  std::vector<PointN> vertices;
  for (const auto& v : array_field(doc, "vertices")) vertices.push_back(point_from(field(v, "pos")));
  std::vector<CycleEdge> edges;
  for (const auto& e : array_field(doc, "edges")) edges.push_back(edge_from(e));
  int dim = 0;
  if (!vertices.empty()) {
    dim = static_cast<int>(vertices[0].size());
  } else if (!edges.empty()) {
    dim = static_cast<int>(edges[0].direction.size());
  }
  if (dim == 0) schema("cannot infer the ambient dimension of an empty cycle");
  try {
    return Cycle1(dim, std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidCycle) schema(e.what());
    throw;
  }
}

Json zero_cycle_json(const ZeroCycle& z) {
  Json points = Json::array();
  for (const auto& p : z.points()) {
    points.push_back({{"pos", point_json(p.position)}, {"weight", p.weight}});
  }
  return {{"points", std::move(points)}};
}

ZeroCycle zero_cycle_from_json(const Json& doc) {
  std::vector<WeightedPoint> points;
  for (const auto& p : array_field(doc, "points")) {
    points.push_back({point_from(field(p, "pos")), integer(field(p, "weight"), "point weight")});
  }
  return ZeroCycle(std::move(points));
}

Json graph_json(const MetricGraph& g, const GraphDivisor* divisor) {
  Json doc;
  doc["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"ends", {e.ends[0], e.ends[1]}},
                     {"length", e.length ? rational_json(*e.length) : Json("inf")}});
  }
  doc["edges"] = std::move(edges);
  std::vector<std::pair<std::string, std::string>> marks(g.markings().begin(), g.markings().end());
  std::sort(marks.begin(), marks.end(),
            [](const auto& a, const auto& b) { return label_less(a.first, b.first); });
  Json markings = Json::object();
  for (const auto& [label, vertex] : marks) markings[label] = vertex;
  doc["markings"] = std::move(markings);
  if (divisor) {
    Json points = Json::array();
    for (const auto& p : *divisor) {
      if (p.vertex) {
        points.push_back({{"vertex", *p.vertex}, {"weight", p.weight}});
      } else {
        points.push_back({{"edge", p.edge}, {"offset", rational_json(p.offset)}, {"weight", p.weight}});
      }
    }
    doc["divisor"] = std::move(points);
  }
  return doc;
}

MetricGraph graph_from_json(const Json& doc) {
  std::vector<std::string> vertices;
  for (const auto& v : array_field(doc, "vertices")) vertices.push_back(text(v, "vertex id"));
  std::vector<GraphEdge> edges;
  for (const auto& e : array_field(doc, "edges")) {
    const Json& ends = array_field(e, "ends");
    if (ends.size() != 2) schema("a graph edge has two ends");
    GraphEdge edge{{text(ends[0], "edge end"), text(ends[1], "edge end")}, std::nullopt};
    const Json& length = field(e, "length");
    if (!(length.is_string() && length.get<std::string>() == "inf")) edge.length = rational_from(length);
    edges.push_back(std::move(edge));
  }
  std::map<std::string, std::string> markings;
  if (auto it = doc.find("markings"); it != doc.end()) {
    if (!it->is_object()) schema("\"markings\" must be an object");
    for (const auto& [label, vertex] : it->items()) markings[label] = text(vertex, "marked vertex");
  }
  return MetricGraph(std::move(vertices), std::move(edges), std::move(markings));
}

GraphDivisor divisor_from_json(const Json& doc, const MetricGraph& g) {
  GraphDivisor out;
  auto it = doc.find("divisor");
  if (it == doc.end()) return out;
  if (!it->is_array()) schema("\"divisor\" must be an array");
  for (const auto& p : *it) {
    DivisorPoint point;
    point.weight = integer(field(p, "weight"), "divisor weight");
    if (p.contains("vertex")) {
      point.vertex = text(p["vertex"], "divisor vertex");
      g.index_of(*point.vertex);
    } else {
      const std::int64_t e = integer(field(p, "edge"), "divisor edge");
      if (e < 0 || e >= static_cast<std::int64_t>(g.edges().size())) schema("divisor edge out of range");
      point.edge = static_cast<std::size_t>(e);
      point.offset = rational_from(field(p, "offset"));
    }
    out.push_back(std::move(point));
  }
  return out;
}

Json points_json(const std::vector<Point2>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(point_json(p));
  return out;
}

std::vector<Point2> points_from_json(const Json& doc) {
  if (!doc.is_array()) schema("points must be an array of [x, y] pairs");
  std::vector<Point2> out;
  for (const auto& p : doc) out.push_back(point2_from(p));
  return out;
}

Json count_json(const CountResult& result, std::optional<std::uint64_t> seed,
                bool with_welschinger) {
  Json doc;
  doc["d"] = result.d;
  doc["g"] = result.g;
  doc["points"] = points_json(result.points);
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  Json solutions = Json::array();
  for (const auto& s : result.solutions) {
    Json entry;
    entry["m"] = s.m;
    entry["m_real"] = s.m_real;
    entry["curve"] = cycle_json(s.solution.curve);
    entry["incidence"] = s.solution.incidence;
    solutions.push_back(std::move(entry));
  }
  doc["solutions"] = std::move(solutions);
  doc["N_trop"] = result.N_trop;
  if (with_welschinger) doc["W_trop"] = result.W_trop;
  return doc;
}

CountDocument count_from_json(const Json& doc) {
  CountDocument out;
  out.result.d = static_cast<int>(integer(field(doc, "d"), "\"d\""));
  out.result.g = static_cast<int>(integer(field(doc, "g"), "\"g\""));
  out.result.points = points_from_json(field(doc, "points"));
  const Json& seed = field(doc, "seed");
  if (!seed.is_null()) {
    if (!seed.is_number_unsigned()) schema("\"seed\" must be an unsigned integer or null");
    out.seed = seed.get<std::uint64_t>();
  }
  for (const auto& s : array_field(doc, "solutions")) {
    CountedSolution c{{cycle_from_json(field(s, "curve")), {}}, integer(field(s, "m"), "\"m\""),
                      static_cast<int>(integer(field(s, "m_real"), "\"m_real\""))};
    for (const auto& i : array_field(s, "incidence")) {
      c.solution.incidence.push_back(static_cast<std::size_t>(integer(i, "incidence")));
    }
    out.result.solutions.push_back(std::move(c));
  }
  out.result.N_trop = integer(field(doc, "N_trop"), "\"N_trop\"");
  if (auto it = doc.find("W_trop"); it != doc.end()) {
    out.with_welschinger = true;
    out.result.W_trop = integer(*it, "\"W_trop\"");
  }
  return out;
}

}  // namespace tropo::io
