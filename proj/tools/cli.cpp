#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tropocalc/enumeration.hpp"
#include "tropocalc/error.hpp"
#include "tropocalc/io.hpp"
#include "tropocalc/metric_graph.hpp"
#include "tropocalc/planar_curve.hpp"
#include "tropocalc/render.hpp"

namespace tropo::cli {

namespace {

using io::Json;

struct Globals {
  std::string json_path;
  std::string svg_path;
  std::optional<std::uint64_t> seed;
};

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kParse, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kFailure, "cannot write " + path};
}

// The document goes to --json when given, otherwise to stdout.
void emit(const Globals& g, const Json& doc, std::ostream& out) {
  if (g.json_path.empty()) {
    out << io::dump(doc);
  } else {
    write_file(g.json_path, io::dump(doc));
  }
}

void emit_svg(const Globals& g, std::span<const Cycle1> curves, const ZeroCycle* marks) {
  if (g.svg_path.empty()) return;
  write_file(g.svg_path, render_svg(curves, marks, fit_render_spec(curves, marks)));
}

TropPolynomial polynomial_arg(const std::string& text) {
  try {
    const TropPolynomial f = parse_polynomial(text);
    if (f.dimension() > 2) {
      throw Error(ErrorCode::DimensionMismatch,
                  "plane curves need a bivariate polynomial, got " + std::to_string(f.dimension()) +
                      " variables");
    }
    return f.dimension() == 2 ? f : parse_polynomial(text, 2);
  } catch (const ParseError& e) {
    std::ostringstream msg;
    msg << "ParseError: " << e.what() << "\n  " << text << "\n  "
        << std::string(std::min(e.position(), text.size()), ' ') << "^";
    throw Failure{kParse, msg.str()};
  }
}

Json json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return io::parse(text);
  } catch (const ParseError& e) {
    throw Failure{kParse, "ParseError: " + path + " at byte " + std::to_string(e.position()) +
                              ": " + e.what()};
  }
}

std::string summary(const ZeroCycle& z) {
  std::ostringstream s;
  s << "degree " << degree(z) << "; " << z.points().size() << (z.points().size() == 1 ? " point" : " points");
  if (z.empty()) return s.str();
  s << " (";
  if (z.points().size() <= 4) {
    for (std::size_t i = 0; i < z.points().size(); ++i) {
      s << (i ? ", " : "") << "w=" << z.points()[i].weight;
    }
  } else {
    std::map<std::int64_t, std::size_t> by_weight;
    for (const auto& p : z.points()) ++by_weight[p.weight];
    bool first = true;
    for (const auto& [w, n] : by_weight) {
      s << (first ? "" : ", ") << n << "×w=" << w;
      first = false;
    }
  }
  s << ")";
  return s.str();
}

int cmd_curve(const Globals& g, const std::string& text, std::ostream& out) {
  const PlanarCurve curve = build_curve(polynomial_arg(text));
  emit(g, io::curve_json(curve), out);
  if (!g.json_path.empty()) {
    out << curve.vertices.size() << " vertices, " << curve.edges.size() << " edges";
    if (auto d = curve_degree(curve)) out << ", degree " << *d;
    out << "\n";
  }
  const Cycle1 c = as_cycle(curve);
  emit_svg(g, std::span<const Cycle1>(&c, 1), nullptr);
  return kOk;
}

int cmd_intersect(const Globals& g, const std::string& first, const std::string& second,
                  std::ostream& out) {
  const auto f = polynomial_arg(first);
  const auto h = polynomial_arg(second);
  const std::vector<Cycle1> curves{as_cycle(build_curve(f)), as_cycle(build_curve(h))};
  const ZeroCycle z = stable_intersection(curves[0], curves[1]);
  out << summary(z) << "\n";
  for (const auto& p : z.points()) {
    out << "  (" << to_string(p.position[0]) << ", " << to_string(p.position[1]) << ") w=" << p.weight
        << "\n";
  }
  if (!g.json_path.empty()) write_file(g.json_path, io::dump(io::zero_cycle_json(z)));
  emit_svg(g, curves, &z);
  return kOk;
}

struct CountArgs {
  int d = 0;
  int g = 0;
  std::string points_path;
  bool welschinger = false;
};

int cmd_count(const Globals& g, const CountArgs& a, std::ostream& out) {
  std::vector<Point2> points;
  std::optional<std::uint64_t> seed;
  if (!a.points_path.empty()) {
    points = io::points_from_json(json_file(a.points_path));
  } else {
    seed = g.seed.value_or(1);
    points = sample_configuration(a.d, a.g, *seed);
  }
  const CountResult result = count_curves(a.d, a.g, points);
  emit(g, io::count_json(result, seed, a.welschinger), out);
  if (!g.json_path.empty()) {
    out << "N_trop " << result.N_trop;
    if (a.welschinger) out << ", W_trop " << result.W_trop;
    out << "\n";
  }
  if (!g.svg_path.empty()) {
    std::vector<Cycle1> curves;
    for (const auto& s : result.solutions) curves.push_back(s.solution.curve);
    std::vector<WeightedPoint> marks;
    for (const auto& p : points) marks.push_back({{p[0], p[1]}, 1});
    const ZeroCycle z(std::move(marks));
    emit_svg(g, curves, &z);
  }
  return kOk;
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(io::rational_json(x));
  return out;
}

int cmd_graph(const Globals& g, const std::string& op, const std::string& path, std::ostream& out) {
  const Json doc = json_file(path);
  std::optional<MetricGraph> graph;
  try {
    graph.emplace(io::graph_from_json(doc));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError || e.code() == ErrorCode::ParseError) throw;
    throw Failure{kGraph, std::string(e.name()) + ": " + e.what()};
  }
  Json result;
  try {
    if (op == "genus") {
      result["genus"] = genus(*graph);
      result["one_forms_dimension"] = one_forms_dimension(*graph);
    } else if (op == "jacobian") {
      const PeriodLattice lattice = jacobian(*graph);
      result["genus"] = lattice.genus;
      result["basis"] = lattice.basis;
      Json gram = Json::array();
      for (const auto& row : lattice.gram) gram.push_back(rationals(row));
      result["gram"] = std::move(gram);
    } else if (op == "abel-jacobi") {
      const GraphDivisor divisor = io::divisor_from_json(doc, *graph);
      const PeriodLattice lattice = jacobian(*graph);
      result["genus"] = lattice.genus;
      result["coordinates"] = rationals(abel_jacobi(*graph, divisor));
    } else {
      const ModuliVector z = moduli_distance_vector(*graph);
      result["labels"] = z.labels;
      Json pairs = Json::array();
      for (const auto& [a, b] : z.pairs) pairs.push_back({a, b});
      result["pairs"] = std::move(pairs);
      result["Z"] = rationals(z.values);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    throw Failure{kGraph, std::string(e.name()) + ": " + e.what()};
  }
  emit(g, result, out);
  return kOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const Cycle1 cycle = io::cycle_from_json(json_file(path));
  const BalancingReport report = check_balancing_cycle(cycle);
  if (report.balanced()) {
    out << "balanced: " << cycle.vertices().size() << " vertices, " << cycle.edges().size()
        << " edges\n";
    return kOk;
  }
  for (const auto& v : report.violations) {
    out << "unbalanced vertex " << v.vertex << ": residual (";
    for (std::size_t i = 0; i < v.residual.size(); ++i) out << (i ? ", " : "") << v.residual[i];
    out << ")\n";
  }
  return kFailure;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
      return kParse;
    case ErrorCode::DegenerateInput:
      return kDegenerate;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::AmbientDimUnsupported:
      return kDimension;
    case ErrorCode::NonGenericConfiguration:
      return kNonGeneric;
    case ErrorCode::UnsupportedDegree:
      return kUnsupported;
    default:
      return kFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical geometry: plane curves, stable intersection, metric graphs and curve counts",
               "tropocalc"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = 0;
  app.add_option("--json", g.json_path, "Write the JSON document to this file");
  app.add_option("--svg", g.svg_path, "Write an SVG figure to this file");
  auto* seed_opt = app.add_option("--seed", seed, "Seed of the random point configuration");

  std::string poly;
  auto* curve = app.add_subcommand("curve", "Tropical curve of a bivariate polynomial");
  curve->add_option("polynomial", poly, "e.g. \"1 + 0*x + 0*y\"")->required();

  std::string first, second;
  auto* intersect = app.add_subcommand("intersect", "Stable intersection of two plane curves");
  intersect->add_option("f", first)->required();
  intersect->add_option("g", second)->required();

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count curves through points with multiplicities");
  count->add_option("-d", count_args.d, "Degree")->required();
  count->add_option("-g", count_args.g, "Genus")->default_val(0);
  count->add_option("--points", count_args.points_path, "JSON file with a list of [x, y] pairs");
  count->add_flag("--welschinger", count_args.welschinger, "Include the real count W_trop");

  std::string op, graph_path;
  auto* graph = app.add_subcommand("graph", "Metric graph invariants");
  graph->add_option("operation", op)
      ->required()
      ->check(CLI::IsMember({"genus", "jacobian", "abel-jacobi", "moduli"}));
  graph->add_option("file", graph_path, "Graph JSON")->required();

  std::string cycle_path;
  auto* validate = app.add_subcommand("validate", "Check balancing of a cycle or curve JSON file");
  validate->add_option("file", cycle_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }
  if (seed_opt->count() > 0) g.seed = seed;

  try {
    if (*curve) return cmd_curve(g, poly, out);
    if (*intersect) return cmd_intersect(g, first, second, out);
    if (*count) return cmd_count(g, count_args, out);
    if (*graph) return cmd_graph(g, op, graph_path, out);
    if (*validate) return cmd_validate(cycle_path, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    if (e.code() == ErrorCode::NonGenericConfiguration) {
      err << "hint: the points are not in general position; resample with a different --seed\n";
    }
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace tropo::cli
