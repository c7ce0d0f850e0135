#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropocalc/enumeration.hpp"
#include "tropocalc/error.hpp"
#include "tropocalc/io.hpp"
#include "tropocalc/metric_graph.hpp"
#include "tropocalc/planar_curve.hpp"
#include "tropocalc/tropical_algebra.hpp"

namespace py = pybind11;
using tropo::io::Json;

// Structured values cross the boundary as JSON text; the Python package
// decodes them.

namespace bind {

std::string dump(const Json& doc) { return doc.dump(); }

Json rationals(const std::vector<tropo::Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(tropo::to_string(x));
  return out;
}

tropo::TropPolynomial planar(const std::string& text) {
  auto f = tropo::parse_polynomial(text);
  return f.dimension() == 1 ? tropo::parse_polynomial(text, 2) : f;
}

std::string evaluate(const std::string& poly, const std::vector<std::string>& point) {
  const auto f = tropo::parse_polynomial(poly, static_cast<int>(point.size()));
  std::vector<tropo::TropNum> x;
  for (const auto& c : point) {
    x.push_back(c == "-inf" ? tropo::TropNum::neg_infinity() : tropo::TropNum(tropo::parse_rational(c)));
  }
  return tropo::to_string(tropo::evaluate(f, x));
}

std::string canonicalize(const std::string& poly) {
  return tropo::to_text(tropo::canonicalize(tropo::parse_polynomial(poly)));
}

std::vector<std::vector<int>> essential_support(const std::string& poly) {
  const auto s = tropo::essential_support(tropo::parse_polynomial(poly));
  return {s.begin(), s.end()};
}

std::string build_curve(const std::string& poly) {
  return dump(tropo::io::curve_json(tropo::build_curve(planar(poly))));
}

bool is_balanced(const std::string& cycle) {
  return tropo::check_balancing_cycle(tropo::io::cycle_from_json(tropo::io::parse(cycle))).balanced();
}

std::string stable_intersection(const std::string& f, const std::string& g) {
  const auto a = tropo::as_cycle(tropo::build_curve(planar(f)));
  const auto b = tropo::as_cycle(tropo::build_curve(planar(g)));
  return dump(tropo::io::zero_cycle_json(tropo::stable_intersection(a, b)));
}

std::string sample_configuration(int d, int g, std::uint64_t seed) {
  return dump(tropo::io::points_json(tropo::sample_configuration(d, g, seed)));
}

std::string count_curves(int d, int g, std::optional<std::uint64_t> seed,
                         std::optional<std::string> points, unsigned threads) {
  std::vector<tropo::Point2> pts;
  if (points) {
    pts = tropo::io::points_from_json(tropo::io::parse(*points));
  } else {
    seed = seed.value_or(1);
    pts = tropo::sample_configuration(d, g, *seed);
  }
  tropo::CountResult result;
  {
    py::gil_scoped_release release;
    result = tropo::count_curves(d, g, pts, {threads});
  }
  return dump(tropo::io::count_json(result, seed, true));
}

tropo::MetricGraph graph(const std::string& doc) {
  return tropo::io::graph_from_json(tropo::io::parse(doc));
}

int genus(const std::string& doc) { return tropo::genus(graph(doc)); }

std::string jacobian(const std::string& doc) {
  const auto lattice = tropo::jacobian(graph(doc));
  Json gram = Json::array();
  for (const auto& row : lattice.gram) gram.push_back(rationals(row));
  return dump({{"genus", lattice.genus}, {"basis", lattice.basis}, {"gram", gram}});
}

std::string abel_jacobi(const std::string& doc) {
  const Json parsed = tropo::io::parse(doc);
  const auto g = tropo::io::graph_from_json(parsed);
  return dump(rationals(tropo::abel_jacobi(g, tropo::io::divisor_from_json(parsed, g))));
}

std::string moduli_distance_vector(const std::string& doc) {
  const auto z = tropo::moduli_distance_vector(graph(doc));
  return dump({{"labels", z.labels}, {"pairs", z.pairs}, {"Z", rationals(z.values)}});
}

py::tuple is_tree_metric(const std::vector<std::string>& values, std::vector<std::string> labels) {
  std::vector<tropo::Rational> v;
  for (const auto& x : values) v.push_back(tropo::parse_rational(x));
  const auto r = tropo::is_tree_metric(v, std::move(labels));
  if (!r.tree) return py::make_tuple(r.is_tree_metric, py::none());
  return py::make_tuple(r.is_tree_metric, dump(tropo::io::graph_json(*r.tree)));
}

}  // namespace bind

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tropical geometry core";

  static py::exception<tropo::Error> error(m, "TropocalcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tropo::Error& e) {
      py::set_error(error, (std::string(e.name()) + ": " + e.what()).c_str());
    }
  });

  m.def("evaluate", &bind::evaluate, py::arg("poly"), py::arg("point"));
  m.def("canonicalize", &bind::canonicalize, py::arg("poly"));
  m.def("essential_support", &bind::essential_support, py::arg("poly"));
  m.def("build_curve", &bind::build_curve, py::arg("poly"));
  m.def("is_balanced", &bind::is_balanced, py::arg("cycle"));
  m.def("stable_intersection", &bind::stable_intersection, py::arg("f"), py::arg("g"));
  m.def("sample_configuration", &bind::sample_configuration, py::arg("d"), py::arg("g"), py::arg("seed"));
  m.def("count_curves", &bind::count_curves, py::arg("d"), py::arg("g") = 0, py::arg("seed") = py::none(),
        py::arg("points") = py::none(), py::arg("threads") = 0u);
  m.def("genus", &bind::genus, py::arg("graph"));
  m.def("jacobian", &bind::jacobian, py::arg("graph"));
  m.def("abel_jacobi", &bind::abel_jacobi, py::arg("graph"));
  m.def("moduli_distance_vector", &bind::moduli_distance_vector, py::arg("graph"));
  m.def("is_tree_metric", &bind::is_tree_metric, py::arg("values"),
        py::arg("labels") = std::vector<std::string>{});
}
