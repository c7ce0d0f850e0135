#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tropocalc/cycles.hpp"
#include "tropocalc/enumeration.hpp"
#include "tropocalc/metric_graph.hpp"
#include "tropocalc/planar_curve.hpp"

// JSON documents exchanged by the command-line tool and the Python module.
// Rationals are lowest-terms strings ("p/q", or "p" for integers). Readers
// throw SchemaError on a structural mismatch; emit -> read -> emit is
// byte-identical.

namespace tropo::io {

using Json = nlohmann::ordered_json;

/// Parses text into a document; throws ParseError with the byte offset.
Json parse(std::string_view text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& doc);

Json rational_json(const Rational& value);
Rational rational_from(const Json& value);

/// {"polynomial", "vertices", "edges", "subdivision"}
Json curve_json(const PlanarCurve& curve);
/// Rebuilds the curve from "polynomial" and checks that the stored vertices,
/// edges and subdivision agree with it.
PlanarCurve curve_from_json(const Json& doc);

/// {"vertices", "edges"}; any "polynomial" or "subdivision" key is ignored on
/// input, so curve documents are accepted too.
Json cycle_json(const Cycle1& cycle);
Cycle1 cycle_from_json(const Json& doc);

/// {"points": [{"pos", "weight"}]}
Json zero_cycle_json(const ZeroCycle& z);
ZeroCycle zero_cycle_from_json(const Json& doc);

/// {"vertices", "edges", "markings"} plus an optional "divisor" list whose
/// entries are {"vertex", "weight"} or {"edge", "offset", "weight"}.
Json graph_json(const MetricGraph& g, const GraphDivisor* divisor = nullptr);
MetricGraph graph_from_json(const Json& doc);
/// The "divisor" block of a graph document; empty when absent.
GraphDivisor divisor_from_json(const Json& doc, const MetricGraph& g);

/// List of [x, y] pairs.
Json points_json(const std::vector<Point2>& points);
std::vector<Point2> points_from_json(const Json& doc);

/// {"d", "g", "points", "seed", "solutions", "N_trop"(, "W_trop")}. "seed" is
/// null for user-supplied points.
Json count_json(const CountResult& result, std::optional<std::uint64_t> seed,
                bool with_welschinger);

struct CountDocument {
  CountResult result;
  std::optional<std::uint64_t> seed;
  bool with_welschinger = false;
};
CountDocument count_from_json(const Json& doc);

}  // namespace tropo::io
