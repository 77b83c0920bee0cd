#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cnc/complex.hpp"
#include "cnc/graph.hpp"
#include "cnc/homology.hpp"
#include "cnc/hypergraph.hpp"
#include "cnc/metric.hpp"
#include "cnc/presentation.hpp"

namespace cnc {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json parse_json(const std::string& text);

Json to_json(const Graph& g);
Json to_json(const Digraph& x);
/// Reads {"type":"graph"|"digraph","n":..,"edges":..}; exactly one member
/// of the result is set.
GeneratedGraph graph_from_json(const Json& j);

Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json to_json(const HomologyResult& h);
HomologyResult homology_from_json(const Json& j);

Json to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);

Json to_json(const FiniteMetricSpace& x);
FiniteMetricSpace metric_from_json(const Json& j);

}  // namespace cnc
