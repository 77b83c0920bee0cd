#include "cnc/json_io.hpp"

#include <algorithm>
#include <set>

namespace cnc {

namespace {

void only_fields(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw InputError(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

const Json& field(const Json& j, const char* name, const char* what) {
  if (!j.contains(name)) throw InputError(std::string(what) + ": missing field \"" + name + "\"");
  return j.at(name);
}

long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<long long>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(static_cast<int>(integer(e, what)));
  return out;
}

std::vector<std::pair<Vertex, Vertex>> pair_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of pairs");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : j) {
    const auto p = int_list(e, what);
    if (p.size() != 2) throw InputError(std::string(what) + ": expected a pair");
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

template <class F>
auto rethrow_as_input(F f, const char* what) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"type", "graph"}, {"n", g.order()}, {"edges", edges}};
}

Json to_json(const Digraph& x) {
  Json arcs = Json::array();
  for (const auto& [u, v] : x.arcs()) arcs.push_back({u, v});
  return Json{{"type", "digraph"}, {"n", x.order()}, {"edges", arcs}};
}

GeneratedGraph graph_from_json(const Json& j) {
  only_fields(j, {"type", "n", "edges"}, "graph");
  const auto& type = field(j, "type", "graph");
  if (!type.is_string()) throw InputError("graph: \"type\" must be a string");
  const int n = static_cast<int>(integer(field(j, "n", "graph"), "graph n"));
  const auto edges = pair_list(field(j, "edges", "graph"), "graph edges");
  GeneratedGraph out;
  const auto t = type.get<std::string>();
  if (t == "graph")
    out.graph = rethrow_as_input([&] { return Graph(n, edges); }, "graph");
  else if (t == "digraph")
    out.digraph = rethrow_as_input([&] { return Digraph(n, edges); }, "digraph");
  else
    throw InputError("graph: unknown type \"" + t + "\"");
  return out;
}

Json to_json(const SimplicialComplex& k) {
  Json out{{"ground", k.ground()}};
  if (k.is_void()) {
    out["void"] = true;
    return out;
  }
  std::vector<Simplex> facets = k.facets();
  std::sort(facets.begin(), facets.end());
  Json fs = Json::array();
  for (const auto& f : facets) fs.push_back(f);
  out["facets"] = fs;
  return out;
}

SimplicialComplex complex_from_json(const Json& j) {
  only_fields(j, {"ground", "facets", "void"}, "complex");
  const auto ground = int_list(field(j, "ground", "complex"), "complex ground");
  const bool is_void = j.contains("void") && j.at("void").is_boolean() && j.at("void").get<bool>();
  if (j.contains("void") && !j.at("void").is_boolean()) throw InputError("complex: \"void\" must be a boolean");
  if (is_void) {
    if (j.contains("facets") && !j.at("facets").empty()) throw InputError("complex: void complex with facets");
    return SimplicialComplex::void_complex(ground);
  }
  const auto& fs = field(j, "facets", "complex");
  if (!fs.is_array()) throw InputError("complex: \"facets\" must be an array");
  std::vector<Simplex> facets;
  for (const auto& f : fs) facets.push_back(int_list(f, "complex facet"));
  if (facets.empty()) throw InputError("complex: empty facet list (use \"void\": true)");
  return rethrow_as_input([&] { return SimplicialComplex::from_generators(ground, facets); }, "complex");
}

Json to_json(const Hypergraph& h) {
  Json es = Json::array();
  for (const auto& e : h.hyperedges) es.push_back(e);
  return Json{{"n", h.n}, {"hyperedges", es}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  only_fields(j, {"n", "hyperedges"}, "hypergraph");
  const int n = static_cast<int>(integer(field(j, "n", "hypergraph"), "hypergraph n"));
  const auto& es = field(j, "hyperedges", "hypergraph");
  if (!es.is_array()) throw InputError("hypergraph: \"hyperedges\" must be an array");
  std::vector<Simplex> edges;
  for (const auto& e : es) edges.push_back(int_list(e, "hyperedge"));
  return rethrow_as_input([&] { return Hypergraph(n, edges); }, "hypergraph");
}

Json to_json(const HomologyResult& h) {
  Json dims = Json::object();
  for (int d = -1; d <= h.top_dimension(); ++d) {
    Json torsion = Json::array();
    for (const auto& t : h.torsion(d)) torsion.push_back(t.str());
    dims[std::to_string(d)] = Json{{"betti", h.betti(d)}, {"torsion", torsion}};
  }
  return Json{{"dims", dims}};
}

HomologyResult homology_from_json(const Json& j) {
  only_fields(j, {"dims"}, "homology");
  const auto& dims = field(j, "dims", "homology");
  if (!dims.is_object()) throw InputError("homology: \"dims\" must be an object");
  HomologyResult out;
  for (const auto& [key, value] : dims.items()) {
    only_fields(value, {"betti", "torsion"}, "homology group");
    int d;
    try {
      std::size_t used = 0;
      d = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("homology: bad dimension \"" + key + "\"");
    }
    HomologyGroup g;
    g.betti = integer(field(value, "betti", "homology group"), "betti");
    const auto& ts = field(value, "torsion", "homology group");
    if (!ts.is_array()) throw InputError("homology: torsion must be an array");
    for (const auto& t : ts) {
      if (t.is_string())
        g.torsion.push_back(rethrow_as_input([&] { return BigInt(t.get<std::string>()); }, "torsion"));
      else
        g.torsion.emplace_back(integer(t, "torsion"));
    }
    rethrow_as_input([&] { out.set(d, g); return 0; }, "homology");
  }
  return out;
}

Json to_json(const GroupPresentation& p) {
  Json rs = Json::array();
  for (const auto& r : p.relators) rs.push_back(r);
  return Json{{"generators", p.generators}, {"relators", rs}};
}

GroupPresentation presentation_from_json(const Json& j) {
  only_fields(j, {"generators", "relators"}, "presentation");
  GroupPresentation p;
  p.generators = static_cast<int>(integer(field(j, "generators", "presentation"), "generators"));
  if (p.generators < 0) throw InputError("presentation: negative generator count");
  const auto& rs = field(j, "relators", "presentation");
  if (!rs.is_array()) throw InputError("presentation: \"relators\" must be an array");
  for (const auto& r : rs) {
    Word w = int_list(r, "relator");
    for (int x : w)
      if (x == 0 || std::abs(x) > p.generators) throw InputError("presentation: relator references a missing generator");
    p.relators.push_back(free_reduce(std::move(w)));
  }
  return p;
}

Json to_json(const FiniteMetricSpace& x) {
  Json rows = Json::array();
  for (const auto& row : x.matrix()) {
    Json r = Json::array();
    for (const auto& d : row) r.push_back(format_rational(d));
    rows.push_back(r);
  }
  return Json{{"n", x.size()}, {"dist", rows}};
}

FiniteMetricSpace metric_from_json(const Json& j) {
  only_fields(j, {"n", "dist"}, "metric");
  const auto n = integer(field(j, "n", "metric"), "metric n");
  const auto& rows = field(j, "dist", "metric");
  if (!rows.is_array() || static_cast<long long>(rows.size()) != n) throw InputError("metric: dist must have n rows");
  std::vector<std::vector<Rational>> d;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("metric: rows must be arrays");
    std::vector<Rational> r;
    for (const auto& e : row) {
      if (e.is_string())
        r.push_back(rethrow_as_input([&] { return parse_rational(e.get<std::string>()); }, "metric entry"));
      else
        r.emplace_back(integer(e, "metric entry"));
    }
    d.push_back(std::move(r));
  }
  return rethrow_as_input([&] { return FiniteMetricSpace(d); }, "metric");
}

}  // namespace cnc
