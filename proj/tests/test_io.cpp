#include <doctest.h>

#include "cnc/json_io.hpp"
#include "cnc/verify.hpp"

using namespace cnc;

TEST_CASE("JSON round trips") {
  const Graph g = families::cycle(5);
  CHECK(graph_from_json(to_json(g)).graph == g);
  const Digraph x = families::x2();
  CHECK(graph_from_json(to_json(x)).digraph == x);
  const auto k = closed_neighborhood_complex(g, 1);
  CHECK(complex_from_json(to_json(k)) == k);
  const auto v = SimplicialComplex::void_complex({0, 1});
  CHECK(complex_from_json(to_json(v)) == v);
  const auto e = SimplicialComplex::empty_simplex({0, 1});
  CHECK(complex_from_json(to_json(e)) == e);
  const Hypergraph h(3, {{0, 1}, {2}});
  CHECK(hypergraph_from_json(to_json(h)) == h);
  HomologyResult hr;
  hr.set(1, {2, {BigInt(2), BigInt(4)}});
  CHECK(homology_from_json(to_json(hr)) == hr);
  const GroupPresentation p{2, {{1, -2}, {2, 2}}};
  CHECK(presentation_from_json(to_json(p)) == p);
  const auto m = circle_metric(circle_sample(5));
  CHECK(metric_from_json(to_json(m)) == m);
  CHECK(to_json(m)["dist"][0][1] == "1/5");
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{"), InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"type":"graph","n":2,"edges":[[0,2]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"type":"graph","n":2,"edges":[],"x":1})")), InputError);
  CHECK_THROWS_AS(complex_from_json(parse_json(R"({"ground":[0],"facets":[[1]]})")), InputError);
  CHECK_THROWS_AS(metric_from_json(parse_json(R"({"n":2,"dist":[["0","1"],["2","0"]]})")), InputError);
}

TEST_CASE("suite reports") {
  CHECK_THROWS_AS(run_suite("nope", 1), std::invalid_argument);
  const auto a = run_suite("wedge-k2kn", 5);
  CHECK(a.cases == 6);
  CHECK(a.passed());
  CHECK(a.exit_code() == 0);
  const auto b1 = run_suite("nagel-reiner", 9, 30);
  const auto b2 = run_suite("nagel-reiner", 9, 30);
  CHECK(to_json(b1, false).dump() == to_json(b2, false).dump());
  CHECK(b1.cases == 30);
  const auto c = run_suite("alexander", 4, 40);
  CHECK(c.cases == 40);
  const auto json = to_json(a);
  for (const char* key : {"suite", "seed", "cases", "failures", "inconclusive", "wall_time_seconds"})
    CHECK(json.contains(key));
}

TEST_CASE("describe") {
  HomologyResult h;
  CHECK(describe(h) == "{}");
  h.set(1, {3, {}});
  h.set(2, {0, {BigInt(2)}});
  CHECK(describe(h) == "{1: Z^3, 2: Z/2}");
}
