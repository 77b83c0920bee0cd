#include <doctest.h>

#include <algorithm>

#include "cnc/graph.hpp"
#include "oracles.hpp"

using namespace cnc;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

bool is_cycle_graph(const Graph& g) {
  return connected_components(g).size() == 1 && degree_sequence(g) == std::vector<int>(g.order(), 2);
}

}  // namespace

TEST_CASE("complement") {
  CHECK(complement(families::complete(3)) == families::edgeless(3));
  CHECK(complement(families::cycle(4)) == Graph(4, {{0, 2}, {1, 3}}));
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < count; code += (n == 6 ? 97 : 1)) {
      const Graph g = graph_from_code(n, code);
      CHECK(complement(complement(g)) == g);
    }
  }
}

TEST_CASE("categorical product and double cover") {
  const Graph k2 = families::complete(2);
  CHECK(categorical_product(k2, k2) == Graph(4, {{0, 3}, {1, 2}}));
  const Graph c6 = double_cover(families::complete(3));
  CHECK(c6.size() == 6);
  CHECK(is_cycle_graph(c6));
  CHECK(is_cycle_graph(categorical_product(k2, families::complete(3))));

  const Graph c4c4 = double_cover(families::cycle(4));
  const auto comps = connected_components(c4c4);
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) CHECK(is_cycle_graph(induced_subgraph(c4c4, c)));

  const Graph k4 = double_cover(families::complete(4));
  CHECK(k4.order() == 8);
  CHECK(k4.size() == 12);
  CHECK(is_bipartite(k4));
  CHECK(connected_components(k4).size() == 1);

  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = families::erdos_renyi(1 + static_cast<int>(rng.below(8)), 1, 2, rng.next());
    const Graph d = double_cover(g);
    CHECK(is_bipartite(d));
    CHECK(d.size() == 2 * g.size());
    if (is_bipartite(g)) {
      CHECK(connected_components(d).size() == 2 * connected_components(g).size());
      auto twice = degree_sequence(disjoint_union(g, g));
      CHECK(degree_sequence(d) == twice);
    }
  }
}

TEST_CASE("cartesian product") {
  CHECK(is_cycle_graph(cartesian_product(families::complete(2), families::complete(2))));
  const Graph h = families::cycle(5);
  CHECK(cartesian_product(families::complete(1), h) == h);
  const Graph r = cartesian_product(families::complete(3), families::complete(3));
  CHECK(r.order() == 9);
  CHECK(degree_sequence(r) == std::vector<int>(9, 4));
  CHECK(r == families::rook(3, 3));
}

TEST_CASE("closed k-neighborhoods") {
  const Graph c6 = families::cycle(6);
  CHECK(closed_k_neighborhood(c6, 0, 1) == VertexList{0, 1, 5});
  CHECK(closed_k_neighborhood(c6, 0, 2) == VertexList{0, 1, 2, 4, 5});
  for (Vertex v = 0; v < 5; ++v) CHECK(closed_k_neighborhood(families::cycle(5), v, 2).size() == 5);
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = families::erdos_renyi(1 + static_cast<int>(rng.below(10)), 1, 3, rng.next());
    const int k = 1 + static_cast<int>(rng.below(3));
    for (Vertex v = 0; v < g.order(); ++v) CHECK(closed_k_neighborhood(g, v, k) == oracle::ball(g, v, k));
  }
}

TEST_CASE("domination number") {
  CHECK(domination_number(families::path(3)) == 1);
  CHECK(domination_number(families::cycle(4)) == 2);
  CHECK(domination_number(families::cycle(5)) == 2);
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const Graph g = families::erdos_renyi(static_cast<int>(rng.below(11)), 1, 4, rng.next());
    CHECK(domination_number(g) == oracle::domination_number(g));
  }
}

TEST_CASE("bipartition") {
  const auto b = is_bipartite(families::cycle(4));
  REQUIRE(b);
  CHECK(b->left == VertexList{0, 2});
  CHECK(b->right == VertexList{1, 3});
  CHECK_FALSE(is_bipartite(families::cycle(5)));
  CHECK(is_bipartite(families::edgeless(3)));
}

TEST_CASE("graph maps preserve closed k-neighborhoods") {
  const Graph c4 = families::cycle(4), k2 = families::complete(2);
  CHECK(is_graph_map({4, {0, 1, 2, 3}}, c4, c4));
  CHECK(is_graph_map({2, {1, 1, 1, 1}}, c4, k2));
  CHECK(is_graph_map({2, {0, 0, 1, 1}}, c4, k2));
  CHECK(is_graph_map({2, {0, 1, 0, 1}}, c4, k2));
  CHECK_FALSE(is_graph_map({3, {0, 0, 1, 2}}, c4, families::path(3)));

  Rng rng(17);
  int tested = 0;
  for (int i = 0; i < 3000 && tested < 150; ++i) {
    const Graph g = families::erdos_renyi(1 + static_cast<int>(rng.below(6)), 1, 2, rng.next());
    const Graph h = families::erdos_renyi(1 + static_cast<int>(rng.below(5)), 2, 3, rng.next());
    VertexMap f{h.order(), {}};
    for (Vertex v = 0; v < g.order(); ++v) f.image.push_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(h.order()))));
    if (!is_graph_map(f, g, h)) continue;
    ++tested;
    for (int k = 1; k <= 3; ++k)
      for (Vertex v = 0; v < g.order(); ++v) {
        const auto target = closed_k_neighborhood(h, f.image[static_cast<std::size_t>(v)], k);
        for (Vertex w : closed_k_neighborhood(g, v, k))
          CHECK(std::binary_search(target.begin(), target.end(), f.image[static_cast<std::size_t>(w)]));
      }
  }
  CHECK(tested == 150);
}

TEST_CASE("families") {
  const auto k4 = generate("complete", {4});
  REQUIRE(k4.graph);
  CHECK(k4.graph->size() == 6);
  const auto x1 = generate("x1", {});
  REQUIRE(x1.digraph);
  CHECK(x1.digraph->order() == 3);
  CHECK(x1.digraph->arcs() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 1}});
  const auto x2 = families::x2();
  CHECK(x2.order() == 4);
  CHECK(x2.arcs().size() == 4);
  CHECK(families::path(4).size() == 3);
  CHECK(families::hypercube(3).size() == 12);
  CHECK(families::erdos_renyi(8, 1, 2, 42) == families::erdos_renyi(8, 1, 2, 42));
  CHECK(is_forest(families::random_forest(12, 9)));
  CHECK_THROWS_AS(generate("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(generate("complete", {}), std::invalid_argument);
}
