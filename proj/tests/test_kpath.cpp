#include <doctest.h>

#include <algorithm>

#include "cnc/complex.hpp"
#include "cnc/kpath.hpp"

using namespace cnc;

namespace {

std::vector<GraphPath> loops(const Graph& g, Vertex v, int len) {
  std::vector<GraphPath> out{{v}};
  for (int step = 0; step < len; ++step) {
    std::vector<GraphPath> next;
    for (const auto& p : out) {
      VertexList options{p.back()};
      for (Vertex w : g.neighbors(p.back())) options.push_back(w);
      for (Vertex w : options) {
        auto q = p;
        q.push_back(w);
        next.push_back(q);
      }
    }
    out = std::move(next);
  }
  std::erase_if(out, [&](const GraphPath& p) { return p.back() != v; });
  return out;
}

DigraphPath random_path(Rng& rng, const Digraph& x, int len) {
  DigraphPath p;
  p.vertices.push_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(x.order()))));
  for (int i = 0; i < len; ++i) {
    const auto& nb = x.out_neighbors(p.vertices.back());
    if (nb.empty() || rng.chance(1, 4)) {
      p.vertices.push_back(p.vertices.back());
    } else {
      p.vertices.push_back(nb[rng.below(nb.size())]);
    }
    p.forward.push_back(rng.chance(1, 2));
  }
  return p;
}

}  // namespace

TEST_CASE("graph path moves") {
  const Graph c4 = families::cycle(4);
  const auto from_edge = moves_graph(c4, {0, 1}, 2);
  CHECK(std::find(from_edge.begin(), from_edge.end(), GraphPath{0, 0, 1}) != from_edge.end());
  const auto m = moves_graph(c4, {0, 1, 0}, 2);
  CHECK(std::find(m.begin(), m.end(), GraphPath{0, 3, 0}) != m.end());
  CHECK(is_single_graph_move(c4, {0, 1, 0}, {0, 3, 0}, 2));
  CHECK_FALSE(is_single_graph_move(c4, {0, 1, 2}, {0, 3, 2, 1}, 2));

  const Graph k4 = families::complete(4);
  for (int k = 2; k <= 3; ++k)
    for (int len = 0; len <= 4; ++len)
      for (const auto& p : loops(k4, 0, len))
        for (const auto& q : moves_graph(k4, p, k)) {
          CHECK(is_graph_path(k4, q));
          CHECK(q.front() == p.front());
          CHECK(q.back() == p.back());
          CHECK(is_single_graph_move(k4, p, q, k));
        }
}

TEST_CASE("bounded equivalence search") {
  const auto k3 = bounded_equivalence_graph(families::complete(3), {0, 1, 2, 0}, {0}, 2, 6, 100000);
  CHECK(k3.equivalent);
  REQUIRE_FALSE(k3.witness.empty());
  CHECK(k3.witness.front() == GraphPath{0, 1, 2, 0});
  CHECK(k3.witness.back() == GraphPath{0});
  const auto c4 = bounded_equivalence_graph(families::cycle(4), {0, 1, 2, 3, 0}, {0}, 2, 7, 100000);
  CHECK(c4.equivalent);
  for (std::size_t i = 1; i < c4.witness.size(); ++i)
    CHECK(is_single_graph_move(families::cycle(4), c4.witness[i - 1], c4.witness[i], 2));
  const auto c5 = bounded_equivalence_graph(families::cycle(5), {0, 1, 2, 3, 4, 0}, {0}, 2, 7, 20000);
  CHECK_FALSE(c5.equivalent);
  CHECK(c5.witness.empty());
}

TEST_CASE("phi and psi") {
  const Graph c4 = families::cycle(4);
  CHECK(phi_map(c4, {0}, 1) == GraphPath{0});
  CHECK(phi_map(c4, {0, 2, 0}, 1) == GraphPath{0, 1, 2, 1, 0});
  CHECK(psi_map(c4, {0}, 1) == VertexList{0});
  CHECK(psi_map(c4, {0, 1, 2, 3, 0}, 1) == VertexList{0, 2, 0});
  CHECK(psi_map(families::cycle(5), {0, 1, 2, 3, 4, 0}, 1) == VertexList{0, 2, 4, 0});

  // Each phi image is a closed graph path and an edge-path of 𝒩[G] maps back.
  const Graph k4 = families::complete(4);
  const auto n = closed_neighborhood_complex(k4, 1);
  for (int len = 0; len <= 4; ++len)
    for (const auto& loop : loops(k4, 0, len)) {
      const auto e = psi_map(k4, loop, 1);
      for (std::size_t i = 1; i < e.size(); ++i) {
        Simplex s{e[i - 1], e[i]};
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        CHECK(n.contains(s));
      }
      const auto back = phi_map(k4, e, 1);
      CHECK(is_graph_path(k4, back));
      CHECK(back.front() == 0);
      CHECK(back.back() == 0);
    }
}

TEST_CASE("edge-path moves become 2-equivalences") {
  // Inserting a back-and-forth step v -> w -> v in an edge-path of 𝒩[G]
  // changes the phi image by a bounded equivalence.
  const Graph c4 = families::cycle(4);
  for (const auto& [a, b] : std::vector<std::pair<VertexList, VertexList>>{
           {{0, 2, 0}, {0}}, {{0, 1, 0}, {0}}, {{0, 1, 2, 0}, {0, 2, 0}}, {{0, 0, 2}, {0, 2}}}) {
    const auto r = bounded_equivalence_graph(c4, phi_map(c4, a, 1), phi_map(c4, b, 1), 2, 8, 200000);
    CHECK(r.equivalent);
  }
}

TEST_CASE("gamma moves on digraph paths") {
  const Digraph x2 = families::x2();
  const DigraphPath at_left{{0}, {}};
  const auto moves = gamma_moves_digraph(x2, at_left, 2, 0);
  CHECK_FALSE(moves.empty());
  bool stationary = false;
  for (const auto& q : moves) {
    CHECK(is_digraph_path(x2, q));
    CHECK(is_gamma_move(x2, at_left, q, 2));
    stationary = stationary || (q.vertices == VertexList{0, 0});
  }
  CHECK(stationary);
  CHECK_THROWS_AS(gamma_moves_digraph(Digraph(9), DigraphPath{{0}, {}}, 2, 0), std::length_error);
}

TEST_CASE("reversal certificates") {
  const Digraph sym = Digraph::from_graph(families::complete(2));
  const DigraphPath fwd{{0, 1}, {true}};
  const auto cert = reversal_equivalence_certificate(sym, fwd, {false});
  CHECK(cert.result == DigraphPath{{0, 1}, {false}});
  CHECK(cert.blocks.size() == 1);
  CHECK(cert.move_count() == 6);
  CHECK(reversal_equivalence_certificate(sym, fwd, {true}).move_count() == 0);

  Rng rng(97);
  for (int i = 0; i < 100; ++i) {
    const Digraph x = Digraph::from_graph(families::erdos_renyi(2 + static_cast<int>(rng.below(4)), 1, 2, rng.next()));
    const auto p = random_path(rng, x, 1 + static_cast<int>(rng.below(4)));
    std::vector<bool> target;
    for (std::size_t j = 0; j < p.length(); ++j) target.push_back(rng.chance(1, 2));
    const auto c = reversal_equivalence_certificate(x, p, target);
    CHECK(c.result.vertices == p.vertices);
    CHECK(c.result.forward == target);
    for (const auto& block : c.blocks)
      for (std::size_t j = 1; j < block.size(); ++j) CHECK(is_gamma_move(x, block[j - 1], block[j], 2));
  }
}
