#include "cnc/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnc {

Hypergraph::Hypergraph(int n_, std::vector<Simplex> edges) : n(n_) {
  if (n < 0) throw std::invalid_argument("hypergraph: negative vertex count");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (int v : e)
      if (v < 0 || v >= n) throw std::out_of_range("hypergraph: member out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  hyperedges = std::move(edges);
}

namespace {

std::vector<int> iota_ground(int n) {
  std::vector<int> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i;
  return g;
}

VertexMask all_of(int n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

}  // namespace

Hypergraph neighborhood_hypergraph(const Graph& g) {
  std::vector<Simplex> edges;
  for (Vertex v = 0; v < g.order(); ++v) edges.push_back(g.neighbors(v));
  return Hypergraph(g.order(), std::move(edges));
}

Hypergraph dominance_hypergraph(const Graph& g) {
  std::vector<Simplex> edges;
  for (Vertex v = 0; v < g.order(); ++v) edges.push_back(closed_k_neighborhood(g, v, 1));
  return Hypergraph(g.order(), std::move(edges));
}

SimplicialComplex independence_complex_hyper(const Hypergraph& h) {
  require_mask_size(h.n, "independence_complex_hyper");
  const auto ground = iota_ground(h.n);
  std::vector<VertexMask> family;
  for (const auto& e : h.hyperedges) {
    if (e.empty()) return SimplicialComplex::void_complex(ground);
    family.push_back(mask_of(e));
  }
  // Maximal independent sets are complements of minimal transversals.
  std::vector<Simplex> gens;
  for (VertexMask t : minimal_transversals(std::move(family))) gens.push_back(list_of(all_of(h.n) & ~t));
  return SimplicialComplex::from_generators(ground, std::move(gens));
}

SimplicialComplex dominance_complex(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw std::length_error("dominance_complex: at most 24 vertices");
  const VertexMask all = all_of(n);
  // Faces are complements of dominating sets; keep the maximal ones.
  std::vector<VertexMask> faces;
  for (VertexMask d = 0; d <= all; ++d)
    if (is_dominating(g, d)) faces.push_back(all & ~d);
  std::vector<Simplex> gens;
  for (VertexMask f : maximal_members(std::move(faces))) gens.push_back(list_of(f));
  auto direct = SimplicialComplex::from_generators(iota_ground(n), std::move(gens));
  auto via_hypergraph = independence_complex_hyper(dominance_hypergraph(g));
  if (!(direct == via_hypergraph)) throw std::logic_error("dominance_complex: constructions disagree");
  return direct;
}

ForestSphere forest_sphere_dimension(const Graph& f) {
  if (!is_forest(f)) throw std::invalid_argument("forest_sphere_dimension: input is not a forest");
  const int n = f.order();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  auto live_neighbors = [&](Vertex v) {
    VertexList out;
    for (Vertex u : f.neighbors(v))
      if (alive[static_cast<std::size_t>(u)]) out.push_back(u);
    return out;
  };
  auto component_size = [&](Vertex v) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    VertexList stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    int size = 0;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex y : live_neighbors(x))
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
    }
    return size;
  };

  ForestSphere out;
  while (true) {
    Vertex leaf = -1;
    for (Vertex v = 0; v < n && leaf < 0; ++v)
      if (alive[static_cast<std::size_t>(v)] && live_neighbors(v).size() == 1 && component_size(v) >= 3) leaf = v;
    if (leaf < 0) break;
    const Vertex u = live_neighbors(leaf)[0];
    Vertex w = -1;
    for (Vertex x : live_neighbors(u))
      if (x != leaf) {
        w = x;
        break;
      }
    // N(leaf) = {u} ⊆ N(w); deleting w suspends once.
    alive[static_cast<std::size_t>(w)] = 0;
    out.removed.push_back(w);
    ++out.suspensions;
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)] && live_neighbors(v).empty()) out.contractible = true;
  if (!out.contractible) {
    out.dimension = out.suspensions - 1;
    const int expected = n - 2 * domination_number(f) - 1;
    if (out.dimension != expected) throw std::logic_error("forest_sphere_dimension: reduction disagrees with ν − 2γ − 1");
  }
  return out;
}

}  // namespace cnc
