#include "cnc/directed.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnc {

namespace {

VertexList reach(const Digraph& x, Vertex v, int k, bool outward) {
  if (k < 1) throw std::invalid_argument("closed k-neighborhood: k must be positive");
  x.check_vertex(v);
  std::vector<char> seen(static_cast<std::size_t>(x.order()), 0);
  seen[static_cast<std::size_t>(v)] = 1;
  VertexList layer{v};
  for (int step = 0; step < k && !layer.empty(); ++step) {
    VertexList next;
    for (Vertex u : layer)
      for (Vertex w : outward ? x.out_neighbors(u) : x.in_neighbors(u))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          next.push_back(w);
        }
    layer = std::move(next);
  }
  VertexList out;
  for (Vertex u = 0; u < x.order(); ++u)
    if (seen[static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

SimplicialComplex complex_of(const Digraph& x, int k, bool outward) {
  std::vector<int> ground(static_cast<std::size_t>(x.order()));
  std::vector<Simplex> gens;
  for (Vertex v = 0; v < x.order(); ++v) {
    ground[static_cast<std::size_t>(v)] = v;
    gens.push_back(reach(x, v, k, outward));
  }
  return SimplicialComplex::from_generators(ground, std::move(gens));
}

}  // namespace

VertexList right_closed_k_neighborhood(const Digraph& x, Vertex v, int k) { return reach(x, v, k, true); }
VertexList left_closed_k_neighborhood(const Digraph& x, Vertex v, int k) { return reach(x, v, k, false); }

SimplicialComplex right_closed_nbhd_complex(const Digraph& x, int k) { return complex_of(x, k, true); }
SimplicialComplex left_closed_nbhd_complex(const Digraph& x, int k) { return complex_of(x, k, false); }

}  // namespace cnc
