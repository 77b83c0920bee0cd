#pragma once

#include "cnc/complex.hpp"
#include "cnc/graph.hpp"

namespace cnc {

/// Vertices reachable from v along at most k arcs (v included).
VertexList right_closed_k_neighborhood(const Digraph& x, Vertex v, int k);
/// Vertices reaching v along at most k arcs (v included).
VertexList left_closed_k_neighborhood(const Digraph& x, Vertex v, int k);

SimplicialComplex right_closed_nbhd_complex(const Digraph& x, int k);
SimplicialComplex left_closed_nbhd_complex(const Digraph& x, int k);

}  // namespace cnc
