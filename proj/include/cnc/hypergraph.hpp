#pragma once

#include <optional>
#include <vector>

#include "cnc/complex.hpp"
#include "cnc/graph.hpp"

namespace cnc {

/// Hypergraph on vertices 0..n-1 with a deduplicated, sorted edge set.
struct Hypergraph {
  int n = 0;
  std::vector<Simplex> hyperedges;

  Hypergraph() = default;
  Hypergraph(int n, std::vector<Simplex> hyperedges);
  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Distinct open neighborhoods.
Hypergraph neighborhood_hypergraph(const Graph& g);
/// Distinct closed neighborhoods.
Hypergraph dominance_hypergraph(const Graph& g);

/// Maximal sets containing no hyperedge. Void when ∅ is a hyperedge.
SimplicialComplex independence_complex_hyper(const Hypergraph& h);

/// σ is a face iff V − σ dominates. Built from dominating sets directly and
/// from the dominance hypergraph; the two must agree (std::logic_error).
SimplicialComplex dominance_complex(const Graph& g);

/// Outcome of replaying the leaf reduction on a forest.
struct ForestSphere {
  bool contractible = false;
  int dimension = 0;        // valid when !contractible
  int suspensions = 0;
  std::vector<Vertex> removed;  // the deleted w's, in order
};

/// Repeatedly take the smallest leaf v of a component with at least three
/// vertices, delete w (smallest neighbor of v's neighbor, other than v) and
/// count one suspension. Ends at a matching (sphere) or with an isolated
/// vertex (contractible). A spherical answer is checked against
/// ν − 2γ − 1. Throws std::invalid_argument unless f is a forest.
ForestSphere forest_sphere_dimension(const Graph& f);

}  // namespace cnc
