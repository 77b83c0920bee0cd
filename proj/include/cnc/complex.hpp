#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "cnc/graph.hpp"

namespace cnc {

/// A simplex as a strictly increasing list of ground element ids.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex stored as the antichain of its facets
/// over an explicit ground set. The ground may contain elements that are not
/// vertices, which Alexander duality needs.
///
/// Two degenerate values are distinguished: the void complex (no simplices
/// at all) and the empty complex {∅} whose only simplex is the empty set.
class SimplicialComplex {
 public:
  /// Void complex over an empty ground.
  SimplicialComplex() = default;

  /// The complex generated by `generators`; non-maximal and duplicate
  /// generators are dropped. An empty generator list yields the void complex.
  static SimplicialComplex from_generators(std::vector<int> ground, std::vector<Simplex> generators);
  static SimplicialComplex void_complex(std::vector<int> ground);
  static SimplicialComplex empty_simplex(std::vector<int> ground);  // {∅}
  static SimplicialComplex full_simplex(std::vector<int> ground);

  const std::vector<int>& ground() const { return ground_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// True for {∅}.
  bool is_empty_simplex() const { return facets_.size() == 1 && facets_[0].empty(); }

  /// -1 for {∅}; kVoidDimension for the void complex.
  int dimension() const;
  static constexpr int kVoidDimension = -2;

  bool contains(const Simplex& s) const;
  Simplex vertices() const;
  bool is_vertex(int v) const;
  /// Some vertex lies in every facet (the complex is a cone, hence contractible).
  bool is_cone() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<int> ground_;
  std::vector<Simplex> facets_;
};

bool complex_equal(const SimplicialComplex& a, const SimplicialComplex& b);
/// Every simplex of `a` is a simplex of `b`.
bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b);

/// All simplices, grouped by dimension, as masks over ground indices.
/// faces[d + 1] lists the d-simplices in lexicographic order of their sorted
/// index lists; faces[0] is {∅} for every nonvoid complex.
struct FaceEnumeration {
  std::vector<int> ground;
  std::vector<std::vector<VertexMask>> faces;

  int top_dimension() const { return static_cast<int>(faces.size()) - 2; }
  Simplex to_simplex(VertexMask mask) const;
};

inline constexpr int kFullDimension = std::numeric_limits<int>::max();

FaceEnumeration enumerate_faces(const SimplicialComplex& k, int max_dim = kFullDimension);

/// Lexicographic comparison of equal-size subsets given as masks.
inline bool mask_lex_less(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

/// f_0, f_1, ..., f_dim (the empty simplex is not counted).
std::vector<std::int64_t> f_vector(const SimplicialComplex& k);
/// Reduced Euler characteristic; zero for the void complex.
std::int64_t euler_characteristic(const SimplicialComplex& k);

SimplicialComplex closed_neighborhood_complex(const Graph& g, int k = 1);
SimplicialComplex open_neighborhood_complex(const Graph& g);
SimplicialComplex independence_complex(const Graph& g);
SimplicialComplex clique_complex(const Graph& g);

std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k);
SimplicialComplex alexander_dual(const SimplicialComplex& k);

/// Join; the second ground is shifted when the grounds overlap. Joining with
/// the void complex returns the other factor.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// Join with two fresh points.
SimplicialComplex suspension(const SimplicialComplex& k);
SimplicialComplex link(const SimplicialComplex& k, int v);
SimplicialComplex deletion(const SimplicialComplex& k, int v);

/// K generated by {phi(y)} on ground X together with the bipartite graph H
/// on X ⊔ Y (X first, then Y in the given order) where x ~ y iff x ∉ phi(y).
struct NagelReinerPair {
  SimplicialComplex complex;
  Graph graph;
};
NagelReinerPair nagel_reiner_pair(const std::vector<int>& ground_x, const std::vector<int>& ground_y,
                                  const std::vector<Simplex>& phi);

/// Minimal transversals (hitting sets) of a family of masks. A family with
/// an empty member has none; the empty family has {∅}.
std::vector<VertexMask> minimal_transversals(std::vector<VertexMask> family);
/// Drop duplicates and non-maximal members.
std::vector<VertexMask> maximal_members(std::vector<VertexMask> sets);
/// Maximal cliques by Bron–Kerbosch with pivoting.
std::vector<VertexMask> maximal_cliques(const Graph& g);

}  // namespace cnc
