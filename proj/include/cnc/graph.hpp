#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cnc {

using Vertex = int;
using VertexList = std::vector<Vertex>;

/// Bit set over vertex indices. Constructions that enumerate subsets of
/// vertices work on masks and therefore accept at most 64 vertices.
using VertexMask = std::uint64_t;
inline constexpr int kMaxMaskVertices = 64;

VertexMask mask_of(const VertexList& vertices);
VertexList list_of(VertexMask mask);
void require_mask_size(int n, const char* where);

/// Finite simple undirected graph on vertices 0..n-1. Edges are stored as
/// sorted (u < v) pairs, so two graphs are equal iff their edge sets are.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int order() const { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const;
  const VertexList& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  /// Open neighborhood N(v) as a mask (n <= 64).
  VertexMask open_mask(Vertex v) const;
  /// Closed neighborhood N[v] as a mask (n <= 64).
  VertexMask closed_mask(Vertex v) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<VertexList> adjacency_;
};

/// Finite loop-free digraph on vertices 0..n-1.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

  /// The symmetric digraph with both orientations of every edge.
  static Digraph from_graph(const Graph& g);

  int order() const { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }
  bool has_arc(Vertex from, Vertex to) const;
  const VertexList& out_neighbors(Vertex v) const;
  const VertexList& in_neighbors(Vertex v) const;
  bool is_symmetric() const;
  void check_vertex(Vertex v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs_;
  std::vector<VertexList> out_;
  std::vector<VertexList> in_;
};

/// A total function V(G) -> V(H) given by its image table.
struct VertexMap {
  int codomain_size = 0;
  VertexList image;
};

Graph complement(const Graph& g);
Graph categorical_product(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph double_cover(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexList& keep);

/// Vertices at graph distance at most k from v (k >= 1).
VertexList closed_k_neighborhood(const Graph& g, Vertex v, int k);

/// Breadth-first distances from v; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, Vertex v);

/// Shortest path from u to v, neighbors explored in ascending order.
std::optional<VertexList> shortest_path(const Graph& g, Vertex from, Vertex to);

int domination_number(const Graph& g);
bool is_dominating(const Graph& g, VertexMask set);

struct Bipartition {
  VertexList left;
  VertexList right;
};
std::optional<Bipartition> is_bipartite(const Graph& g);

std::vector<VertexList> connected_components(const Graph& g);
bool is_forest(const Graph& g);

bool is_graph_map(const VertexMap& f, const Graph& g, const Graph& h);

/// Seeded generator for every randomized family. Bounded draws use rejection
/// on the raw engine output, so sequences are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

namespace families {
Graph complete(int n);
Graph edgeless(int n);
/// Path on n vertices.
Graph path(int n);
Graph cycle(int n);
Graph hypercube(int dimension);
Graph rook(int m, int n);  // K_m □ K_n
Graph erdos_renyi(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);
Graph random_forest(int n, std::uint64_t seed);
Digraph random_digraph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);
Digraph x1();
Digraph x2();
/// Window of the universal cover of X2 on vertices -2m..2m (index i+2m),
/// arcs from each even vertex to its odd neighbors.
Digraph x2_window(int m);
}  // namespace families

/// Dispatch by family name: complete, edgeless, path, cycle, hypercube, rook,
/// gnp, forest (graphs) and x1, x2, x2-window, random-digraph (digraphs).
struct GeneratedGraph {
  std::optional<Graph> graph;
  std::optional<Digraph> digraph;
};
GeneratedGraph generate(const std::string& family, const std::vector<long long>& params,
                        std::uint64_t seed = 0);

/// All labeled graphs on n vertices, indexed by the bit pattern of their
/// edge set over the pairs (i<j) in lexicographic order.
Graph graph_from_code(int n, std::uint64_t code);

}  // namespace cnc
