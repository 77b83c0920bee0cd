#pragma once

#include <cstddef>
#include <vector>

#include "cnc/graph.hpp"

namespace cnc {

// ------------------------------------------------------------ graph paths

/// A path in a graph: consecutive vertices are equal or adjacent.
using GraphPath = VertexList;

bool is_graph_path(const Graph& g, const GraphPath& p);

/// One-move neighbors of p under (A) (insert or delete a repeated vertex)
/// and (B)_k (rewrite at most k-1 consecutive interior positions between two
/// fixed anchors). Endpoints never change. Sorted, without duplicates.
std::vector<GraphPath> moves_graph(const Graph& g, const GraphPath& p, int k);

/// Literal check that a and b are related by a single (A) or (B)_k move.
bool is_single_graph_move(const Graph& g, const GraphPath& a, const GraphPath& b, int k);

struct EquivalenceSearch {
  bool equivalent = false;         // false means inconclusive
  std::vector<GraphPath> witness;  // a, ..., b; each adjacent pair one move
  std::size_t states = 0;
};

/// Bidirectional breadth-first search over paths of length <= max_len. A
/// witness chain is replayed before it is returned.
EquivalenceSearch bounded_equivalence_graph(const Graph& g, const GraphPath& a, const GraphPath& b, int k,
                                            int max_len, std::size_t max_states);

// ---------------------------------------------------------- digraph paths

/// forward[i] orients the domain edge between positions i and i+1 as i -> i+1.
struct DigraphPath {
  VertexList vertices;
  std::vector<bool> forward;

  std::size_t length() const { return forward.size(); }
  friend bool operator==(const DigraphPath&, const DigraphPath&) = default;
  friend auto operator<=>(const DigraphPath&, const DigraphPath&) = default;
};

bool is_digraph_path(const Digraph& x, const DigraphPath& p);

/// Paths obtained from p by inserting a loop h∘ρ_x at `anchor`, for digraph
/// maps h from Γ_0 or Γ_k, together with the paths obtained by deleting such
/// a loop starting at `anchor`. Refuses (std::length_error) when X has more
/// than 8 vertices or k > 3.
std::vector<DigraphPath> gamma_moves_digraph(const Digraph& x, const DigraphPath& p, int k, std::size_t anchor);

/// f and g differ by inserting (or deleting) one loop h∘ρ_x with h defined on
/// Γ_0 or Γ_k.
bool is_gamma_move(const Digraph& x, const DigraphPath& f, const DigraphPath& g, int k);

/// Γ-move chains turning p into the path with the same vertices and the
/// orientations `target`, one block per flipped step. Every atomic move is
/// a k = 2 move and is replayed before returning. Requires a symmetric
/// digraph.
struct ReversalCertificate {
  std::vector<std::vector<DigraphPath>> blocks;  // each block: consecutive states
  DigraphPath result;
  std::size_t move_count() const;
};
ReversalCertificate reversal_equivalence_certificate(const Digraph& x, const DigraphPath& p,
                                                      const std::vector<bool>& target);

// --------------------------------------------------- edge paths and loops

enum class WitnessPolicy { SmallestId, LargestId };

/// Graph path for an edge-path of the closed k-neighborhood complex: each
/// step v -> v' goes through a witness w with v, v' ∈ N^k[w], along shortest
/// paths padded with stationary steps at w to length exactly k each.
GraphPath phi_map(const Graph& g, const VertexList& edge_path, int k,
                  WitnessPolicy policy = WitnessPolicy::SmallestId);

/// Samples a loop at every 2k-th position after padding it with its base
/// vertex to a multiple of 2k.
VertexList psi_map(const Graph& g, const GraphPath& loop, int k);

}  // namespace cnc
