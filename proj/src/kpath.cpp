#include "cnc/kpath.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cnc {

// ------------------------------------------------------------ graph paths

bool is_graph_path(const Graph& g, const GraphPath& p) {
  if (p.empty()) return false;
  for (Vertex v : p)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] != p[i + 1] && !g.adjacent(p[i], p[i + 1])) return false;
  return true;
}

std::vector<GraphPath> moves_graph(const Graph& g, const GraphPath& p, int k) {
  if (k < 2) throw std::invalid_argument("moves_graph: k must be at least 2");
  if (!is_graph_path(g, p)) throw std::invalid_argument("moves_graph: not a path");
  const int n = static_cast<int>(p.size()) - 1;
  std::set<GraphPath> out;

  for (int x = 0; x <= n; ++x) {
    GraphPath q = p;
    q.insert(q.begin() + x, p[static_cast<std::size_t>(x)]);
    out.insert(std::move(q));
  }
  for (int i = 0; i < n; ++i)
    if (p[static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(i) + 1]) {
      GraphPath q = p;
      q.erase(q.begin() + i + 1);
      out.insert(std::move(q));
    }

  // (B)_k: positions i0+1 .. right-1 are free, p[i0] and p[right] stay.
  for (int i0 = 0; i0 + 2 <= n; ++i0) {
    const int right = std::min(i0 + k, n);
    const Vertex target = p[static_cast<std::size_t>(right)];
    const auto dist = distances_from(g, target);
    GraphPath q = p;
    auto fill = [&](auto&& self, int pos) -> void {
      const Vertex prev = q[static_cast<std::size_t>(pos) - 1];
      if (pos == right) {
        if (prev == target || g.adjacent(prev, target)) out.insert(q);
        return;
      }
      VertexList candidates{prev};
      for (Vertex w : g.neighbors(prev)) candidates.push_back(w);
      for (Vertex w : candidates) {
        const int d = dist[static_cast<std::size_t>(w)];
        if (d < 0 || d > right - pos) continue;
        q[static_cast<std::size_t>(pos)] = w;
        self(self, pos + 1);
      }
      q[static_cast<std::size_t>(pos)] = p[static_cast<std::size_t>(pos)];
    };
    fill(fill, i0 + 1);
  }
  out.erase(p);
  return {out.begin(), out.end()};
}

namespace {

// b is a with one position duplicated.
bool is_insertion(const GraphPath& a, const GraphPath& b) {
  if (b.size() != a.size() + 1) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i <= x && ok; ++i) ok = a[i] == b[i];
    for (std::size_t i = x; i < a.size() && ok; ++i) ok = a[i] == b[i + 1];
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool is_single_graph_move(const Graph& g, const GraphPath& a, const GraphPath& b, int k) {
  if (!is_graph_path(g, a) || !is_graph_path(g, b)) return false;
  if (a.front() != b.front() || a.back() != b.back()) return false;
  if (is_insertion(a, b) || is_insertion(b, a)) return true;
  if (a.size() != b.size()) return false;
  std::size_t first = a.size(), last = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) {
      first = std::min(first, i);
      last = i;
    }
  if (first == a.size()) return false;
  // Some i0 <= first - 1 with i0 + k >= last + 1.
  return first >= 1 && static_cast<int>(last - first) <= k - 2;
}

EquivalenceSearch bounded_equivalence_graph(const Graph& g, const GraphPath& a, const GraphPath& b, int k,
                                            int max_len, std::size_t max_states) {
  if (!is_graph_path(g, a) || !is_graph_path(g, b)) throw std::invalid_argument("bounded_equivalence_graph: not a path");
  if (a.front() != b.front() || a.back() != b.back())
    throw std::invalid_argument("bounded_equivalence_graph: endpoints differ");
  EquivalenceSearch out;
  if (a == b) {
    out.equivalent = true;
    out.witness = {a};
    out.states = 1;
    return out;
  }
  // Parent links; the roots map to the empty path.
  std::map<GraphPath, GraphPath> from_a{{a, {}}}, from_b{{b, {}}};
  std::vector<GraphPath> frontier_a{a}, frontier_b{b};
  out.states = 2;
  const GraphPath* meet = nullptr;

  while (!meet && !frontier_a.empty() && !frontier_b.empty()) {
    const bool grow_a = frontier_a.size() <= frontier_b.size();
    auto& own = grow_a ? from_a : from_b;
    auto& other = grow_a ? from_b : from_a;
    auto& frontier = grow_a ? frontier_a : frontier_b;
    std::vector<GraphPath> next;
    for (const auto& s : frontier) {
      for (auto& t : moves_graph(g, s, k)) {
        if (static_cast<int>(t.size()) - 1 > max_len || own.count(t)) continue;
        auto [it, inserted] = own.emplace(std::move(t), s);
        if (other.count(it->first)) {
          meet = &it->first;
          break;
        }
        if (++out.states > max_states) return out;
        next.push_back(it->first);
      }
      if (meet) break;
    }
    frontier = std::move(next);
  }
  if (!meet) return out;

  GraphPath m = *meet;
  std::vector<GraphPath> left;
  for (GraphPath s = m; !s.empty(); s = from_a.at(s)) left.push_back(s);
  std::reverse(left.begin(), left.end());
  for (GraphPath s = from_b.at(m); !s.empty(); s = from_b.at(s)) left.push_back(s);
  for (std::size_t i = 0; i + 1 < left.size(); ++i)
    if (!is_single_graph_move(g, left[i], left[i + 1], k))
      throw std::logic_error("bounded_equivalence_graph: witness failed replay");
  out.equivalent = true;
  out.witness = std::move(left);
  return out;
}

// ---------------------------------------------------------- digraph paths

bool is_digraph_path(const Digraph& x, const DigraphPath& p) {
  if (p.vertices.empty() || p.forward.size() + 1 != p.vertices.size()) return false;
  for (Vertex v : p.vertices)
    if (v < 0 || v >= x.order()) return false;
  for (std::size_t i = 0; i < p.forward.size(); ++i) {
    const Vertex u = p.vertices[i], w = p.vertices[i + 1];
    if (u == w) continue;
    if (p.forward[i] ? !x.has_arc(u, w) : !x.has_arc(w, u)) return false;
  }
  return true;
}

namespace {

// Orientation of step t of ρ_x on Γ_k when x is the cycle vertex c_j. The
// cycle is c_0 = u_0, c_1..c_k = u_1..u_k, c_{k+1}..c_{2k-1} = v_{k-1}..v_1.
bool rho_forward(int k, int j, int t) { return (j + t) % (2 * k) < k; }

DigraphPath insert_loop(const DigraphPath& p, std::size_t pos, const VertexList& loop, const std::vector<bool>& fwd) {
  DigraphPath q;
  q.vertices.assign(p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
  q.vertices.insert(q.vertices.end(), loop.begin() + 1, loop.end());
  q.vertices.insert(q.vertices.end(), p.vertices.begin() + static_cast<std::ptrdiff_t>(pos) + 1, p.vertices.end());
  q.forward.assign(p.forward.begin(), p.forward.begin() + static_cast<std::ptrdiff_t>(pos));
  q.forward.insert(q.forward.end(), fwd.begin(), fwd.end());
  q.forward.insert(q.forward.end(), p.forward.begin() + static_cast<std::ptrdiff_t>(pos), p.forward.end());
  return q;
}

DigraphPath remove_segment(const DigraphPath& p, std::size_t pos, std::size_t len) {
  DigraphPath q = p;
  q.vertices.erase(q.vertices.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                   q.vertices.begin() + static_cast<std::ptrdiff_t>(pos + len) + 1);
  q.forward.erase(q.forward.begin() + static_cast<std::ptrdiff_t>(pos),
                  q.forward.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return q;
}

// Is the segment of p of length len at pos a loop h∘ρ_x with s = 0 or k?
bool is_rho_loop(const DigraphPath& p, std::size_t pos, std::size_t len, int k) {
  if (pos + len > p.length() || p.vertices[pos] != p.vertices[pos + len]) return false;
  if (len == 1) return true;
  if (len != static_cast<std::size_t>(2 * k)) return false;
  for (int j = 0; j < 2 * k; ++j) {
    bool match = true;
    for (int t = 0; t < 2 * k && match; ++t) match = p.forward[pos + static_cast<std::size_t>(t)] == rho_forward(k, j, t);
    if (match) return true;
  }
  return false;
}

}  // namespace

std::vector<DigraphPath> gamma_moves_digraph(const Digraph& x, const DigraphPath& p, int k, std::size_t anchor) {
  if (x.order() > 8 || k > 3) throw std::length_error("gamma_moves_digraph: limited to 8 vertices and k <= 3");
  if (k < 1) throw std::invalid_argument("gamma_moves_digraph: k must be positive");
  if (!is_digraph_path(x, p)) throw std::invalid_argument("gamma_moves_digraph: not a path");
  if (anchor > p.length()) throw std::out_of_range("gamma_moves_digraph: anchor out of range");
  const Vertex a = p.vertices[anchor];
  std::set<DigraphPath> out;

  // s = 0: a stationary step in either orientation.
  for (bool f : {true, false}) out.insert(insert_loop(p, anchor, {a, a}, {f}));

  // s = k: h on the cycle of Γ_k with h(c_j) = a, extended step by step.
  const int len = 2 * k;
  for (int j = 0; j < len; ++j) {
    std::vector<bool> fwd(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) fwd[static_cast<std::size_t>(t)] = rho_forward(k, j, t);
    VertexList loop(static_cast<std::size_t>(len) + 1, a);
    auto step_ok = [&](Vertex from, Vertex to, bool forward) {
      return from == to || (forward ? x.has_arc(from, to) : x.has_arc(to, from));
    };
    auto extend = [&](auto&& self, int t) -> void {
      if (t == len) {
        if (step_ok(loop[static_cast<std::size_t>(len) - 1], a, fwd[static_cast<std::size_t>(len) - 1]))
          out.insert(insert_loop(p, anchor, loop, fwd));
        return;
      }
      for (Vertex w = 0; w < x.order(); ++w)
        if (step_ok(loop[static_cast<std::size_t>(t) - 1], w, fwd[static_cast<std::size_t>(t) - 1])) {
          loop[static_cast<std::size_t>(t)] = w;
          self(self, t + 1);
        }
    };
    extend(extend, 1);
  }

  // Deletions of loops starting at the anchor.
  for (std::size_t l : {std::size_t{1}, static_cast<std::size_t>(len)})
    if (is_rho_loop(p, anchor, l, k)) out.insert(remove_segment(p, anchor, l));
  return {out.begin(), out.end()};
}

bool is_gamma_move(const Digraph& x, const DigraphPath& f, const DigraphPath& g, int k) {
  if (!is_digraph_path(x, f) || !is_digraph_path(x, g)) return false;
  const DigraphPath& shorter = f.length() < g.length() ? f : g;
  const DigraphPath& longer = f.length() < g.length() ? g : f;
  const std::size_t extra = longer.length() - shorter.length();
  if (extra != 1 && extra != static_cast<std::size_t>(2 * k)) return false;
  for (std::size_t pos = 0; pos <= shorter.length(); ++pos) {
    if (!is_rho_loop(longer, pos, extra, k)) continue;
    if (remove_segment(longer, pos, extra) == shorter) return true;
  }
  return false;
}

std::size_t ReversalCertificate::move_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size() - 1;
  return n;
}

namespace {

// Atomic Γ moves (k = 2) turning the forward step s of p into a backward
// one: x_s → x_{s+1}  ≈  x_s → x_{s+1} → x_s ← x_{s+1}
//                     ≈  x_s → x_{s+1} → x_s ← x_s ← x_s ← x_{s+1}  ≈  x_s ← x_{s+1}.
std::vector<DigraphPath> flip_forward_step(const DigraphPath& p, std::size_t s) {
  const Vertex a = p.vertices[s], b = p.vertices[s + 1];
  std::vector<DigraphPath> chain{p};
  // Loop b → a ← b ← b → b at b: ρ from c_1 with h = (c0,c1,c2,c3) ↦ (b,b,a,b).
  chain.push_back(insert_loop(chain.back(), s + 1, {b, a, b, b, b}, {true, false, false, true}));
  chain.push_back(remove_segment(chain.back(), s + 3, 1));
  chain.push_back(remove_segment(chain.back(), s + 3, 1));
  chain.push_back(insert_loop(chain.back(), s + 2, {a, a}, {false}));
  chain.push_back(insert_loop(chain.back(), s + 2, {a, a}, {false}));
  // Loop a → b → a ← a ← a at a: ρ from c_0 with h = (a,b,a,a).
  chain.push_back(remove_segment(chain.back(), s, 4));
  return chain;
}

}  // namespace

ReversalCertificate reversal_equivalence_certificate(const Digraph& x, const DigraphPath& p,
                                                      const std::vector<bool>& target) {
  if (!x.is_symmetric()) throw std::invalid_argument("reversal_equivalence_certificate: digraph is not symmetric");
  if (!is_digraph_path(x, p)) throw std::invalid_argument("reversal_equivalence_certificate: not a path");
  if (target.size() != p.length()) throw std::invalid_argument("reversal_equivalence_certificate: orientation count");
  ReversalCertificate out;
  DigraphPath cur = p;
  for (std::size_t s = 0; s < cur.length(); ++s) {
    if (cur.forward[s] == target[s]) continue;
    std::vector<DigraphPath> block;
    if (cur.forward[s]) {
      block = flip_forward_step(cur, s);
    } else {
      DigraphPath flipped = cur;
      flipped.forward[s] = true;
      block = flip_forward_step(flipped, s);
      std::reverse(block.begin(), block.end());
    }
    for (std::size_t i = 0; i + 1 < block.size(); ++i)
      if (!is_gamma_move(x, block[i], block[i + 1], 2))
        throw std::logic_error("reversal_equivalence_certificate: move failed replay");
    cur = block.back();
    out.blocks.push_back(std::move(block));
  }
  out.result = cur;
  return out;
}

// --------------------------------------------------- edge paths and loops

GraphPath phi_map(const Graph& g, const VertexList& edge_path, int k, WitnessPolicy policy) {
  if (k < 1) throw std::invalid_argument("phi_map: k must be positive");
  if (edge_path.empty()) throw std::invalid_argument("phi_map: empty edge-path");
  for (Vertex v : edge_path) g.check_vertex(v);
  std::vector<std::vector<int>> dist;
  for (Vertex v = 0; v < g.order(); ++v) dist.push_back(distances_from(g, v));
  auto within = [&](Vertex w, Vertex v) {
    const int d = dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
    return d >= 0 && d <= k;
  };
  GraphPath out{edge_path.front()};
  for (std::size_t i = 1; i < edge_path.size(); ++i) {
    const Vertex from = edge_path[i - 1], to = edge_path[i];
    Vertex witness = -1;
    for (Vertex c = 0; c < g.order(); ++c) {
      const Vertex w = policy == WitnessPolicy::SmallestId ? c : g.order() - 1 - c;
      if (within(w, from) && within(w, to)) {
        witness = w;
        break;
      }
    }
    if (witness < 0) throw std::invalid_argument("phi_map: step is not a simplex of the closed k-neighborhood complex");
    // α: from → w, padded at w; β: w → to, padded at w.
    VertexList alpha = *shortest_path(g, from, witness);
    while (static_cast<int>(alpha.size()) < k + 1) alpha.push_back(witness);
    VertexList beta = *shortest_path(g, witness, to);
    while (static_cast<int>(beta.size()) < k + 1) beta.insert(beta.begin(), witness);
    out.insert(out.end(), alpha.begin() + 1, alpha.end());
    out.insert(out.end(), beta.begin() + 1, beta.end());
  }
  return out;
}

VertexList psi_map(const Graph& g, const GraphPath& loop, int k) {
  if (k < 1) throw std::invalid_argument("psi_map: k must be positive");
  if (!is_graph_path(g, loop) || loop.front() != loop.back()) throw std::invalid_argument("psi_map: not a loop");
  const std::size_t period = static_cast<std::size_t>(2 * k);
  GraphPath padded = loop;
  while ((padded.size() - 1) % period != 0) padded.push_back(loop.front());
  VertexList out;
  for (std::size_t i = 0; i < padded.size(); i += period) out.push_back(padded[i]);
  for (std::size_t j = 0; j + 1 < out.size(); ++j) {
    const Vertex mid = padded[j * period + static_cast<std::size_t>(k)];
    const auto d = distances_from(g, mid);
    if (d[static_cast<std::size_t>(out[j])] > k || d[static_cast<std::size_t>(out[j + 1])] > k)
      throw std::logic_error("psi_map: midpoint is not a witness");
  }
  return out;
}

}  // namespace cnc
