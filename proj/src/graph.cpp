#include "cnc/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace cnc {

VertexMask mask_of(const VertexList& vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxMaskVertices) throw std::out_of_range("vertex outside mask range");
    m |= VertexMask{1} << v;
  }
  return m;
}

VertexList list_of(VertexMask mask) {
  VertexList out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

void require_mask_size(int n, const char* where) {
  if (n > kMaxMaskVertices)
    throw std::length_error(std::string(where) + ": more than 64 vertices");
}

namespace {

std::vector<std::pair<Vertex, Vertex>> canonical_pairs(int n,
                                                      std::vector<std::pair<Vertex, Vertex>> pairs,
                                                      bool ordered) {
  for (auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (!ordered && u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

Graph::Graph(int n) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
  edges_ = canonical_pairs(n, edges, false);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

const VertexList& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

VertexMask Graph::open_mask(Vertex v) const {
  require_mask_size(n_, "open_mask");
  return mask_of(neighbors(v));
}

VertexMask Graph::closed_mask(Vertex v) const { return open_mask(v) | (VertexMask{1} << v); }

Digraph::Digraph(int n)
    : n_(n),
      out_(static_cast<std::size_t>(std::max(n, 0))),
      in_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Digraph::Digraph(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs) : Digraph(n) {
  arcs_ = canonical_pairs(n, arcs, true);
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& row : out_) std::sort(row.begin(), row.end());
  for (auto& row : in_) std::sort(row.begin(), row.end());
}

Digraph Digraph::from_graph(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.order(), arcs);
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  check_vertex(from);
  check_vertex(to);
  const auto& row = out_[from];
  return std::binary_search(row.begin(), row.end(), to);
}

const VertexList& Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return out_[v];
}

const VertexList& Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return in_[v];
}

bool Digraph::is_symmetric() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [&](const auto& a) { return has_arc(a.second, a.first); });
}

Graph complement(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

Graph categorical_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : g.edges())
    for (auto [c, d] : h.edges()) {
      edges.emplace_back(a * nh + c, b * nh + d);
      edges.emplace_back(a * nh + d, b * nh + c);
    }
  return Graph(g.order() * nh, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < g.order(); ++a)
    for (auto [c, d] : h.edges()) edges.emplace_back(a * nh + c, a * nh + d);
  for (auto [a, b] : g.edges())
    for (Vertex c = 0; c < nh; ++c) edges.emplace_back(a * nh + c, b * nh + c);
  return Graph(g.order() * nh, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return Graph(g.order() + h.order(), edges);
}

Graph double_cover(const Graph& g) { return categorical_product(families::complete(2), g); }

Graph induced_subgraph(const Graph& g, const VertexList& keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    g.check_vertex(keep[i]);
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(keep.size()), edges);
}

std::vector<int> distances_from(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

VertexList closed_k_neighborhood(const Graph& g, Vertex v, int k) {
  if (k < 1) throw std::invalid_argument("closed_k_neighborhood: k must be positive");
  // N^{k+1}[v] is the union of N[w] over w in N^k[v].
  std::vector<char> in_ball(static_cast<std::size_t>(g.order()), 0);
  g.check_vertex(v);
  VertexList frontier{v};
  in_ball[v] = 1;
  for (int step = 0; step < k && !frontier.empty(); ++step) {
    VertexList next;
    for (Vertex u : frontier)
      for (Vertex w : g.neighbors(u))
        if (!in_ball[w]) {
          in_ball[w] = 1;
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  VertexList out;
  for (Vertex u = 0; u < g.order(); ++u)
    if (in_ball[u]) out.push_back(u);
  return out;
}

std::optional<VertexList> shortest_path(const Graph& g, Vertex from, Vertex to) {
  g.check_vertex(from);
  g.check_vertex(to);
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::deque<Vertex> queue{from};
  seen[from] = 1;
  while (!queue.empty() && !seen[to]) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        queue.push_back(w);
      }
  }
  if (!seen[to]) return std::nullopt;
  VertexList path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_dominating(const Graph& g, VertexMask set) {
  require_mask_size(g.order(), "is_dominating");
  VertexMask covered = 0;
  for (Vertex v : list_of(set)) covered |= g.closed_mask(v);
  const VertexMask all = g.order() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.order()) - 1;
  return (covered & all) == all;
}

namespace {

// Branch on the lowest undominated vertex: some member of its closed
// neighborhood must be chosen.
void dominate(const std::vector<VertexMask>& closed, VertexMask all, VertexMask covered,
              int chosen, int& best) {
  if (covered == all) {
    best = std::min(best, chosen);
    return;
  }
  if (chosen + 1 >= best) return;
  const Vertex u = std::countr_zero(all & ~covered);
  for (Vertex w : list_of(closed[u])) dominate(closed, all, covered | closed[w], chosen + 1, best);
}

}  // namespace

int domination_number(const Graph& g) {
  require_mask_size(g.order(), "domination_number");
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<VertexMask> closed(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) closed[v] = g.closed_mask(v);
  const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  int best = n;
  dominate(closed, all, 0, 0, best);
  return best;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) (color[v] == 0 ? parts.left : parts.right).push_back(v);
  for (auto [u, v] : g.edges())
    if (color[u] == color[v]) throw std::logic_error("is_bipartite: invalid coloring");
  return parts;
}

std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<VertexList> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexList comp;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

bool is_graph_map(const VertexMap& f, const Graph& g, const Graph& h) {
  if (static_cast<int>(f.image.size()) != g.order() || f.codomain_size != h.order())
    throw std::invalid_argument("is_graph_map: size mismatch");
  for (Vertex x : f.image) h.check_vertex(x);
  for (auto [x, y] : g.edges()) {
    Vertex fx = f.image[x], fy = f.image[y];
    if (fx != fy && !h.adjacent(fx, fy)) return false;
  }
  return true;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace families {

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph edgeless(int n) { return Graph(n); }

Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph hypercube(int dimension) {
  if (dimension < 0 || dimension > 20) throw std::invalid_argument("hypercube dimension out of range");
  const int n = 1 << dimension;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int b = 0; b < dimension; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return Graph(n, edges);
}

Graph rook(int m, int n) { return cartesian_product(complete(m), complete(n)); }

Graph erdos_renyi(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (den == 0 || num > den) throw std::invalid_argument("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_forest(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  // Each vertex either starts a new tree or hangs off an earlier vertex.
  for (Vertex v = 1; v < n; ++v)
    if (rng.chance(4, 5)) edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  return Graph(n, edges);
}

Digraph random_digraph(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (den == 0 || num > den) throw std::invalid_argument("arc probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.chance(num, den)) arcs.emplace_back(u, v);
  return Digraph(n, arcs);
}

Digraph x1() { return Digraph(3, {{0, 1}, {2, 1}}); }

// 0 = left, 1 = top, 2 = bottom, 3 = right.
Digraph x2() { return Digraph(4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}}); }

Digraph x2_window(int m) {
  if (m < 0) throw std::invalid_argument("x2_window: negative size");
  const int n = 4 * m + 1;
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (int i = -2 * m; i <= 2 * m; ++i) {
    if (i % 2 != 0) continue;
    const Vertex from = i + 2 * m;
    if (from - 1 >= 0) arcs.emplace_back(from, from - 1);
    if (from + 1 < n) arcs.emplace_back(from, from + 1);
  }
  return Digraph(n, arcs);
}

}  // namespace families

namespace {

void expect_params(const std::string& family, const std::vector<long long>& params, std::size_t count) {
  if (params.size() != count)
    throw std::invalid_argument("family '" + family + "' takes " + std::to_string(count) +
                                " parameter(s)");
  for (long long p : params)
    if (p < 0 || p > 4096) throw std::invalid_argument("family '" + family + "': parameter out of range");
}

}  // namespace

GeneratedGraph generate(const std::string& family, const std::vector<long long>& params,
                        std::uint64_t seed) {
  GeneratedGraph out;
  auto arg = [&](std::size_t i) { return static_cast<int>(params[i]); };
  if (family == "complete") {
    expect_params(family, params, 1);
    out.graph = families::complete(arg(0));
  } else if (family == "edgeless") {
    expect_params(family, params, 1);
    out.graph = families::edgeless(arg(0));
  } else if (family == "path") {
    expect_params(family, params, 1);
    out.graph = families::path(arg(0));
  } else if (family == "cycle") {
    expect_params(family, params, 1);
    out.graph = families::cycle(arg(0));
  } else if (family == "hypercube") {
    expect_params(family, params, 1);
    out.graph = families::hypercube(arg(0));
  } else if (family == "rook") {
    expect_params(family, params, 2);
    out.graph = families::rook(arg(0), arg(1));
  } else if (family == "gnp") {
    // gnp n num den
    expect_params(family, params, 3);
    out.graph = families::erdos_renyi(arg(0), params[1], params[2], seed);
  } else if (family == "forest") {
    expect_params(family, params, 1);
    out.graph = families::random_forest(arg(0), seed);
  } else if (family == "random-digraph") {
    expect_params(family, params, 3);
    out.digraph = families::random_digraph(arg(0), params[1], params[2], seed);
  } else if (family == "x1") {
    expect_params(family, params, 0);
    out.digraph = families::x1();
  } else if (family == "x2") {
    expect_params(family, params, 0);
    out.digraph = families::x2();
  } else if (family == "x2-window") {
    expect_params(family, params, 1);
    out.digraph = families::x2_window(arg(0));
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  return out;
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1U) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace cnc
