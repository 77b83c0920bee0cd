#include "cnc/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace cnc {

namespace {

std::vector<int> canonical_ground(std::vector<int> ground) {
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  return ground;
}

int ground_index(const std::vector<int>& ground, int element) {
  auto it = std::lower_bound(ground.begin(), ground.end(), element);
  if (it == ground.end() || *it != element)
    throw std::invalid_argument("element " + std::to_string(element) + " is not in the ground set");
  return static_cast<int>(it - ground.begin());
}

VertexMask to_mask(const std::vector<int>& ground, const Simplex& s) {
  VertexMask m = 0;
  for (int e : s) m |= VertexMask{1} << ground_index(ground, e);
  return m;
}

Simplex from_mask(const std::vector<int>& ground, VertexMask m) {
  Simplex s;
  for (int i : list_of(m)) s.push_back(ground[i]);
  return s;
}

VertexMask full_mask(std::size_t n) {
  return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

// Complex over a ground of at most 64 elements from generator masks.
SimplicialComplex from_masks(const std::vector<int>& ground, const std::vector<VertexMask>& gens) {
  std::vector<Simplex> generators;
  generators.reserve(gens.size());
  for (VertexMask m : gens) generators.push_back(from_mask(ground, m));
  return SimplicialComplex::from_generators(ground, std::move(generators));
}

std::vector<VertexMask> facet_masks(const SimplicialComplex& k) {
  require_mask_size(static_cast<int>(k.ground().size()), "simplicial complex");
  std::vector<VertexMask> out;
  for (const auto& f : k.facets()) out.push_back(to_mask(k.ground(), f));
  return out;
}

std::vector<int> graph_ground(const Graph& g) {
  std::vector<int> ground(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) ground[i] = i;
  return ground;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_generators(std::vector<int> ground,
                                                     std::vector<Simplex> generators) {
  SimplicialComplex k;
  k.ground_ = canonical_ground(std::move(ground));
  for (auto& s : generators) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("simplex with repeated element");
    for (int e : s) ground_index(k.ground_, e);
  }
  if (k.ground_.size() <= static_cast<std::size_t>(kMaxMaskVertices)) {
    std::vector<VertexMask> masks;
    masks.reserve(generators.size());
    for (const auto& s : generators) masks.push_back(to_mask(k.ground_, s));
    for (VertexMask m : maximal_members(std::move(masks))) k.facets_.push_back(from_mask(k.ground_, m));
    std::sort(k.facets_.begin(), k.facets_.end());
    return k;
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Keep only maximal generators; check larger ones first.
  std::vector<std::size_t> order(generators.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return generators[a].size() > generators[b].size();
  });
  std::vector<char> keep(generators.size(), 0);
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    const auto& s = generators[i];
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t j) {
      return std::includes(generators[j].begin(), generators[j].end(), s.begin(), s.end());
    });
    if (!dominated) {
      keep[i] = 1;
      kept.push_back(i);
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (keep[i]) k.facets_.push_back(std::move(generators[i]));
  return k;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<int> ground) {
  return from_generators(std::move(ground), {});
}

SimplicialComplex SimplicialComplex::empty_simplex(std::vector<int> ground) {
  return from_generators(std::move(ground), {Simplex{}});
}

SimplicialComplex SimplicialComplex::full_simplex(std::vector<int> ground) {
  auto g = canonical_ground(std::move(ground));
  return from_generators(g, {g});
}

int SimplicialComplex::dimension() const {
  if (is_void()) return kVoidDimension;
  std::size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  Simplex sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
    return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
  });
}

Simplex SimplicialComplex::vertices() const {
  Simplex v;
  for (const auto& f : facets_) v.insert(v.end(), f.begin(), f.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool SimplicialComplex::is_vertex(int v) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return std::binary_search(f.begin(), f.end(), v); });
}

bool SimplicialComplex::is_cone() const {
  if (facets_.empty()) return false;
  Simplex common = facets_[0];
  for (const auto& f : facets_) {
    Simplex next;
    std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
    common = std::move(next);
    if (common.empty()) return false;
  }
  return true;
}

bool complex_equal(const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; }

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
  return std::all_of(a.facets().begin(), a.facets().end(),
                     [&](const Simplex& f) { return b.contains(f); });
}

Simplex FaceEnumeration::to_simplex(VertexMask mask) const { return from_mask(ground, mask); }

FaceEnumeration enumerate_faces(const SimplicialComplex& k, int max_dim) {
  FaceEnumeration out;
  out.ground = k.ground();
  if (k.is_void()) return out;
  const auto facets = facet_masks(k);
  const int top = std::min(k.dimension(), max_dim);
  const int max_size = top + 1;

  std::unordered_set<VertexMask> seen;
  std::vector<std::vector<VertexMask>> by_size(static_cast<std::size_t>(std::max(max_size, 0) + 1));
  auto add = [&](VertexMask s) {
    if (seen.insert(s).second) by_size[std::popcount(s)].push_back(s);
  };
  for (VertexMask f : facets) {
    if (std::popcount(f) <= max_size) {
      // Walk every submask of f, including f and the empty set.
      VertexMask s = f;
      while (true) {
        add(s);
        if (s == 0) break;
        s = (s - 1) & f;
      }
    } else {
      // Capped dimension: subsets of size <= max_size only.
      const VertexList elems = list_of(f);
      auto recurse = [&](auto&& self, std::size_t start, VertexMask cur, int size) -> void {
        add(cur);
        if (size == max_size) return;
        for (std::size_t i = start; i < elems.size(); ++i)
          self(self, i + 1, cur | (VertexMask{1} << elems[i]), size + 1);
      };
      recurse(recurse, 0, 0, 0);
    }
  }
  for (auto& bucket : by_size) std::sort(bucket.begin(), bucket.end(), mask_lex_less);
  out.faces = std::move(by_size);
  while (!out.faces.empty() && out.faces.back().empty()) out.faces.pop_back();
  return out;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& k) {
  const auto faces = enumerate_faces(k);
  std::vector<std::int64_t> f;
  for (std::size_t i = 1; i < faces.faces.size(); ++i)
    f.push_back(static_cast<std::int64_t>(faces.faces[i].size()));
  return f;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  if (k.is_void()) return 0;
  std::int64_t chi = -1;
  const auto f = f_vector(k);
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 == 0 ? f[d] : -f[d]);
  return chi;
}

SimplicialComplex closed_neighborhood_complex(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("closed_neighborhood_complex: k must be positive");
  std::vector<Simplex> gens;
  for (Vertex v = 0; v < g.order(); ++v) gens.push_back(closed_k_neighborhood(g, v, k));
  return SimplicialComplex::from_generators(graph_ground(g), std::move(gens));
}

SimplicialComplex open_neighborhood_complex(const Graph& g) {
  // ∅ ⊆ N(v) for every vertex, so an edgeless graph with vertices gives {∅};
  // with no vertices at all there is no neighborhood and the result is void.
  std::vector<Simplex> gens;
  for (Vertex v = 0; v < g.order(); ++v) gens.push_back(g.neighbors(v));
  return SimplicialComplex::from_generators(graph_ground(g), std::move(gens));
}

std::vector<VertexMask> maximal_cliques(const Graph& g) {
  require_mask_size(g.order(), "maximal_cliques");
  std::vector<VertexMask> adj(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.open_mask(v);
  std::vector<VertexMask> out;
  auto bron_kerbosch = [&](auto&& self, VertexMask r, VertexMask p, VertexMask x) -> void {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    // Pivot maximizing |P ∩ N(u)|.
    VertexMask best_cover = 0;
    int best = -1;
    for (Vertex u : list_of(p | x)) {
      const int c = std::popcount(p & adj[u]);
      if (c > best) {
        best = c;
        best_cover = adj[u];
      }
    }
    for (Vertex v : list_of(p & ~best_cover)) {
      const VertexMask bit = VertexMask{1} << v;
      self(self, r | bit, p & adj[v], x & adj[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  const VertexMask all = full_mask(static_cast<std::size_t>(g.order()));
  if (g.order() > 0) bron_kerbosch(bron_kerbosch, 0, all, 0);
  return out;
}

SimplicialComplex clique_complex(const Graph& g) {
  if (g.order() == 0) return SimplicialComplex::empty_simplex({});
  return from_masks(graph_ground(g), maximal_cliques(g));
}

SimplicialComplex independence_complex(const Graph& g) {
  if (g.order() == 0) return SimplicialComplex::empty_simplex({});
  return from_masks(graph_ground(g), maximal_cliques(complement(g)));
}

std::vector<VertexMask> maximal_members(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexMask> kept;
  for (VertexMask s : sets)
    if (std::none_of(kept.begin(), kept.end(), [&](VertexMask k) { return (s & ~k) == 0; }))
      kept.push_back(s);
  return kept;
}

namespace {

std::vector<VertexMask> minimal_members(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexMask> kept;
  for (VertexMask s : sets)
    if (std::none_of(kept.begin(), kept.end(), [&](VertexMask k) { return (k & ~s) == 0; }))
      kept.push_back(s);
  return kept;
}

}  // namespace

std::vector<VertexMask> minimal_transversals(std::vector<VertexMask> family) {
  // Berge's incremental construction, smallest members first.
  family = minimal_members(std::move(family));
  std::vector<VertexMask> transversals{0};
  for (VertexMask e : family) {
    if (e == 0) return {};
    std::vector<VertexMask> next;
    for (VertexMask t : transversals) {
      if (t & e) {
        next.push_back(t);
      } else {
        for (Vertex x : list_of(e)) next.push_back(t | (VertexMask{1} << x));
      }
    }
    transversals = minimal_members(std::move(next));
  }
  return transversals;
}

std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k) {
  // σ is a non-face iff it meets the complement of every facet.
  const auto facets = facet_masks(k);
  const VertexMask all = full_mask(k.ground().size());
  std::vector<VertexMask> complements;
  for (VertexMask f : facets) complements.push_back(all & ~f);
  std::vector<Simplex> out;
  for (VertexMask t : minimal_transversals(std::move(complements))) out.push_back(from_mask(k.ground(), t));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
  require_mask_size(static_cast<int>(k.ground().size()), "alexander_dual");
  const VertexMask all = full_mask(k.ground().size());
  std::vector<VertexMask> gens;
  for (const auto& nonface : minimal_nonfaces(k)) gens.push_back(all & ~to_mask(k.ground(), nonface));
  return from_masks(k.ground(), gens);
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<int> shifted_ground = l.ground();
  std::vector<Simplex> shifted_facets = l.facets();
  std::vector<int> overlap;
  std::set_intersection(k.ground().begin(), k.ground().end(), l.ground().begin(), l.ground().end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) {
    const int shift = k.ground().back() + 1 - l.ground().front();
    for (int& e : shifted_ground) e += shift;
    for (auto& f : shifted_facets)
      for (int& e : f) e += shift;
  }
  std::vector<int> ground = k.ground();
  ground.insert(ground.end(), shifted_ground.begin(), shifted_ground.end());
  if (k.is_void()) return SimplicialComplex::from_generators(ground, shifted_facets);
  if (l.is_void()) return SimplicialComplex::from_generators(ground, k.facets());
  std::vector<Simplex> gens;
  for (const auto& a : k.facets())
    for (const auto& b : shifted_facets) {
      Simplex s = a;
      s.insert(s.end(), b.begin(), b.end());
      gens.push_back(std::move(s));
    }
  return SimplicialComplex::from_generators(ground, std::move(gens));
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  const int base = k.ground().empty() ? 0 : k.ground().back() + 1;
  const auto sphere = SimplicialComplex::from_generators({base, base + 1}, {{base}, {base + 1}});
  return join(k, sphere);
}

SimplicialComplex link(const SimplicialComplex& k, int v) {
  if (!k.is_vertex(v)) throw std::invalid_argument("link: " + std::to_string(v) + " is not a vertex");
  std::vector<int> ground;
  std::copy_if(k.ground().begin(), k.ground().end(), std::back_inserter(ground),
               [&](int e) { return e != v; });
  std::vector<Simplex> gens;
  for (const auto& f : k.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    Simplex s;
    std::copy_if(f.begin(), f.end(), std::back_inserter(s), [&](int e) { return e != v; });
    gens.push_back(std::move(s));
  }
  return SimplicialComplex::from_generators(ground, std::move(gens));
}

SimplicialComplex deletion(const SimplicialComplex& k, int v) {
  if (!k.is_vertex(v)) throw std::invalid_argument("deletion: " + std::to_string(v) + " is not a vertex");
  std::vector<int> ground;
  std::copy_if(k.ground().begin(), k.ground().end(), std::back_inserter(ground),
               [&](int e) { return e != v; });
  std::vector<Simplex> gens;
  for (const auto& f : k.facets()) {
    Simplex s;
    std::copy_if(f.begin(), f.end(), std::back_inserter(s), [&](int e) { return e != v; });
    gens.push_back(std::move(s));
  }
  return SimplicialComplex::from_generators(ground, std::move(gens));
}

NagelReinerPair nagel_reiner_pair(const std::vector<int>& ground_x, const std::vector<int>& ground_y,
                                  const std::vector<Simplex>& phi) {
  if (phi.size() != ground_y.size()) throw std::invalid_argument("nagel_reiner_pair: phi must be total on Y");
  // With Y empty nothing generates K, so K is void. Its suspension is read as
  // S^0 through the join(void, L) = L convention.
  auto complex = SimplicialComplex::from_generators(ground_x, phi);
  const auto& xs = complex.ground();
  if (xs.size() != ground_x.size()) throw std::invalid_argument("nagel_reiner_pair: repeated element in X");
  const int nx = static_cast<int>(xs.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t y = 0; y < ground_y.size(); ++y) {
    Simplex image = phi[y];
    std::sort(image.begin(), image.end());
    for (int i = 0; i < nx; ++i)
      if (!std::binary_search(image.begin(), image.end(), xs[i]))
        edges.emplace_back(i, nx + static_cast<int>(y));
  }
  return {std::move(complex), Graph(nx + static_cast<int>(ground_y.size()), edges)};
}

}  // namespace cnc
