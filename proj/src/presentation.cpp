#include "cnc/presentation.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace cnc {

Word free_reduce(Word w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

}  // namespace

GroupPresentation edge_path_presentation(const SimplicialComplex& k, int base, std::size_t* ignored) {
  if (!k.is_vertex(base)) throw std::invalid_argument("edge_path_presentation: base is not a vertex");
  const auto faces = enumerate_faces(k, 2);
  const auto& ground = faces.ground;
  const std::size_t n = ground.size();
  const int b = static_cast<int>(std::lower_bound(ground.begin(), ground.end(), base) - ground.begin());

  std::vector<VertexList> adj(n);
  const std::vector<VertexMask> no_faces;
  const auto& edges = faces.faces.size() > 2 ? faces.faces[2] : no_faces;
  const auto& triangles = faces.faces.size() > 3 ? faces.faces[3] : no_faces;
  for (VertexMask e : edges) {
    const auto uv = list_of(e);
    adj[static_cast<std::size_t>(uv[0])].push_back(uv[1]);
    adj[static_cast<std::size_t>(uv[1])].push_back(uv[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<int> parent(n, -2);
  std::deque<int> queue{b};
  parent[static_cast<std::size_t>(b)] = -1;
  VertexMask component = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    component |= VertexMask{1} << x;
    for (int y : adj[static_cast<std::size_t>(x)])
      if (parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
  }
  if (ignored) {
    *ignored = k.vertices().size() - static_cast<std::size_t>(std::popcount(component));
  }

  GroupPresentation p;
  std::unordered_map<VertexMask, int> generator;
  for (VertexMask e : edges) {
    if ((e & component) != e) continue;
    const auto uv = list_of(e);
    const bool tree = parent[static_cast<std::size_t>(uv[0])] == uv[1] || parent[static_cast<std::size_t>(uv[1])] == uv[0];
    generator[e] = tree ? 0 : ++p.generators;
  }
  for (VertexMask t : triangles) {
    if ((t & component) != t) continue;
    const auto abc = list_of(t);
    const VertexMask a = VertexMask{1} << abc[0], bb = VertexMask{1} << abc[1], c = VertexMask{1} << abc[2];
    Word w;
    if (int g = generator.at(a | bb)) w.push_back(g);
    if (int g = generator.at(bb | c)) w.push_back(g);
    if (int g = generator.at(a | c)) w.push_back(-g);
    p.relators.push_back(free_reduce(std::move(w)));
  }
  return p;
}

Abelianization abelianization_invariants(const GroupPresentation& p) {
  std::vector<SparseIntMatrix::Entry> entries;
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int x : p.relators[r])
      entries.push_back({r, static_cast<std::size_t>(std::abs(x) - 1), BigInt(x > 0 ? 1 : -1)});
  const SparseIntMatrix m(p.relators.size(), static_cast<std::size_t>(p.generators), std::move(entries));
  const auto factors = smith_normal_form(m);
  Abelianization out;
  out.free_rank = p.generators - static_cast<std::int64_t>(factors.size());
  for (const auto& f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget) {
  std::size_t longest = 1;
  for (const auto& r : p.relators) longest = std::max(longest, r.size());
  const std::size_t limit = 4 * longest;

  TietzeResult out;
  auto normalize = [&]() {
    std::vector<Word> next;
    for (auto& r : p.relators) {
      Word w = cyclic_reduce(std::move(r));
      if (!w.empty()) next.push_back(std::move(w));
    }
    std::sort(next.begin(), next.end(), [](const Word& a, const Word& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    p.relators = std::move(next);
  };

  // Eliminate generator g via relator index ri (g occurs there exactly once).
  auto try_eliminate = [&](std::size_t ri, int g) {
    const Word& r = p.relators[ri];
    const auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [g](int x) { return std::abs(x) == g; }) - r.begin());
    Word rotated(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
    rotated.insert(rotated.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word rest(rotated.begin() + 1, rotated.end());
    // g^e · rest = 1, so g = rest^{-e}.
    const Word value = rotated[0] > 0 ? inverse(rest) : rest;
    const Word value_inv = inverse(value);
    std::vector<Word> next;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i == ri) continue;
      Word w;
      for (int x : p.relators[i]) {
        if (x == g)
          w.insert(w.end(), value.begin(), value.end());
        else if (x == -g)
          w.insert(w.end(), value_inv.begin(), value_inv.end());
        else
          w.push_back(x);
      }
      for (int& x : w)
        if (std::abs(x) > g) x += x > 0 ? -1 : 1;
      w = cyclic_reduce(std::move(w));
      if (w.size() > limit) return false;
      next.push_back(std::move(w));
    }
    p.relators = std::move(next);
    --p.generators;
    return true;
  };

  while (out.steps < budget) {
    normalize();
    ++out.steps;
    if (p.generators == 0) break;
    bool progressed = false;
    for (std::size_t ri = 0; ri < p.relators.size() && !progressed; ++ri) {
      std::unordered_map<int, int> count;
      for (int x : p.relators[ri]) ++count[std::abs(x)];
      std::vector<int> once;
      for (const auto& [g, c] : count)
        if (c == 1) once.push_back(g);
      std::sort(once.begin(), once.end());
      for (int g : once)
        if (try_eliminate(ri, g)) {
          progressed = true;
          break;
        }
    }
    if (!progressed) break;
  }
  normalize();
  out.trivial = p.generators == 0;
  out.presentation = std::move(p);
  return out;
}

}  // namespace cnc
