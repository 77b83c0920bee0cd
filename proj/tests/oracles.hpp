#pragma once

// Brute-force reference definitions for tests. Deliberately naive: subsets
// as sorted vectors, no masks, no shared code with the library beyond the
// input types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "cnc/complex.hpp"
#include "cnc/graph.hpp"

namespace oracle {

using Set = std::vector<int>;
using Family = std::set<Set>;

inline std::vector<Set> subsets(const Set& ground) {
  std::vector<Set> out{{}};
  for (int x : ground) {
    const std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) {
      Set s = out[i];
      s.push_back(x);
      out.push_back(s);
    }
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

inline Set range(int n) {
  Set s;
  for (int i = 0; i < n; ++i) s.push_back(i);
  return s;
}

inline bool subset_of(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Every simplex of a complex, from its facets.
inline Family faces(const cnc::SimplicialComplex& k) {
  Family out;
  for (const auto& f : k.facets())
    for (auto& s : subsets(f)) out.insert(s);
  return out;
}

inline std::vector<int> bfs(const cnc::Graph& g, int v) {
  std::vector<int> d(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> q;
  d[static_cast<std::size_t>(v)] = 0;
  q.push(v);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w = 0; w < g.order(); ++w)
      if (g.adjacent(u, w) && d[static_cast<std::size_t>(w)] < 0) {
        d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
  }
  return d;
}

inline Set ball(const cnc::Graph& g, int v, int k) {
  const auto d = bfs(g, v);
  Set out;
  for (int w = 0; w < g.order(); ++w)
    if (d[static_cast<std::size_t>(w)] >= 0 && d[static_cast<std::size_t>(w)] <= k) out.push_back(w);
  return out;
}

inline Set open_nbhd(const cnc::Graph& g, int v) {
  Set out;
  for (int w = 0; w < g.order(); ++w)
    if (g.adjacent(v, w)) out.push_back(w);
  return out;
}

// Subsets of V lying in some N^k[v].
inline Family closed_nbhd_faces(const cnc::Graph& g, int k) {
  Family out;
  for (const auto& s : subsets(range(g.order())))
    for (int v = 0; v < g.order(); ++v)
      if (subset_of(s, ball(g, v, k))) {
        out.insert(s);
        break;
      }
  return out;
}

inline Family open_nbhd_faces(const cnc::Graph& g) {
  Family out;
  for (const auto& s : subsets(range(g.order())))
    for (int v = 0; v < g.order(); ++v)
      if (subset_of(s, open_nbhd(g, v))) {
        out.insert(s);
        break;
      }
  return out;
}

inline bool independent(const cnc::Graph& g, const Set& s) {
  for (int a : s)
    for (int b : s)
      if (a < b && g.adjacent(a, b)) return false;
  return true;
}

inline Family independent_faces(const cnc::Graph& g) {
  Family out;
  for (const auto& s : subsets(range(g.order())))
    if (independent(g, s)) out.insert(s);
  return out;
}

inline Family clique_faces(const cnc::Graph& g) {
  Family out;
  for (const auto& s : subsets(range(g.order()))) {
    bool ok = true;
    for (int a : s)
      for (int b : s)
        if (a < b && !g.adjacent(a, b)) ok = false;
    if (ok) out.insert(s);
  }
  return out;
}

// σ ∈ K^∨ iff X − σ ∉ K.
inline Family dual_faces(const Set& ground, const Family& k) {
  Family out;
  for (const auto& s : subsets(ground))
    if (!k.count(minus(ground, s))) out.insert(s);
  return out;
}

inline bool dominates(const cnc::Graph& g, const Set& d) {
  for (int v = 0; v < g.order(); ++v) {
    bool hit = std::find(d.begin(), d.end(), v) != d.end();
    for (int w : d) hit = hit || g.adjacent(v, w);
    if (!hit) return false;
  }
  return true;
}

inline int domination_number(const cnc::Graph& g) {
  int best = g.order();
  for (const auto& s : subsets(range(g.order())))
    if (static_cast<int>(s.size()) < best && dominates(g, s)) best = static_cast<int>(s.size());
  return best;
}

// σ is a face iff V − σ dominates.
inline Family dominance_faces(const cnc::Graph& g) {
  Family out;
  const Set all = range(g.order());
  for (const auto& s : subsets(all))
    if (dominates(g, minus(all, s))) out.insert(s);
  return out;
}

// Sets containing no hyperedge.
inline Family hyper_independent_faces(int n, const std::vector<Set>& edges) {
  Family out;
  for (const auto& s : subsets(range(n))) {
    bool ok = true;
    for (const auto& e : edges) ok = ok && !subset_of(e, s);
    if (ok) out.insert(s);
  }
  return out;
}

// Rank over GF(p) of a small dense integer matrix.
inline int rank_mod(std::vector<std::vector<long long>> m, long long p) {
  int rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && ((m[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& r = m[static_cast<std::size_t>(rank)];
    long long inv = 1, base = ((r[c] % p) + p) % p;
    for (long long e = p - 2; e > 0; e >>= 1, base = base * base % p)
      if (e & 1) inv = inv * base % p;
    for (auto& x : r) x = ((x % p) + p) % p * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank)) continue;
      const long long f = ((m[i][c] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * r[j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers over GF(p) from the face family directly; entry i is
// dimension i - 1, trailing zeros trimmed down to one entry.
inline std::vector<std::int64_t> betti_mod(const Family& fam, long long p) {
  std::map<int, std::vector<Set>> by_dim;
  for (const auto& s : fam) by_dim[static_cast<int>(s.size()) - 1].push_back(s);
  if (by_dim.empty()) return {0};
  const int top = by_dim.rbegin()->first;
  std::vector<int> ranks(static_cast<std::size_t>(top + 3), 0);  // ranks[d+1] = rank ∂_d
  for (int d = 0; d <= top; ++d) {
    const auto& rows = by_dim[d - 1];
    const auto& cols = by_dim[d];
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < cols[c].size(); ++i) {
        Set face = cols[c];
        face.erase(face.begin() + static_cast<long>(i));
        const auto r = std::find(rows.begin(), rows.end(), face) - rows.begin();
        m[static_cast<std::size_t>(r)][c] = (i % 2 == 0) ? 1 : -1;
      }
    ranks[static_cast<std::size_t>(d + 1)] = rank_mod(m, p);
  }
  std::vector<std::int64_t> out;
  for (int d = -1; d <= top; ++d) {
    const auto n = static_cast<std::int64_t>(by_dim[d].size());
    out.push_back(n - ranks[static_cast<std::size_t>(d + 1)] - ranks[static_cast<std::size_t>(d + 2)]);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace oracle
