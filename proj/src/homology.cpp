#include "cnc/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cnc {

// ---------------------------------------------------------------- results

const HomologyGroup& HomologyResult::at(int d) const {
  static const HomologyGroup zero;
  if (d < -1 || d + 1 >= static_cast<int>(groups_.size())) return zero;
  return groups_[static_cast<std::size_t>(d + 1)];
}

void HomologyResult::set(int d, HomologyGroup g) {
  if (d < -1) throw std::out_of_range("homology dimension below -1");
  if (d + 1 >= static_cast<int>(groups_.size())) groups_.resize(static_cast<std::size_t>(d + 2));
  groups_[static_cast<std::size_t>(d + 1)] = std::move(g);
  trim();
}

void HomologyResult::trim() {
  while (groups_.size() > 1 && groups_.back().is_zero()) groups_.pop_back();
}

bool HomologyResult::is_zero() const {
  return std::all_of(groups_.begin(), groups_.end(), [](const HomologyGroup& g) { return g.is_zero(); });
}

HomologyResult HomologyResult::shifted(int s) const {
  HomologyResult out;
  for (int d = -1; d <= top_dimension(); ++d) {
    const auto& g = at(d);
    if (g.is_zero()) continue;
    if (d + s < -1) throw std::domain_error("homology shift moves a nonzero group below -1");
    out.set(d + s, g);
  }
  return out;
}

std::vector<std::int64_t> HomologyResult::betti_numbers() const {
  std::vector<std::int64_t> out;
  for (const auto& g : groups_) out.push_back(g.betti);
  return out;
}

bool HomologyResult::is_single_sphere(int& dimension) const {
  int found = -2;
  for (int d = -1; d <= top_dimension(); ++d) {
    const auto& g = at(d);
    if (g.is_zero()) continue;
    if (found != -2 || g.betti != 1 || !g.torsion.empty()) return false;
    found = d;
  }
  if (found == -2) return false;
  dimension = found;
  return true;
}

std::string HomologyResult::to_string() const {
  std::ostringstream os;
  os << "dim  betti  torsion\n";
  for (int d = -1; d <= top_dimension(); ++d) {
    const auto& g = at(d);
    os << d << "  " << g.betti << "  ";
    if (g.torsion.empty()) os << "-";
    for (std::size_t i = 0; i < g.torsion.size(); ++i) os << (i ? "," : "") << g.torsion[i];
    os << "\n";
  }
  return os.str();
}

bool operator==(const HomologyResult& a, const HomologyResult& b) { return a.groups_ == b.groups_; }

FieldSpec FieldSpec::modulo(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("field modulus must be prime");
  for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("field modulus must be prime");
  if (p > (1u << 31)) throw std::invalid_argument("field modulus too large");
  FieldSpec f;
  f.prime = p;
  return f;
}

std::int64_t betti_at(const std::vector<std::int64_t>& betti, int d) {
  if (d < -1 || d + 1 >= static_cast<int>(betti.size())) return 0;
  return betti[static_cast<std::size_t>(d + 1)];
}

// ---------------------------------------------------------------- chains

namespace {

struct ChainData {
  FaceEnumeration faces;
  // index[d + 1] maps a d-face mask to its position.
  std::vector<std::unordered_map<VertexMask, std::int32_t>> index;

  int top() const { return faces.top_dimension(); }
  std::size_t count(int d) const {
    if (d + 1 >= static_cast<int>(faces.faces.size())) return 0;
    return faces.faces[static_cast<std::size_t>(d + 1)].size();
  }
};

ChainData build_chain(const SimplicialComplex& k, int max_dim = kFullDimension) {
  ChainData c;
  c.faces = enumerate_faces(k, max_dim);
  c.index.resize(c.faces.faces.size());
  // Rows of ∂_top are (top-1)-faces; the top faces themselves need no index.
  for (std::size_t i = 0; i + 1 < c.faces.faces.size(); ++i) {
    auto& idx = c.index[i];
    const auto& list = c.faces.faces[i];
    idx.reserve(list.size());
    for (std::size_t j = 0; j < list.size(); ++j) idx.emplace(list[j], static_cast<std::int32_t>(j));
  }
  return c;
}

using SignedColumn = std::vector<std::pair<std::int32_t, int>>;

// Column j of ∂_d, sorted by row.
SignedColumn boundary_column(const ChainData& c, int d, std::size_t j) {
  if (d == 0) return {{0, 1}};
  const VertexMask face = c.faces.faces[static_cast<std::size_t>(d + 1)][j];
  const auto& rows = c.index[static_cast<std::size_t>(d)];
  SignedColumn col;
  int t = 0;
  for (VertexMask rest = face; rest != 0; rest &= rest - 1, ++t) {
    const VertexMask bit = rest & (~rest + 1);
    col.emplace_back(rows.at(face ^ bit), t % 2 == 0 ? 1 : -1);
  }
  std::sort(col.begin(), col.end());
  return col;
}

template <class T>
using Column = std::vector<std::pair<std::int32_t, T>>;

// out = f(x, y) entrywise over the union of supports; zeros dropped.
template <class T, class F>
bool merge_columns(Column<T>& col, const Column<T>& piv, F f) {
  Column<T> out;
  out.reserve(col.size() + piv.size());
  std::size_t i = 0, j = 0;
  const T zero{};
  while (i < col.size() || j < piv.size()) {
    std::int32_t row;
    const T* x = &zero;
    const T* y = &zero;
    if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
      row = col[i].first;
      x = &col[i++].second;
    } else if (i == col.size() || piv[j].first < col[i].first) {
      row = piv[j].first;
      y = &piv[j++].second;
    } else {
      row = col[i].first;
      x = &col[i++].second;
      y = &piv[j++].second;
    }
    T v;
    if (!f(*x, *y, v)) return false;
    if (v != zero) out.emplace_back(row, std::move(v));
  }
  col = std::move(out);
  return true;
}

// Integer reduction that only succeeds while every pivot is a unit. Then the
// rank is the pivot count and every invariant factor is 1.
struct UnitPivotOps {
  using T = std::int64_t;
  T convert(int v) const { return v; }
  bool eliminate(Column<T>& col, const Column<T>& piv) const {
    const T q = col.back().second * piv.back().second;  // pivot is ±1
    return merge_columns(col, piv, [q](const T& x, const T& y, T& out) {
      T prod;
      if (__builtin_mul_overflow(q, y, &prod)) return false;
      return !__builtin_sub_overflow(x, prod, &out);
    });
  }
  bool normalize(Column<T>& col) const { return col.back().second == 1 || col.back().second == -1; }
};

struct ModPrimeOps {
  using T = std::uint64_t;
  std::uint64_t p;
  T convert(int v) const { return static_cast<T>((v % static_cast<std::int64_t>(p) + p) % p); }
  bool eliminate(Column<T>& col, const Column<T>& piv) const {
    const T q = col.back().second;  // pivot low is 1
    const std::uint64_t mod = p;
    return merge_columns(col, piv, [q, mod](const T& x, const T& y, T& out) {
      out = (x + mod - (q * y) % mod) % mod;
      return true;
    });
  }
  bool normalize(Column<T>& col) const {
    const T inv = power(col.back().second, p - 2);
    for (auto& e : col) e.second = e.second * inv % p;
    return true;
  }
  T power(T base, T e) const {
    T r = 1;
    base %= p;
    for (; e; e >>= 1, base = base * base % p)
      if (e & 1) r = r * base % p;
    return r;
  }
};

// Fraction-free elimination over ℚ: col := b·col − a·piv, then divide out
// the content so entries stay small.
struct RationalOps {
  using T = BigInt;
  T convert(int v) const { return v; }
  bool eliminate(Column<T>& col, const Column<T>& piv) const {
    const T a = col.back().second;
    const T b = piv.back().second;
    merge_columns(col, piv, [&](const T& x, const T& y, T& out) {
      out = b * x - a * y;
      return true;
    });
    T content = 0;
    for (const auto& e : col) content = gcd(content, e.second);
    if (content > 1)
      for (auto& e : col) e.second /= content;
    return true;
  }
  bool normalize(Column<T>&) const { return true; }
};

// Column reduction of ∂_d. Columns flagged in `skip` are known to reduce to
// zero and are not visited. On success `pivot_rows` marks the pivot rows,
// which are exactly the columns of ∂_{d-1} that may be skipped next.
template <class Ops>
std::optional<std::size_t> reduce_rank(const ChainData& c, int d, const std::vector<char>* skip,
                                       std::vector<char>* pivot_rows, const Ops& ops) {
  using T = typename Ops::T;
  const std::size_t rows = c.count(d - 1);
  const std::size_t cols = c.count(d);
  std::vector<std::int32_t> pivot_of(rows, -1);
  std::vector<Column<T>> stored;
  for (std::size_t j = 0; j < cols; ++j) {
    if (skip && (*skip)[j]) continue;
    Column<T> col;
    for (const auto& [r, s] : boundary_column(c, d, j)) col.emplace_back(r, ops.convert(s));
    while (!col.empty()) {
      const std::int32_t low = col.back().first;
      if (pivot_of[static_cast<std::size_t>(low)] < 0) break;
      if (!ops.eliminate(col, stored[static_cast<std::size_t>(pivot_of[static_cast<std::size_t>(low)])]))
        return std::nullopt;
    }
    if (col.empty()) continue;
    if (!ops.normalize(col)) return std::nullopt;
    pivot_of[static_cast<std::size_t>(col.back().first)] = static_cast<std::int32_t>(stored.size());
    stored.push_back(std::move(col));
  }
  if (pivot_rows) {
    pivot_rows->assign(rows, 0);
    for (std::size_t r = 0; r < rows; ++r)
      if (pivot_of[r] >= 0) (*pivot_rows)[r] = 1;
  }
  return stored.size();
}

SparseIntMatrix boundary_matrix(const ChainData& c, int d, const std::vector<char>* skip) {
  std::vector<SparseIntMatrix::Entry> entries;
  std::size_t out_col = 0;
  for (std::size_t j = 0; j < c.count(d); ++j) {
    if (skip && (*skip)[j]) continue;
    for (const auto& [r, s] : boundary_column(c, d, j))
      entries.push_back({static_cast<std::size_t>(r), out_col, BigInt(s)});
    ++out_col;
  }
  return SparseIntMatrix(c.count(d - 1), out_col, std::move(entries));
}

// A cone and the void complex have vanishing reduced homology.
bool trivially_acyclic(const SimplicialComplex& k) { return k.is_void() || k.is_cone(); }

}  // namespace

std::vector<SparseIntMatrix> boundary_matrices(const SimplicialComplex& k, int max_dim) {
  std::vector<SparseIntMatrix> out;
  if (k.is_void()) return out;
  const ChainData c = build_chain(k, max_dim);
  for (int d = 0; d <= c.top(); ++d) out.push_back(boundary_matrix(c, d, nullptr));
  for (std::size_t d = 1; d < out.size(); ++d)
    if (!(out[d - 1] * out[d]).is_zero()) throw std::logic_error("boundary composite is nonzero");
  return out;
}

HomologyResult reduced_homology_z(const SimplicialComplex& k) {
  if (trivially_acyclic(k)) return HomologyResult();
  const ChainData c = build_chain(k);
  const int top = c.top();
  // rank[d] and nonunit factors[d] of ∂_d for d = 0..top; ∂_{top+1} = 0.
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(top + 2));
  std::vector<char> cleared;
  bool have_cleared = false;
  for (int d = top; d >= 0; --d) {
    std::vector<char> pivots;
    const auto r = reduce_rank(c, d, have_cleared ? &cleared : nullptr, &pivots, UnitPivotOps{});
    if (r) {
      rank[static_cast<std::size_t>(d)] = *r;
      cleared = std::move(pivots);
      have_cleared = true;
      continue;
    }
    // Skipped columns lie in the integer span of the others, so dropping them
    // leaves the cokernel, and with it the invariant factors, unchanged.
    const auto snf = smith_normal_form(boundary_matrix(c, d, have_cleared ? &cleared : nullptr));
    rank[static_cast<std::size_t>(d)] = snf.size();
    for (const auto& f : snf)
      if (f > 1) factors[static_cast<std::size_t>(d)].push_back(f);
    have_cleared = false;
  }
  HomologyResult out;
  for (int d = -1; d <= top; ++d) {
    HomologyGroup g;
    const std::size_t below = d >= 0 ? rank[static_cast<std::size_t>(d)] : 0;
    g.betti = static_cast<std::int64_t>(c.count(d)) - static_cast<std::int64_t>(below) -
              static_cast<std::int64_t>(rank[static_cast<std::size_t>(d + 1)]);
    g.torsion = factors[static_cast<std::size_t>(d + 1)];
    out.set(d, std::move(g));
  }
  return out;
}

std::vector<std::int64_t> betti_over_field(const SimplicialComplex& k, FieldSpec field) {
  if (trivially_acyclic(k)) return {0};
  if (!field.is_rational()) field = FieldSpec::modulo(field.prime);
  const ChainData c = build_chain(k);
  const int top = c.top();
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  std::vector<char> cleared;
  for (int d = top; d >= 0; --d) {
    std::vector<char> pivots;
    const auto* skip = d == top ? nullptr : &cleared;
    const auto r = field.is_rational() ? reduce_rank(c, d, skip, &pivots, RationalOps{})
                                       : reduce_rank(c, d, skip, &pivots, ModPrimeOps{field.prime});
    rank[static_cast<std::size_t>(d)] = *r;
    cleared = std::move(pivots);
  }
  std::vector<std::int64_t> out;
  for (int d = -1; d <= top; ++d) {
    const std::size_t below = d >= 0 ? rank[static_cast<std::size_t>(d)] : 0;
    out.push_back(static_cast<std::int64_t>(c.count(d)) - static_cast<std::int64_t>(below) -
                  static_cast<std::int64_t>(rank[static_cast<std::size_t>(d + 1)]));
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// ---------------------------------------------------------------- oracle

std::vector<std::int64_t> brute_force_homology_gf2(const SimplicialComplex& k, std::size_t max_simplices) {
  // Faces by repeatedly deleting one element, starting from the facets.
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> frontier(k.facets().begin(), k.facets().end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& s : frontier) {
      if (!all.insert(s).second) continue;
      if (all.size() > max_simplices) throw std::length_error("brute_force_homology_gf2: too many simplices");
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  if (all.empty()) return {0};

  std::size_t max_size = 0;
  for (const auto& s : all) max_size = std::max(max_size, s.size());
  // by_size[s] lists the simplices with s elements (dimension s - 1).
  std::vector<std::vector<std::vector<int>>> by_size(max_size + 1);
  for (const auto& s : all) by_size[s.size()].push_back(s);

  // rank_gf2[s]: rank of the map from size-s chains to size-(s-1) chains.
  std::vector<std::size_t> rank_gf2(max_size + 2, 0);
  for (std::size_t s = 1; s <= max_size; ++s) {
    const auto& rows = by_size[s - 1];
    const auto& cols = by_size[s];
    std::map<std::vector<int>, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    const std::size_t words = (cols.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        std::vector<int> t = cols[j];
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        m[row_index.at(t)][j / 64] ^= std::uint64_t{1} << (j % 64);
      }
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size() && rank < m.size(); ++j) {
      const std::size_t w = j / 64;
      const std::uint64_t bit = std::uint64_t{1} << (j % 64);
      std::size_t p = rank;
      while (p < m.size() && !(m[p][w] & bit)) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank]);
      for (std::size_t r = 0; r < m.size(); ++r)
        if (r != rank && (m[r][w] & bit))
          for (std::size_t x = 0; x < words; ++x) m[r][x] ^= m[rank][x];
      ++rank;
    }
    rank_gf2[s] = rank;
  }
  std::vector<std::int64_t> out;
  for (std::size_t s = 0; s <= max_size; ++s)
    out.push_back(static_cast<std::int64_t>(by_size[s].size()) - static_cast<std::int64_t>(rank_gf2[s]) -
                  static_cast<std::int64_t>(rank_gf2[s + 1]));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace cnc
