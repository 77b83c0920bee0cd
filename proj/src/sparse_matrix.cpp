#include "cnc/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cnc {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  for (auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry out of range");
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
      if (entries_.back().value == 0) entries_.pop_back();
    } else if (e.value != 0) {
      entries_.push_back(std::move(e));
    }
  }
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows == 0 ? 0 : dense[0].size();
  std::vector<Entry> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (dense[r][c] != 0) entries.push_back({r, c, BigInt(dense[r][c])});
  }
  return SparseIntMatrix(rows, cols, std::move(entries));
}

BigInt SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(row, col),
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

std::vector<std::vector<BigInt>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<BigInt>> out(rows_, std::vector<BigInt>(cols_));
  for (const auto& e : entries_) out[e.row][e.col] = e.value;
  return out;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  std::vector<std::vector<const SparseIntMatrix::Entry*>> b_rows(b.rows());
  for (const auto& e : b.entries()) b_rows[e.row].push_back(&e);
  std::map<std::pair<std::size_t, std::size_t>, BigInt> acc;
  for (const auto& e : a.entries())
    for (const auto* f : b_rows[e.col]) acc[{e.row, f->col}] += e.value * f->value;
  std::vector<SparseIntMatrix::Entry> entries;
  for (auto& [key, value] : acc)
    if (value != 0) entries.push_back({key.first, key.second, std::move(value)});
  return SparseIntMatrix(a.rows(), b.cols(), std::move(entries));
}

namespace {

// Mutable sparse matrix with row maps and column index sets kept in sync.
class WorkMatrix {
 public:
  explicit WorkMatrix(const SparseIntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (const auto& e : m.entries()) {
      rows_[e.row].emplace(e.col, e.value);
      cols_[e.col].insert(e.row);
    }
  }

  // Smallest |value|, ties by (row, col); false when the matrix is zero.
  bool find_pivot(std::size_t& row, std::size_t& col) const {
    bool found = false;
    BigInt best;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        BigInt a = abs(v);
        if (!found || a < best) {
          found = true;
          best = a;
          row = r;
          col = c;
          if (best == 1) return true;
        }
      }
    return found;
  }

  const BigInt& value(std::size_t r, std::size_t c) const { return rows_[r].at(c); }
  const std::set<std::size_t>& col_rows(std::size_t c) const { return cols_[c]; }
  const std::map<std::size_t, BigInt>& row(std::size_t r) const { return rows_[r]; }

  void set(std::size_t r, std::size_t c, BigInt v) {
    if (v == 0) {
      rows_[r].erase(c);
      cols_[c].erase(r);
    } else {
      rows_[r][c] = std::move(v);
      cols_[c].insert(r);
    }
  }

  // row target -= q * row source
  void row_axpy(std::size_t target, const BigInt& q, std::size_t source) {
    const auto src = rows_[source];
    for (const auto& [c, v] : src) {
      auto it = rows_[target].find(c);
      BigInt next = (it == rows_[target].end() ? BigInt(0) : it->second) - q * v;
      set(target, c, std::move(next));
    }
  }

  void remove(std::size_t r, std::size_t c) {
    for (const auto& [cc, v] : rows_[r]) cols_[cc].erase(r);
    rows_[r].clear();
    for (std::size_t rr : cols_[c]) rows_[rr].erase(c);
    cols_[c].clear();
  }

 private:
  std::vector<std::map<std::size_t, BigInt>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

}  // namespace

std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m) {
  WorkMatrix w(m);
  std::vector<BigInt> diagonal;
  std::size_t r = 0, c = 0;
  while (w.find_pivot(r, c)) {
    bool clean = false;
    while (!clean) {
      clean = true;
      const BigInt p = w.value(r, c);
      // Column c by row operations.
      const std::vector<std::size_t> others(w.col_rows(c).begin(), w.col_rows(c).end());
      for (std::size_t rr : others) {
        if (rr == r) continue;
        const BigInt q = w.value(rr, c) / p;
        if (q != 0) w.row_axpy(rr, q, r);
      }
      // Row r by column operations: column c is now the pivot alone outside
      // of nonzero remainders, so each entry of row r reduces modulo p.
      std::size_t best_r = r, best_c = c;
      BigInt best = abs(p);
      for (std::size_t rr : w.col_rows(c)) {
        if (rr == r) continue;
        clean = false;
        if (abs(w.value(rr, c)) < best) {
          best = abs(w.value(rr, c));
          best_r = rr;
          best_c = c;
        }
      }
      if (clean) {
        const std::vector<std::pair<std::size_t, BigInt>> row_entries(w.row(r).begin(), w.row(r).end());
        for (const auto& [cc, v] : row_entries) {
          if (cc == c) continue;
          BigInt rem = v % p;
          w.set(r, cc, rem);
          if (rem != 0) {
            clean = false;
            if (abs(rem) < best) {
              best = abs(rem);
              best_r = r;
              best_c = cc;
            }
          }
        }
      }
      if (!clean) {
        r = best_r;
        c = best_c;
      }
    }
    diagonal.push_back(abs(w.value(r, c)));
    w.remove(r, c);
  }
  // Diagonal to divisibility chain by pairwise (gcd, lcm) replacement.
  std::sort(diagonal.begin(), diagonal.end());
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      if (diagonal[j] % diagonal[i] == 0) continue;
      BigInt g = gcd(diagonal[i], diagonal[j]);
      BigInt l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }
  std::sort(diagonal.begin(), diagonal.end());
  return diagonal;
}

}  // namespace cnc
