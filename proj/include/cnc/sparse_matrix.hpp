#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cnc {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix in coordinate form. Entries are kept sorted by
/// (row, col) with no zeros and no repeated coordinates.
class SparseIntMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    BigInt value;
  };

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Repeated coordinates are summed; zero results are dropped.
  SparseIntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  BigInt at(std::size_t row, std::size_t col) const;
  std::vector<std::vector<BigInt>> to_dense() const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

/// Nonzero invariant factors d1 | d2 | ... of m over the integers (all
/// positive). The rank of m is the length of the list.
///
/// Elimination always pivots on an entry of smallest absolute value, ties
/// broken by (row, col). Only the factors are produced, no transforms.
std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m);

}  // namespace cnc
