#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cnc/complex.hpp"
#include "cnc/sparse_matrix.hpp"

namespace cnc {

/// One reduced homology group ℤ^betti ⊕ ⊕ ℤ/t.
struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<BigInt> torsion;  // factors > 1, each dividing the next

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced homology indexed from dimension -1. Dimensions past the stored
/// range are zero; equality ignores trailing zero groups.
class HomologyResult {
 public:
  HomologyResult() : groups_(1) {}

  const HomologyGroup& at(int d) const;
  std::int64_t betti(int d) const { return at(d).betti; }
  const std::vector<BigInt>& torsion(int d) const { return at(d).torsion; }
  void set(int d, HomologyGroup g);

  /// Highest stored dimension (at least -1).
  int top_dimension() const { return static_cast<int>(groups_.size()) - 2; }
  bool is_zero() const;
  /// Result R with R_d = this_{d - s}. Shifting nonzero groups below -1 throws.
  HomologyResult shifted(int s) const;
  /// Betti numbers for dimensions -1..top_dimension().
  std::vector<std::int64_t> betti_numbers() const;

  /// The unique nonzero dimension when the result is a single ℤ, else none.
  bool is_single_sphere(int& dimension) const;

  std::string to_string() const;

  friend bool operator==(const HomologyResult& a, const HomologyResult& b);

 private:
  void trim();
  std::vector<HomologyGroup> groups_;  // groups_[d + 1]
};

struct FieldSpec {
  std::uint32_t prime = 0;  // 0 means the rationals

  static FieldSpec rationals() { return {}; }
  static FieldSpec modulo(std::uint32_t p);
  bool is_rational() const { return prime == 0; }
};

/// ∂_0 .. ∂_top over canonically ordered faces (lexicographic per dimension);
/// ∂_0 is the augmentation row. Empty for the void complex. Checks that every
/// composite ∂_{d-1}∂_d vanishes.
std::vector<SparseIntMatrix> boundary_matrices(const SimplicialComplex& k, int max_dim = kFullDimension);

HomologyResult reduced_homology_z(const SimplicialComplex& k);

/// Reduced Betti numbers over a field; entry i is dimension i - 1.
std::vector<std::int64_t> betti_over_field(const SimplicialComplex& k, FieldSpec field);

/// 𝔽₂ reduced Betti numbers (entry i is dimension i - 1) from dense bit
/// matrices, sharing no code with the sparse engine. Throws
/// std::length_error when the complex has more than max_simplices simplices.
std::vector<std::int64_t> brute_force_homology_gf2(const SimplicialComplex& k,
                                                    std::size_t max_simplices = 2000);

/// Betti list lookup with zeros outside the stored range.
std::int64_t betti_at(const std::vector<std::int64_t>& betti, int d);

}  // namespace cnc
