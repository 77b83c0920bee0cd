#pragma once

#include <cstddef>
#include <vector>

#include "cnc/complex.hpp"
#include "cnc/sparse_matrix.hpp"

namespace cnc {

/// A word in signed 1-based generator indices: g means generator g, -g its
/// inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

Word free_reduce(Word w);
Word inverse(const Word& w);

/// Edge-path group of the component of `base`: BFS spanning tree of the
/// 1-skeleton (ascending neighbors), a generator per non-tree edge u<v in
/// lexicographic order, one relator per triangle. When `ignored` is given it
/// receives the number of vertices outside the component.
GroupPresentation edge_path_presentation(const SimplicialComplex& k, int base, std::size_t* ignored = nullptr);

struct Abelianization {
  std::int64_t free_rank = 0;
  std::vector<BigInt> torsion;
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};
Abelianization abelianization_invariants(const GroupPresentation& p);

struct TietzeResult {
  GroupPresentation presentation;
  bool trivial = false;  // false means inconclusive, never "nontrivial"
  std::size_t steps = 0;
};

inline constexpr std::size_t kDefaultTietzeBudget = 100000;

/// Reduces relators and eliminates generators that occur exactly once in some
/// relator, as long as no substituted relator grows past four times the
/// longest input relator.
TietzeResult tietze_simplify(GroupPresentation p, std::size_t budget = kDefaultTietzeBudget);

}  // namespace cnc
