#include <doctest.h>

#include "cnc/directed.hpp"
#include "cnc/homology.hpp"
#include "cnc/presentation.hpp"

using namespace cnc;

TEST_CASE("directed closed neighborhoods") {
  const Digraph x1 = families::x1();
  CHECK(right_closed_k_neighborhood(x1, 0, 1) == VertexList{0, 1});
  CHECK(right_closed_k_neighborhood(x1, 1, 1) == VertexList{1});
  CHECK(right_closed_k_neighborhood(x1, 2, 1) == VertexList{1, 2});
  CHECK(left_closed_k_neighborhood(x1, 1, 1) == VertexList{0, 1, 2});
  const Digraph chain(3, {{0, 1}, {1, 2}});
  CHECK(right_closed_k_neighborhood(chain, 0, 1) == VertexList{0, 1});
  CHECK(right_closed_k_neighborhood(chain, 0, 2) == VertexList{0, 1, 2});
  CHECK(left_closed_k_neighborhood(chain, 2, 2) == VertexList{0, 1, 2});
}

TEST_CASE("X1 and X2 complexes") {
  const Digraph x1 = families::x1();
  const auto right = right_closed_nbhd_complex(x1, 1);
  const auto left = left_closed_nbhd_complex(x1, 1);
  CHECK(right == SimplicialComplex::from_generators({0, 1, 2}, {{0, 1}, {1, 2}}));
  CHECK(left == SimplicialComplex::full_simplex({0, 1, 2}));
  CHECK(right != left);
  CHECK(reduced_homology_z(right).is_zero());
  for (int k = 1; k <= 3; ++k) {
    const auto r = right_closed_nbhd_complex(families::x2(), k);
    const auto l = left_closed_nbhd_complex(families::x2(), k);
    CHECK(reduced_homology_z(r).is_zero());
    CHECK(reduced_homology_z(l).is_zero());
    CHECK(tietze_simplify(edge_path_presentation(r, 0)).trivial);
    CHECK(tietze_simplify(edge_path_presentation(l, 0)).trivial);
  }
}

TEST_CASE("right and left complexes have equal homology") {
  for (int m = 0; m <= 3; ++m)
    for (int k = 1; k <= 2; ++k) {
      const auto w = families::x2_window(m);
      CHECK(reduced_homology_z(right_closed_nbhd_complex(w, k)) == reduced_homology_z(left_closed_nbhd_complex(w, k)));
    }
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    const auto x = families::random_digraph(1 + static_cast<int>(rng.below(6)), 1 + rng.below(3), 4, rng.next());
    for (int k = 1; k <= 2; ++k)
      CHECK(reduced_homology_z(right_closed_nbhd_complex(x, k)) == reduced_homology_z(left_closed_nbhd_complex(x, k)));
  }
}

TEST_CASE("symmetric digraphs reduce to the undirected complex") {
  Rng rng(107);
  for (int i = 0; i < 40; ++i) {
    const Graph g = families::erdos_renyi(1 + static_cast<int>(rng.below(7)), 1, 2, rng.next());
    const auto x = Digraph::from_graph(g);
    for (int k = 1; k <= 2; ++k) {
      CHECK(right_closed_nbhd_complex(x, k) == closed_neighborhood_complex(g, k));
      CHECK(left_closed_nbhd_complex(x, k) == closed_neighborhood_complex(g, k));
    }
  }
}
