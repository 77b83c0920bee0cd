#include <doctest.h>

#include "cnc/homology.hpp"
#include "cnc/sparse_matrix.hpp"
#include "oracles.hpp"

using namespace cnc;

namespace {

// Six-vertex minimal triangulation of the real projective plane.
SimplicialComplex rp2() {
  return SimplicialComplex::from_generators(
      {0, 1, 2, 3, 4, 5}, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                           {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

SimplicialComplex boundary(int n) {
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i) {
    Simplex f;
    for (int j = 0; j < n; ++j)
      if (j != i) f.push_back(j);
    facets.push_back(f);
  }
  return SimplicialComplex::from_generators(oracle::range(n), facets);
}

SimplicialComplex random_complex(Rng& rng, int max_ground, int max_gens) {
  const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_ground)));
  std::vector<Simplex> gens;
  const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_gens)));
  for (int j = 0; j < count; ++j) {
    Simplex f;
    for (int i = 0; i < m; ++i)
      if (rng.chance(1, 2)) f.push_back(i);
    gens.push_back(f);
  }
  return SimplicialComplex::from_generators(oracle::range(m), gens);
}

}  // namespace

TEST_CASE("Smith normal form") {
  CHECK(smith_normal_form(SparseIntMatrix::from_dense({{2, 4}, {6, 8}})) == std::vector<BigInt>{2, 4});
  CHECK(smith_normal_form(SparseIntMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
        std::vector<BigInt>{1, 1, 1});
  CHECK(smith_normal_form(SparseIntMatrix::from_dense({{0, 0}, {0, 0}})).empty());
  CHECK(smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
  CHECK(smith_normal_form(SparseIntMatrix::from_dense({{4, 6}, {6, 9}})) == std::vector<BigInt>{1});
}

TEST_CASE("reduced integral homology") {
  HomologyResult s2;
  s2.set(2, {1, {}});
  CHECK(reduced_homology_z(boundary(4)) == s2);

  const auto h = reduced_homology_z(rp2());
  HomologyResult z2;
  z2.set(1, {0, {BigInt(2)}});
  CHECK(h == z2);
  CHECK(betti_over_field(rp2(), FieldSpec::modulo(2)) == std::vector<std::int64_t>{0, 0, 1, 1});
  CHECK(betti_over_field(rp2(), FieldSpec::rationals()) == std::vector<std::int64_t>{0});
  CHECK(betti_over_field(boundary(4), FieldSpec::modulo(3)) == std::vector<std::int64_t>{0, 0, 0, 1});

  const auto wedge = reduced_homology_z(independence_complex(double_cover(families::complete(4))));
  HomologyResult three;
  three.set(1, {3, {}});
  CHECK(wedge == three);

  HomologyResult minus_one;
  minus_one.set(-1, {1, {}});
  CHECK(reduced_homology_z(SimplicialComplex::empty_simplex({0, 1})) == minus_one);
  CHECK(reduced_homology_z(SimplicialComplex::void_complex({0})).is_zero());
}

TEST_CASE("dense oracle") {
  CHECK(brute_force_homology_gf2(independence_complex(families::cycle(5))) == std::vector<std::int64_t>{0, 0, 1});
  CHECK(brute_force_homology_gf2(SimplicialComplex::empty_simplex({})) == std::vector<std::int64_t>{1});
}

TEST_CASE("field Betti numbers agree with a from-definition oracle") {
  Rng rng(53);
  for (int i = 0; i < 150; ++i) {
    const auto k = random_complex(rng, 7, 6);
    const auto fam = oracle::faces(k);
    CHECK(betti_over_field(k, FieldSpec::modulo(2)) == oracle::betti_mod(fam, 2));
    CHECK(betti_over_field(k, FieldSpec::modulo(3)) == oracle::betti_mod(fam, 3));
    CHECK(brute_force_homology_gf2(k) == oracle::betti_mod(fam, 2));
    // Rational Betti numbers equal the 𝔽_p ones for a large prime here.
    CHECK(betti_over_field(k, FieldSpec::rationals()) == oracle::betti_mod(fam, 1000003));
  }
}

TEST_CASE("integral homology is consistent with field coefficients") {
  // Universal coefficients: β_d(𝔽_p) = rank_d + #(p | t in H_d) + #(p | t in H_{d-1}).
  Rng rng(59);
  std::vector<SimplicialComplex> corpus{rp2(), suspension(rp2())};
  for (int i = 0; i < 120; ++i) corpus.push_back(random_complex(rng, 8, 8));
  for (const auto& k : corpus) {
    const auto h = reduced_homology_z(k);
    for (std::uint32_t p : {2u, 3u}) {
      const auto b = betti_over_field(k, FieldSpec::modulo(p));
      for (int d = -1; d <= h.top_dimension() + 1; ++d) {
        std::int64_t expected = h.betti(d);
        for (const auto& t : h.torsion(d)) expected += (t % p == 0);
        for (const auto& t : h.torsion(d - 1)) expected += (t % p == 0);
        CHECK(betti_at(b, d) == expected);
      }
    }
  }
}

TEST_CASE("boundary of boundary vanishes") {
  Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    const auto k = random_complex(rng, 8, 6);
    const auto d = boundary_matrices(k);
    for (std::size_t j = 1; j < d.size(); ++j) CHECK((d[j - 1] * d[j]).entries().empty());
  }
}

TEST_CASE("suspension shifts homology with torsion") {
  const auto h = reduced_homology_z(suspension(suspension(rp2())));
  HomologyResult z2;
  z2.set(3, {0, {BigInt(2)}});
  CHECK(h == z2);
}

TEST_CASE("shifting below dimension -1 throws") {
  HomologyResult h;
  h.set(-1, {1, {}});
  CHECK_THROWS(h.shifted(-1));
  CHECK(h.shifted(1).betti(0) == 1);
}

TEST_CASE("prime fields reject composites") {
  CHECK_THROWS(FieldSpec::modulo(4));
  CHECK_THROWS(FieldSpec::modulo(1));
  CHECK(FieldSpec::modulo(5).prime == 5);
}
