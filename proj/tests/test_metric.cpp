#include <doctest.h>

#include "cnc/homology.hpp"
#include "cnc/metric.hpp"
#include "oracles.hpp"

using namespace cnc;

TEST_CASE("rationals") {
  CHECK(parse_rational("3/8") == Rational(3, 8));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(format_rational(Rational(6, 16)) == "3/8");
  CHECK_THROWS(parse_rational("x/2"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("metric validation") {
  CHECK_THROWS(FiniteMetricSpace({{0, 1}, {2, 0}}));
  CHECK_THROWS(FiniteMetricSpace({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}));
  CHECK_THROWS(FiniteMetricSpace({{0, 0}, {0, 0}}));
  CHECK_NOTHROW(FiniteMetricSpace({{0, 1}, {1, 0}}));
}

TEST_CASE("circle neighborhood graphs") {
  const auto c6 = circle_metric(circle_sample(6));
  CHECK(c6.distance(0, 3) == Rational(1, 2));
  CHECK(c6.distance(1, 5) == Rational(1, 3));
  CHECK(neighborhood_graph(c6, Rational(1, 6), true) == families::cycle(6));
  CHECK(neighborhood_graph(c6, Rational(1, 6), false) == families::edgeless(6));
  for (int n = 1; n <= 9; ++n)
    CHECK(neighborhood_graph(circle_metric(circle_sample(n)), Rational(1, 2), true) == families::complete(n));
}

TEST_CASE("Čech complexes") {
  const auto c6 = cech_complex(circle_metric(circle_sample(6)), Rational(1, 6), true);
  CHECK(c6.facets() == std::vector<Simplex>{{0, 1, 2}, {0, 1, 5}, {0, 4, 5}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  CHECK(reduced_homology_z(c6).betti(1) == 1);
  const auto c4 = cech_complex(circle_metric(circle_sample(4)), Rational(3, 10), false);
  CHECK(c4.facets().size() == 4);
  CHECK(reduced_homology_z(c4).betti(2) == 1);
  CHECK_THROWS(cech_complex(circle_metric(circle_sample(3)), Rational(0), false));
  CHECK_THROWS(cech_complex(circle_metric(circle_sample(3)), Rational(-1), true));

  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const auto x = random_metric(n, rng.next());
    Rational diameter = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (x.distance(a, b) > diameter) diameter = x.distance(a, b);
    CHECK(cech_complex(x, diameter, true) == SimplicialComplex::full_simplex(oracle::range(n)));

    const Rational r1(static_cast<long long>(1 + rng.below(12)), static_cast<long long>(1 + rng.below(4)));
    const Rational r2 = r1 + Rational(static_cast<long long>(rng.below(6)), 4);
    for (bool closed : {true, false}) {
      const auto a = cech_complex(x, r1, closed);
      CHECK(a == closed_neighborhood_complex(neighborhood_graph(x, r1, closed), 1));
      CHECK(is_subcomplex(a, cech_complex(x, r2, closed)));
      // Ball oracle: every face of the ball complex lies in one ball.
      for (const auto& f : oracle::faces(a)) {
        bool inside = false;
        for (int c = 0; c < n && !inside; ++c) {
          bool all = true;
          for (int v : f) all = all && (closed ? x.distance(c, v) <= r1 : x.distance(c, v) < r1);
          inside = all;
        }
        CHECK(inside);
      }
    }
  }
}

TEST_CASE("Borsuk graphs") {
  for (int m = 1; m <= 6; ++m) {
    const Graph g = borsuk_graph(circle_sample(2 * m), Rational(1, 2), true);
    CHECK(g.size() == static_cast<std::size_t>(m));
    for (Vertex v = 0; v < 2 * m; ++v) CHECK(g.adjacent(v, (v + m) % (2 * m)));
  }
  const Graph b8 = borsuk_graph(circle_sample(8), Rational(3, 8), true);
  for (Vertex v = 0; v < 8; ++v) CHECK(b8.neighbors(v) == VertexList([&] {
    VertexList far{(v + 3) % 8, (v + 4) % 8, (v + 5) % 8};
    std::sort(far.begin(), far.end());
    return far;
  }()));
  CHECK_THROWS(borsuk_graph(circle_sample(4), Rational(0), true));
  CHECK_THROWS(borsuk_graph(circle_sample(4), Rational(3, 4), true));
}
