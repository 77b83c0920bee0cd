#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cnc/complex.hpp"
#include "cnc/graph.hpp"
#include "cnc/sparse_matrix.hpp"

namespace cnc {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

/// Exact finite metric; the constructor checks symmetry, positivity off the
/// diagonal, zero diagonal and the triangle inequality.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  explicit FiniteMetricSpace(std::vector<std::vector<Rational>> dist);

  int size() const { return static_cast<int>(dist_.size()); }
  const Rational& distance(int x, int y) const { return dist_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }
  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  std::vector<std::vector<Rational>> dist_;
};

/// Points of ℝ/ℤ as sorted distinct angles in [0, 1).
struct CircleSample {
  std::vector<Rational> angles;
};

CircleSample circle_sample(int n);  // i/n
FiniteMetricSpace circle_metric(const CircleSample& c);

/// Edges 0 < d < r (open) or 0 < d <= r (closed).
Graph neighborhood_graph(const FiniteMetricSpace& x, const Rational& r, bool closed);

/// Faces are subsets of one ball B(a, r) or B[a, r]. Built from the balls and
/// as the closed neighborhood complex of the neighborhood graph; the two must
/// agree. The open variant needs r > 0, since B(a, 0) is empty while every
/// closed neighborhood contains its center.
SimplicialComplex cech_complex(const FiniteMetricSpace& x, const Rational& r, bool closed);
/// The ball construction alone.
SimplicialComplex cech_complex_from_balls(const FiniteMetricSpace& x, const Rational& r, bool closed);

/// Edges d > a (open) or d >= a (closed), for 0 < a <= 1/2.
Graph borsuk_graph(const CircleSample& c, const Rational& a, bool closed);

/// Random metric for tests: shortest-path closure of random positive
/// rational weights on the complete graph.
FiniteMetricSpace random_metric(int n, std::uint64_t seed);

}  // namespace cnc
