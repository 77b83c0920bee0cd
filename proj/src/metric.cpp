#include "cnc/metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnc {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

std::string format_rational(const Rational& r) {
  const BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::vector<Rational>> dist) : dist_(std::move(dist)) {
  const std::size_t n = dist_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i].size() != n) throw std::invalid_argument("metric: matrix is not square");
    if (dist_[i][i] != 0) throw std::invalid_argument("metric: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (dist_[i][j] != dist_[j][i]) throw std::invalid_argument("metric: not symmetric");
      if (i != j && dist_[i][j] <= 0) throw std::invalid_argument("metric: distinct points at distance 0");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist_[i][k] > dist_[i][j] + dist_[j][k]) throw std::invalid_argument("metric: triangle inequality fails");
}

CircleSample circle_sample(int n) {
  if (n < 1) throw std::invalid_argument("circle_sample: n must be positive");
  CircleSample c;
  for (int i = 0; i < n; ++i) c.angles.emplace_back(i, n);
  return c;
}

FiniteMetricSpace circle_metric(const CircleSample& c) {
  for (std::size_t i = 0; i < c.angles.size(); ++i) {
    if (c.angles[i] < 0 || c.angles[i] >= 1) throw std::invalid_argument("circle: angle outside [0, 1)");
    if (i > 0 && c.angles[i - 1] >= c.angles[i]) throw std::invalid_argument("circle: angles not sorted and distinct");
  }
  const std::size_t n = c.angles.size();
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational diff = abs(c.angles[i] - c.angles[j]);
      d[i][j] = std::min(diff, Rational(1) - diff);
    }
  return FiniteMetricSpace(std::move(d));
}

Graph neighborhood_graph(const FiniteMetricSpace& x, const Rational& r, bool closed) {
  if (r < 0) throw std::invalid_argument("neighborhood_graph: negative radius");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) {
      const Rational& d = x.distance(i, j);
      if (closed ? d <= r : d < r) edges.emplace_back(i, j);
    }
  return Graph(x.size(), edges);
}

SimplicialComplex cech_complex_from_balls(const FiniteMetricSpace& x, const Rational& r, bool closed) {
  if (r < 0) throw std::invalid_argument("cech_complex: negative radius");
  if (!closed && r == 0) throw std::invalid_argument("cech_complex: open balls need a positive radius");
  std::vector<int> ground(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) ground[static_cast<std::size_t>(i)] = i;
  std::vector<Simplex> balls;
  for (int a = 0; a < x.size(); ++a) {
    Simplex ball;
    for (int y = 0; y < x.size(); ++y)
      if (closed ? x.distance(a, y) <= r : x.distance(a, y) < r) ball.push_back(y);
    balls.push_back(std::move(ball));
  }
  return SimplicialComplex::from_generators(ground, std::move(balls));
}

SimplicialComplex cech_complex(const FiniteMetricSpace& x, const Rational& r, bool closed) {
  auto direct = cech_complex_from_balls(x, r, closed);
  auto via_graph = closed_neighborhood_complex(neighborhood_graph(x, r, closed), 1);
  if (!(direct == via_graph)) throw std::logic_error("cech_complex: ball and neighborhood constructions disagree");
  return direct;
}

Graph borsuk_graph(const CircleSample& c, const Rational& a, bool closed) {
  if (a <= 0 || a > Rational(1, 2)) throw std::invalid_argument("borsuk_graph: need 0 < a <= 1/2");
  const auto x = circle_metric(c);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) {
      const Rational& d = x.distance(i, j);
      if (closed ? d >= a : d > a) edges.emplace_back(i, j);
    }
  return Graph(x.size(), edges);
}

FiniteMetricSpace random_metric(int n, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t m = static_cast<std::size_t>(n);
  std::vector<std::vector<Rational>> d(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      // Small denominators make ties with the radius likely, which is the point.
      const auto num = static_cast<long long>(rng.below(12)) + 1;
      const auto den = static_cast<long long>(rng.below(4)) + 1;
      d[i][j] = d[j][i] = Rational(num, den);
    }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rational via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
  return FiniteMetricSpace(std::move(d));
}

}  // namespace cnc
