#include "cnc/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cnc/directed.hpp"
#include "cnc/kpath.hpp"

namespace cnc {

int VerifySuiteReport::exit_code() const {
  if (!failures.empty()) return 1;
  return inconclusive > 0 ? 2 : 0;
}

std::string describe(const HomologyResult& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int d = -1; d <= h.top_dimension(); ++d) {
    const auto& g = h.at(d);
    if (g.is_zero()) continue;
    os << (first ? "" : ", ") << d << ": ";
    first = false;
    bool plus = false;
    if (g.betti > 0) {
      os << "Z";
      if (g.betti > 1) os << "^" << g.betti;
      plus = true;
    }
    for (const auto& t : g.torsion) {
      os << (plus ? " + " : "") << "Z/" << t;
      plus = true;
    }
  }
  os << "}";
  return os.str();
}

namespace {

std::string list_text(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

std::string path_text(const VertexList& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

HomologyResult sphere(int d, std::int64_t copies = 1) {
  HomologyResult h;
  HomologyGroup g;
  g.betti = copies;
  h.set(d, g);
  return h;
}

// Accumulates one suite; each case runs under an exception guard.
class Suite {
 public:
  Suite(std::string id, std::uint64_t seed, bool allows_inconclusive) : rng_(seed) {
    report_.suite = std::move(id);
    report_.seed = seed;
    report_.allows_inconclusive = allows_inconclusive;
  }

  Rng& rng() { return rng_; }
  std::uint64_t draw_seed() { return rng_.next(); }

  void run(const std::string& descriptor, const std::function<void()>& body) {
    ++report_.cases;
    current_ = descriptor;
    try {
      body();
    } catch (const std::exception& e) {
      fail("no exception", std::string("exception: ") + e.what());
    }
  }

  void fail(std::string expected, std::string actual) {
    report_.failures.push_back({current_, std::move(expected), std::move(actual)});
  }
  void check(bool ok, const std::string& expected, const std::string& actual) {
    if (!ok) fail(expected, actual);
  }
  void check_homology(const HomologyResult& expected, const HomologyResult& actual) {
    check(expected == actual, describe(expected), describe(actual));
  }
  void inconclusive() { ++report_.inconclusive; }
  void skip(const std::string& why) { report_.skipped.push_back(why); }

  VerifySuiteReport finish() { return std::move(report_); }

 private:
  Rng rng_;
  VerifySuiteReport report_;
  std::string current_;
};

std::string graph_text(const Graph& g) { return to_json(g).dump(); }

Graph random_graph(Suite& s, int max_n, int min_n = 1) {
  const int n = min_n + static_cast<int>(s.rng().below(static_cast<std::uint64_t>(max_n - min_n + 1)));
  const auto num = 1 + s.rng().below(3);
  return families::erdos_renyi(n, num, 4, s.draw_seed());
}

// Every labeled graph on at most five vertices, then random graphs on at
// most eight.
void small_graph_corpus(Suite& s, std::size_t random_cases, const std::function<void(const Graph&)>& check) {
  for (int n = 0; n <= 5; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = graph_from_code(n, code);
      s.run("n=" + std::to_string(n) + " code=" + std::to_string(code), [&] { check(g); });
    }
  }
  for (std::size_t i = 0; i < random_cases; ++i) {
    const Graph g = random_graph(s, 8);
    s.run("random " + graph_text(g), [&] { check(g); });
  }
}

void suite_thm_hypergraph(Suite& s, std::size_t cases) {
  small_graph_corpus(s, cases ? cases : 200, [&](const Graph& g) {
    const auto lhs = alexander_dual(independence_complex_hyper(neighborhood_hypergraph(g)));
    const auto rhs = closed_neighborhood_complex(complement(g), 1);
    s.check(lhs == rhs, to_json(rhs).dump(), to_json(lhs).dump());
  });
}

void suite_thm_dominance(Suite& s, std::size_t cases) {
  small_graph_corpus(s, cases ? cases : 200, [&](const Graph& g) {
    const auto lhs = alexander_dual(dominance_complex(g));
    const auto rhs = open_neighborhood_complex(complement(g));
    s.check(lhs == rhs, to_json(rhs).dump(), to_json(lhs).dump());
  });
}

// H̃_d(ℐ(K₂ × G)) against H̃_{d-1}(𝒩[Ḡ]).
void check_double_cover_shift(Suite& s, const Graph& g) {
  const auto lhs = reduced_homology_z(independence_complex(double_cover(g)));
  const auto rhs = reduced_homology_z(closed_neighborhood_complex(complement(g), 1)).shifted(1);
  s.check_homology(rhs, lhs);
}

void suite_thm_a(Suite& s, std::size_t cases) {
  const std::size_t n = cases ? cases : 100;
  for (std::size_t i = 0; i < n; ++i) {
    const Graph g = random_graph(s, 7);
    s.run("random " + graph_text(g), [&] { check_double_cover_shift(s, g); });
  }
}

void suite_borsuk(Suite& s, std::size_t) {
  const Rational radii[] = {Rational(1, 4), Rational(3, 8), Rational(1, 2)};
  for (int n = 1; n <= 12; ++n)
    for (const auto& a : radii)
      for (bool closed : {true, false}) {
        const std::string label = "n=" + std::to_string(n) + " a=" + format_rational(a) + (closed ? " closed" : " open");
        s.run(label, [&] { check_double_cover_shift(s, borsuk_graph(circle_sample(n), a, closed)); });
      }
}

void suite_cor_a(Suite& s, std::size_t cases) {
  const std::size_t count = cases ? cases : 100;
  for (std::size_t i = 0; i < count; ++i) {
    // A random bipartite graph; G is its complement.
    const int n = 1 + static_cast<int>(s.rng().below(7));
    std::vector<int> side(static_cast<std::size_t>(n));
    for (auto& x : side) x = static_cast<int>(s.rng().below(2));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && s.rng().chance(1, 2))
          edges.emplace_back(u, v);
    const Graph g = complement(Graph(n, edges));
    s.run("complement of bipartite " + graph_text(Graph(n, edges)), [&] {
      const auto lhs = reduced_homology_z(suspension(closed_neighborhood_complex(g, 1)));
      const auto x = clique_complex(g);
      const auto rhs = reduced_homology_z(join(x, x));
      s.check_homology(rhs, lhs);
    });
  }
}

SimplicialComplex random_complex(Suite& s, int max_ground) {
  const int m = 1 + static_cast<int>(s.rng().below(static_cast<std::uint64_t>(max_ground)));
  std::vector<int> ground(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) ground[static_cast<std::size_t>(i)] = i;
  const int gens = 1 + static_cast<int>(s.rng().below(6));
  std::vector<Simplex> generators;
  for (int j = 0; j < gens; ++j) {
    Simplex f;
    for (int i = 0; i < m; ++i)
      if (s.rng().chance(1, 2)) f.push_back(i);
    generators.push_back(std::move(f));
  }
  return SimplicialComplex::from_generators(ground, std::move(generators));
}

void suite_alexander(Suite& s, std::size_t cases) {
  const std::size_t count = cases ? cases : 200;
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::modulo(2), FieldSpec::modulo(3)};
  // Extreme complexes are logged and redrawn, so `count` complexes are tested.
  for (std::size_t tested = 0; tested < count;) {
    const auto k = random_complex(s, 7);
    const auto dual = alexander_dual(k);
    if (k.is_void() || dual.is_void()) {
      s.skip("extreme complex " + to_json(k).dump());
      continue;
    }
    ++tested;
    s.run(to_json(k).dump(), [&] {
      const int x = static_cast<int>(k.ground().size());
      for (const auto& f : fields) {
        const auto bk = betti_over_field(k, f);
        const auto bd = betti_over_field(dual, f);
        std::vector<std::int64_t> expected, actual;
        for (int d = -1; d <= x; ++d) {
          expected.push_back(betti_at(bk, x - d - 3));
          actual.push_back(betti_at(bd, d));
        }
        s.check(expected == actual, "p=" + std::to_string(f.prime) + " " + list_text(expected), list_text(actual));
      }
    });
  }
}

void suite_wedge_k2kn(Suite& s, std::size_t) {
  for (int n = 2; n <= 7; ++n)
    s.run("n=" + std::to_string(n), [&] {
      const auto h = reduced_homology_z(independence_complex(double_cover(families::complete(n))));
      s.check_homology(sphere(1, n - 1), h);
    });
}

void suite_cartesian(Suite& s, std::size_t) {
  const std::pair<int, int> sizes[] = {{2, 2}, {2, 3}, {3, 3}, {3, 4}};
  for (const auto& [m, n] : sizes) {
    s.run("m=" + std::to_string(m) + " n=" + std::to_string(n), [&, m = m, n = n] {
      const auto k = closed_neighborhood_complex(families::rook(m, n), 1);
      const std::int64_t f = static_cast<std::int64_t>(n - 1) * (m - 1) * (m * n - 2) / 2;
      s.check_homology(sphere(2, f), reduced_homology_z(k));
      if (m <= 3 && n <= 3) {
        const auto t = tietze_simplify(edge_path_presentation(k, 0));
        s.check(t.trivial, "trivial pi1 certificate",
                "inconclusive with " + std::to_string(t.presentation.generators) + " generators");
      }
    });
  }
}

void suite_simply_connected(Suite& s, std::size_t) {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 3; ++n)
      s.run("m=" + std::to_string(m) + " n=" + std::to_string(n), [&] {
        const auto k = closed_neighborhood_complex(families::rook(m, n), 1);
        const auto p = edge_path_presentation(k, 0);
        const auto ab = abelianization_invariants(p);
        s.check(ab.free_rank == 0 && ab.torsion.empty(), "trivial abelianization",
                "rank " + std::to_string(ab.free_rank) + " with " + std::to_string(ab.torsion.size()) + " torsion factors");
        if (!tietze_simplify(p).trivial) s.inconclusive();
      });
}

void suite_forest(Suite& s, std::size_t cases) {
  const std::size_t count = cases ? cases : 200;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(s.rng().below(12));
    const Graph f = families::random_forest(n, s.draw_seed());
    s.run(graph_text(f), [&] {
      const auto h = reduced_homology_z(independence_complex_hyper(neighborhood_hypergraph(f)));
      const int dim = n - 2 * domination_number(f) - 1;
      const bool sphere_ok = dim >= -1 && h == sphere(dim);
      s.check(h.is_zero() || sphere_ok, "zero or Z in dimension " + std::to_string(dim), describe(h));
      const auto replay = forest_sphere_dimension(f);
      const auto replay_h = replay.contractible ? HomologyResult() : sphere(replay.dimension);
      s.check(replay_h == h, "replay " + describe(replay_h), describe(h));
    });
  }
}

void suite_cech(Suite& s, std::size_t cases) {
  const std::size_t count = cases ? cases : 100;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(s.rng().below(8));
    const auto x = random_metric(n, s.draw_seed());
    const Rational r(static_cast<long long>(1 + s.rng().below(16)), static_cast<long long>(1 + s.rng().below(4)));
    for (bool closed : {true, false})
      s.run("metric " + to_json(x).dump() + " r=" + format_rational(r) + (closed ? " closed" : " open"), [&] {
        const auto balls = cech_complex_from_balls(x, r, closed);
        const auto via = closed_neighborhood_complex(neighborhood_graph(x, r, closed), 1);
        s.check(balls == via, to_json(via).dump(), to_json(balls).dump());
      });
  }
  for (int n = 4; n <= 12; ++n)
    s.run("circle n=" + std::to_string(n) + " closed r=1/" + std::to_string(n), [&] {
      const auto k = cech_complex(circle_metric(circle_sample(n)), Rational(1, n), true);
      s.check_homology(sphere(1), reduced_homology_z(k));
    });
}

void suite_dowker(Suite& s, std::size_t cases) {
  // Shapes of the X1 complexes.
  s.run("x1 shapes", [&] {
    const auto x = families::x1();
    const auto right = right_closed_nbhd_complex(x, 1);
    const auto left = left_closed_nbhd_complex(x, 1);
    const auto interval = SimplicialComplex::from_generators({0, 1, 2}, {{0, 1}, {1, 2}});
    const auto triangle = SimplicialComplex::full_simplex({0, 1, 2});
    s.check(right == interval, to_json(interval).dump(), to_json(right).dump());
    s.check(left == triangle, to_json(triangle).dump(), to_json(left).dump());
    s.check(!(right == left), "right and left complexes differ", "equal");
    s.check_homology(HomologyResult(), reduced_homology_z(right));
  });
  for (int k = 1; k <= 2; ++k)
    s.run("x2 k=" + std::to_string(k), [&] {
      const auto x = families::x2();
      for (const auto& c : {right_closed_nbhd_complex(x, k), left_closed_nbhd_complex(x, k)}) {
        s.check_homology(HomologyResult(), reduced_homology_z(c));
        const auto t = tietze_simplify(edge_path_presentation(c, 0));
        s.check(t.trivial, "trivial pi1 certificate", "inconclusive");
      }
    });

  auto dowker = [&](const Digraph& x, int k) {
    const auto r = reduced_homology_z(right_closed_nbhd_complex(x, k));
    const auto l = reduced_homology_z(left_closed_nbhd_complex(x, k));
    s.check_homology(r, l);
  };
  for (int k = 1; k <= 2; ++k) {
    s.run("x1 k=" + std::to_string(k), [&] { dowker(families::x1(), k); });
    s.run("x2 dowker k=" + std::to_string(k), [&] { dowker(families::x2(), k); });
    for (int m = 1; m <= 3; ++m)
      s.run("x2-window m=" + std::to_string(m) + " k=" + std::to_string(k), [&] { dowker(families::x2_window(m), k); });
  }
  const std::size_t count = cases ? cases : 100;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(s.rng().below(6));
    const auto num = 1 + s.rng().below(3);
    const auto x = families::random_digraph(n, num, 4, s.draw_seed());
    for (int k = 1; k <= 2; ++k)
      s.run("random " + to_json(x).dump() + " k=" + std::to_string(k), [&] { dowker(x, k); });
  }
}

// Loops at v of length exactly len, stationary steps included.
void loops_at(const Graph& g, Vertex v, int len, std::vector<GraphPath>& out) {
  GraphPath p{v};
  auto extend = [&](auto&& self) -> void {
    const int steps = static_cast<int>(p.size()) - 1;
    if (steps == len) {
      if (p.back() == v) out.push_back(p);
      return;
    }
    const auto d = distances_from(g, v);
    VertexList next{p.back()};
    for (Vertex w : g.neighbors(p.back())) next.push_back(w);
    for (Vertex w : next) {
      if (d[static_cast<std::size_t>(w)] > len - steps - 1) continue;
      p.push_back(w);
      self(self);
      p.pop_back();
    }
  };
  extend(extend);
}

void suite_loop_round_trip(Suite& s, std::size_t) {
  const std::pair<const char*, Graph> graphs[] = {
      {"K3", families::complete(3)}, {"C4", families::cycle(4)}, {"K4", families::complete(4)}};
  const int k = 1;
  for (const auto& [name, g] : graphs) {
    std::vector<GraphPath> loops;
    for (int len = 0; len <= 6; ++len) loops_at(g, 0, len, loops);
    for (const auto& loop : loops)
      s.run(std::string(name) + " loop " + path_text(loop), [&, &g = g] {
        const auto image = phi_map(g, psi_map(g, loop, k), k);
        const int max_len = static_cast<int>(std::max(loop.size(), image.size())) - 1 + 2;
        const auto r = bounded_equivalence_graph(g, image, loop, 2 * k, max_len, 200000);
        if (!r.equivalent) s.inconclusive();
      });
  }
  s.run("C5 generator loop", [&] {
    const Graph c5 = families::cycle(5);
    const GraphPath loop{0, 1, 2, 3, 4, 0};
    const auto r = bounded_equivalence_graph(c5, loop, {0}, 2 * k, 7, 200000);
    s.check(!r.equivalent, "inconclusive", "witness of length " + std::to_string(r.witness.size()));
  });
}

void suite_nagel_reiner(Suite& s, std::size_t cases) {
  const std::size_t count = cases ? cases : 200;
  for (std::size_t i = 0; i < count; ++i) {
    const int nx = 1 + static_cast<int>(s.rng().below(5));
    const int ny = 1 + static_cast<int>(s.rng().below(5));
    std::vector<int> xs, ys;
    for (int a = 0; a < nx; ++a) xs.push_back(a);
    for (int b = 0; b < ny; ++b) ys.push_back(nx + b);
    std::vector<Simplex> phi;
    for (int b = 0; b < ny; ++b) {
      Simplex f;
      for (int a = 0; a < nx; ++a)
        if (s.rng().chance(1, 2)) f.push_back(a);
      phi.push_back(std::move(f));
    }
    std::ostringstream label;
    label << "|X|=" << nx << " phi=";
    for (const auto& f : phi) label << path_text(f);
    s.run(label.str(), [&] {
      const auto pair = nagel_reiner_pair(xs, ys, phi);
      const auto lhs = reduced_homology_z(independence_complex(pair.graph));
      const auto rhs = reduced_homology_z(suspension(pair.complex));
      s.check_homology(rhs, lhs);
    });
  }
}

void suite_engine(Suite& s, std::size_t cases) {
  const std::size_t count = cases ? cases : 300;
  for (std::size_t i = 0; i < count; ++i) {
    const auto k = random_complex(s, 8);
    s.run("gf2 " + to_json(k).dump(), [&] {
      const auto sparse = betti_over_field(k, FieldSpec::modulo(2));
      const auto dense = brute_force_homology_gf2(k);
      s.check(sparse == dense, list_text(dense), list_text(sparse));
    });
  }
  for (std::size_t i = 0; i < count * 2 / 3; ++i) {
    // A spine of edges keeps the complex connected.
    const auto r = random_complex(s, 7);
    auto gens = r.facets();
    gens.push_back({0});
    for (std::size_t v = 0; v + 1 < r.ground().size(); ++v)
      gens.push_back({static_cast<int>(v), static_cast<int>(v) + 1});
    const auto k = SimplicialComplex::from_generators(r.ground(), gens);
    s.run("pi1 " + to_json(k).dump(), [&] {
      const auto ab = abelianization_invariants(edge_path_presentation(k, k.vertices().front()));
      const auto h = reduced_homology_z(k);
      s.check(ab.free_rank == h.betti(1) && ab.torsion == h.torsion(1), describe(h),
              "rank " + std::to_string(ab.free_rank) + " torsion " + std::to_string(ab.torsion.size()));
      const auto d = boundary_matrices(k);
      for (std::size_t j = 1; j < d.size(); ++j)
        s.check((d[j - 1] * d[j]).entries().empty(), "zero composite", "nonzero at " + std::to_string(j));
    });
  }
}

using SuiteFn = void (*)(Suite&, std::size_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"thm-hypergraph", suite_thm_hypergraph},
      {"thm-dominance", suite_thm_dominance},
      {"thm-a", suite_thm_a},
      {"cor-a", suite_cor_a},
      {"alexander", suite_alexander},
      {"wedge-k2kn", suite_wedge_k2kn},
      {"cartesian", suite_cartesian},
      {"simply-connected", suite_simply_connected},
      {"forest", suite_forest},
      {"cech", suite_cech},
      {"borsuk", suite_borsuk},
      {"dowker", suite_dowker},
      {"theorem-b", suite_loop_round_trip},
      {"nagel-reiner", suite_nagel_reiner},
      {"engine", suite_engine},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifySuiteReport run_suite(const std::string& id, std::uint64_t seed, std::size_t cases) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    const bool allows_inconclusive = id == "simply-connected" || id == "theorem-b";
    Suite suite(id, seed, allows_inconclusive);
    const auto start = std::chrono::steady_clock::now();
    fn(suite, cases);
    auto report = suite.finish();
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw std::invalid_argument("unknown suite '" + id + "'");
}

Json to_json(const VerifySuiteReport& r, bool with_timing) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"case", f.descriptor}, {"expected", f.expected}, {"actual", f.actual}});
  Json out{{"suite", r.suite},         {"seed", r.seed},
           {"cases", r.cases},         {"failures", failures},
           {"inconclusive", r.inconclusive}, {"skipped", r.skipped}};
  if (with_timing) out["wall_time_seconds"] = r.wall_seconds;
  return out;
}

}  // namespace cnc
