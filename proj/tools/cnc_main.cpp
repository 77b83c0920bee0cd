#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cnc/complex.hpp"
#include "cnc/directed.hpp"
#include "cnc/homology.hpp"
#include "cnc/hypergraph.hpp"
#include "cnc/json_io.hpp"
#include "cnc/kpath.hpp"
#include "cnc/metric.hpp"
#include "cnc/presentation.hpp"
#include "cnc/verify.hpp"

using namespace cnc;

namespace {

constexpr int kOk = 0;
constexpr int kInconclusive = 2;
constexpr int kUsage = 3;

Json read_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_json(text);
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

VertexList parse_vertex_list(const std::string& text) {
  VertexList out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + item + "' in '" + text + "'");
    }
    if (used != item.size()) throw InputError("bad vertex '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty vertex list");
  return out;
}

const Graph& need_graph(const GeneratedGraph& g, const std::string& what) {
  if (!g.graph) throw InputError(what + " needs an undirected graph");
  return *g.graph;
}
const Digraph& need_digraph(const GeneratedGraph& g, const std::string& what) {
  if (!g.digraph) throw InputError(what + " needs a digraph");
  return *g.digraph;
}

FieldSpec parse_field(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  try {
    return FieldSpec::modulo(static_cast<std::uint32_t>(std::stoul(s)));
  } catch (const std::invalid_argument&) {
    throw InputError("field must be Z, Q or a prime, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighborhood complexes: construction, exact homology and verification"};
  app.require_subcommand(1);
  int result = kOk;

  // gen
  std::string family;
  std::vector<long long> params;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a graph or digraph family as JSON");
  gen->add_option("family", family,
                  "complete N | edgeless N | path N | cycle N | hypercube D | rook M N | gnp N NUM DEN | "
                  "forest N | random-digraph N NUM DEN | x1 | x2 | x2-window M")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", gen_seed, "Seed for random families")->capture_default_str();
  gen->callback([&] {
    const auto g = generate(family, params, gen_seed);
    emit(g.graph ? to_json(*g.graph) : to_json(*g.digraph));
  });

  // complex
  std::string kind, complex_in;
  int k = 1;
  auto* cx = app.add_subcommand("complex", "Build a complex from graph JSON");
  cx->add_option("kind", kind,
                 "closed-nbhd | open-nbhd | independence | clique | hypergraph-independence | dominance | "
                 "right-closed-nbhd | left-closed-nbhd")
      ->required()
      ->check(CLI::IsMember({"closed-nbhd", "open-nbhd", "independence", "clique", "hypergraph-independence",
                             "dominance", "right-closed-nbhd", "left-closed-nbhd"}));
  cx->add_option("-k", k, "Neighborhood radius")->capture_default_str()->check(CLI::PositiveNumber);
  cx->add_option("-i,--input", complex_in, "Input file (default stdin)");
  cx->callback([&] {
    const auto j = read_json(complex_in);
    if (kind == "hypergraph-independence" && j.contains("hyperedges")) {
      emit(to_json(independence_complex_hyper(hypergraph_from_json(j))));
      return;
    }
    const auto g = graph_from_json(j);
    if (kind == "closed-nbhd") emit(to_json(closed_neighborhood_complex(need_graph(g, kind), k)));
    else if (kind == "open-nbhd") emit(to_json(open_neighborhood_complex(need_graph(g, kind))));
    else if (kind == "independence") emit(to_json(independence_complex(need_graph(g, kind))));
    else if (kind == "clique") emit(to_json(clique_complex(need_graph(g, kind))));
    else if (kind == "hypergraph-independence")
      emit(to_json(independence_complex_hyper(neighborhood_hypergraph(need_graph(g, kind)))));
    else if (kind == "dominance") emit(to_json(dominance_complex(need_graph(g, kind))));
    else if (kind == "right-closed-nbhd") emit(to_json(right_closed_nbhd_complex(need_digraph(g, kind), k)));
    else emit(to_json(left_closed_nbhd_complex(need_digraph(g, kind), k)));
  });

  // dual
  std::string dual_in;
  auto* dual = app.add_subcommand("dual", "Alexander dual of a complex over its ground set");
  dual->add_option("-i,--input", dual_in, "Input file (default stdin)");
  dual->callback([&] { emit(to_json(alexander_dual(complex_from_json(read_json(dual_in))))); });

  // homology
  std::string hom_in, field = "Z";
  bool hom_json = false;
  auto* hom = app.add_subcommand("homology", "Reduced homology of a complex");
  hom->add_option("-i,--input", hom_in, "Input file (default stdin)");
  hom->add_option("--field", field, "Z (integers), Q, or a prime p")->capture_default_str();
  hom->add_flag("--json", hom_json, "Print homology JSON instead of a table");
  hom->callback([&] {
    const auto c = complex_from_json(read_json(hom_in));
    if (field == "Z") {
      const auto h = reduced_homology_z(c);
      if (hom_json) emit(to_json(h));
      else std::cout << h.to_string();
      return;
    }
    const auto betti = betti_over_field(c, parse_field(field));
    HomologyResult h;
    for (std::size_t i = 0; i < betti.size(); ++i) h.set(static_cast<int>(i) - 1, {betti[i], {}});
    if (hom_json) emit(to_json(h));
    else std::cout << h.to_string();
  });

  // pi1
  std::string pi_in;
  int base = -1;
  std::size_t budget = kDefaultTietzeBudget;
  bool pi_json = false;
  auto* pi = app.add_subcommand("pi1", "Edge-path presentation, abelianization and Tietze simplification");
  pi->add_option("-i,--input", pi_in, "Input file (default stdin)");
  pi->add_option("--base", base, "Base vertex (default: smallest vertex)");
  pi->add_option("--budget", budget, "Tietze step budget")->capture_default_str();
  pi->add_flag("--json", pi_json, "Print JSON");
  pi->callback([&] {
    const auto c = complex_from_json(read_json(pi_in));
    const auto verts = c.vertices();
    if (verts.empty()) throw InputError("complex has no vertices");
    const auto p = edge_path_presentation(c, base < 0 ? verts.front() : base);
    const auto ab = abelianization_invariants(p);
    const auto t = tietze_simplify(p, budget);
    Json torsion = Json::array();
    for (const auto& x : ab.torsion) torsion.push_back(x.str());
    if (pi_json) {
      emit(Json{{"presentation", to_json(p)},
                {"abelianization", {{"free_rank", ab.free_rank}, {"torsion", torsion}}},
                {"tietze", {{"certificate", t.trivial ? "trivial" : "inconclusive"},
                            {"steps", t.steps},
                            {"presentation", to_json(t.presentation)}}}});
    } else {
      std::cout << "presentation " << to_json(p).dump() << "\n"
                << "abelianization rank " << ab.free_rank << " torsion " << torsion.dump() << "\n"
                << "tietze " << (t.trivial ? "trivial" : "inconclusive") << " after " << t.steps << " steps "
                << to_json(t.presentation).dump() << "\n";
    }
  });

  // kpath-equiv
  std::string graph_file, loop_text, loop2_text;
  int kp = 2, max_len = 8;
  std::size_t max_states = 100000;
  auto* kpe = app.add_subcommand("kpath-equiv", "Bounded search for a k-path equivalence between two paths");
  kpe->add_option("--graph", graph_file, "Graph JSON file")->required();
  kpe->add_option("-k", kp, "Move parameter k of the (B)_k rewrites")->capture_default_str()->check(CLI::PositiveNumber);
  kpe->add_option("--loop", loop_text, "First path, comma separated")->required();
  kpe->add_option("--loop2", loop2_text, "Second path, comma separated")->required();
  kpe->add_option("--max-len", max_len, "Longest path explored")->capture_default_str();
  kpe->add_option("--max-states", max_states, "State budget")->capture_default_str();
  kpe->callback([&] {
    const auto g = graph_from_json(read_json(graph_file));
    const auto& graph = need_graph(g, "kpath-equiv");
    const auto a = parse_vertex_list(loop_text), b = parse_vertex_list(loop2_text);
    if (!is_graph_path(graph, a) || !is_graph_path(graph, b)) throw InputError("not a path in the graph");
    const auto r = bounded_equivalence_graph(graph, a, b, kp, max_len, max_states);
    emit(Json{{"equivalent", r.equivalent}, {"states", r.states}, {"witness", r.witness}});
    result = r.equivalent ? kOk : kInconclusive;
  });

  // metric
  std::string metric_kind;
  int metric_n = 4;
  std::uint64_t metric_seed = 1;
  auto* met = app.add_subcommand("metric", "Emit a finite metric space as JSON");
  met->add_option("kind", metric_kind, "circle | random")->required()->check(CLI::IsMember({"circle", "random"}));
  met->add_option("-n", metric_n, "Number of points")->capture_default_str()->check(CLI::PositiveNumber);
  met->add_option("--seed", metric_seed, "Seed for random metrics")->capture_default_str();
  met->callback([&] {
    emit(to_json(metric_kind == "circle" ? circle_metric(circle_sample(metric_n)) : random_metric(metric_n, metric_seed)));
  });

  // cech
  std::string cech_in, radius;
  bool closed = false;
  auto* cech = app.add_subcommand("cech", "Čech complex of a metric space at radius r");
  cech->add_option("-i,--input", cech_in, "Metric JSON file (default stdin)");
  cech->add_option("-r", radius, "Radius as p/q")->required();
  cech->add_flag("--closed", closed, "Closed balls (default open)");
  cech->callback([&] {
    const auto x = metric_from_json(read_json(cech_in));
    Rational r;
    try {
      r = parse_rational(radius);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    emit(to_json(cech_complex(x, r, closed)));
  });

  // verify
  std::string suite;
  std::uint64_t verify_seed = 1;
  std::size_t cases = 0;
  bool no_timing = false;
  auto* ver = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
  ver->add_option("suite", suite, "Suite id")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--seed", verify_seed, "Corpus seed")->capture_default_str();
  ver->add_option("--cases", cases, "Random cases (0 = suite default)")->capture_default_str();
  ver->add_flag("--no-timing", no_timing, "Omit the wall time field");
  ver->callback([&] {
    const auto report = run_suite(suite, verify_seed, cases);
    emit(to_json(report, !no_timing));
    result = report.exit_code();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return result;
}
