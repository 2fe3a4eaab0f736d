#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmax/bounds.hpp"
#include "qmax/detectors.hpp"
#include "qmax/families.hpp"
#include "qmax/graph.hpp"
#include "qmax/graph6.hpp"
#include "qmax/reports.hpp"
#include "qmax/spectra.hpp"
#include "qmax/structure.hpp"
#include "qmax/verify.hpp"

namespace {

using nlohmann::json;

std::string fmtg(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

qmax::Graph load_graph(const std::string& path) {
  if (path == "-") return qmax::read_graph_auto(std::cin);
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  return qmax::read_graph_auto(f);
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void emit_graph(const qmax::Graph& g, const std::string& format) {
  if (format == "g6")
    std::cout << qmax::write_graph6(g) << '\n';
  else if (format == "edges")
    std::cout << qmax::write_edge_list(g);
  else
    throw std::invalid_argument("unknown output format: " + format);
}

struct Options {
  std::string in = "-";
  std::string family;
  std::string format = "g6";
  std::string report_format = "json";
  std::string to = "g6";
  int n = -1;
  int k = -1;
  int t = -1;
  long long big_n = -1;
  int path_len = 0;
  int cycle_len = 0;
  int spectrum_max = -1;
  bool want_circumference = false;
  bool want_vector = false;
  bool dense = false;
  double tol = 1e-10;
  int max_iterations = 0;
  int jobs = 0;
  std::uint64_t iters = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> moves = {"add", "remove", "swap"};
  std::vector<int> parts;
};

int cmd_construct(const Options& o) {
  qmax::FamilySpec spec;
  std::map<std::string, qmax::Family> names = {
      {"complete", qmax::Family::complete}, {"empty", qmax::Family::empty},
      {"path", qmax::Family::path},         {"cycle", qmax::Family::cycle},
      {"snk", qmax::Family::snk},           {"snk_plus", qmax::Family::snk_plus},
      {"ltk", qmax::Family::ltk}};
  auto it = names.find(o.family);
  if (it == names.end()) throw std::invalid_argument("unknown family: " + o.family);
  spec.family = it->second;
  spec.n = o.n;
  spec.k = o.k;
  spec.t = o.t;
  qmax::Graph g = qmax::construct(spec);
  emit_graph(g, o.format);
  std::cerr << "family=" << o.family << " n=" << g.order() << " edges=" << g.edge_count()
            << '\n';
  return 0;
}

int cmd_qindex(const Options& o) {
  qmax::Graph g = load_graph(o.in);
  qmax::QResult r = o.dense ? qmax::q_index_dense(g) : qmax::q_index(g, o.tol, o.max_iterations);
  std::cout << fmtg(r.q) << '\n';
  if (o.want_vector) {
    for (std::size_t i = 0; i < r.vector.size(); ++i)
      std::cout << (i ? " " : "") << fmtg(r.vector[i]);
    std::cout << '\n';
  }
  std::cerr << "n=" << g.order() << " e=" << g.edge_count() << " iterations=" << r.iterations
            << " residual=" << fmtg(r.residual) << '\n';
  return 0;
}

int cmd_bounds(const Options& o) {
  qmax::Graph g = load_graph(o.in);
  qmax::BoundReport r = qmax::check_bounds(g, o.k, o.tol);
  if (o.report_format == "csv")
    std::cout << qmax::to_csv(r);
  else
    std::cout << qmax::to_json(r) << '\n';
  bool ok = r.relations.q_le_merris && r.relations.q_le_das && r.relations.min_edges_ok;
  std::cerr << "q=" << fmtg(r.q) << " relations=" << (ok ? "ok" : "violated") << '\n';
  return ok ? 0 : 1;
}

int cmd_free(const Options& o) {
  if (o.cycle_len < 3) throw std::invalid_argument("free: --cycle must be >= 3");
  qmax::Graph g = load_graph(o.in);
  auto w = qmax::has_cycle(g, o.cycle_len);
  json j;
  j["cycle_length"] = o.cycle_len;
  j["free"] = !w.has_value();
  if (w) j["witness"] = w->vertices;
  std::cout << j.dump() << '\n';
  std::cerr << (w ? "contains" : "free of") << " a cycle on " << o.cycle_len << " vertices\n";
  return w ? 1 : 0;
}

int cmd_detect(const Options& o) {
  qmax::Graph g = load_graph(o.in);
  int chosen = (o.path_len > 0) + (o.cycle_len > 0) + (o.spectrum_max >= 0) +
               (o.want_circumference ? 1 : 0);
  if (chosen != 1)
    throw std::invalid_argument(
        "detect: pass exactly one of --path, --cycle, --spectrum, --circumference");
  json j;
  int found = 0;
  if (o.path_len > 0) {
    auto w = qmax::has_path(g, o.path_len);
    j["kind"] = "path";
    j["order"] = o.path_len;
    j["present"] = w.has_value();
    if (w) j["vertices"] = w->vertices;
    found = w.has_value();
  } else if (o.cycle_len > 0) {
    auto w = qmax::has_cycle(g, o.cycle_len);
    j["kind"] = "cycle";
    j["length"] = o.cycle_len;
    j["present"] = w.has_value();
    if (w) j["vertices"] = w->vertices;
    found = w.has_value();
  } else if (o.spectrum_max >= 0) {
    j["max_length"] = o.spectrum_max;
    j["spectrum"] = qmax::cycle_spectrum(g, o.spectrum_max);
  } else {
    j["circumference"] = qmax::circumference(g);
  }
  std::cout << j.dump() << '\n';
  return found;
}

int cmd_peel(const Options& o) {
  if (o.k < 1) throw std::invalid_argument("peel: need --k >= 1");
  qmax::Graph g = load_graph(o.in);
  qmax::PeelTrace t = qmax::peel(g, o.k - 1);
  json j;
  j["k"] = o.k;
  j["threshold"] = o.k - 1;
  json removed = json::array();
  for (auto [v, d] : t.removed) removed.push_back({v, d});
  j["removed"] = removed;
  j["removed_count"] = t.removed.size();
  j["survivor"] = t.survivor;
  std::cout << j.dump() << '\n';
  std::cerr << "removed " << t.removed.size() << " of " << g.order() << " vertices\n";
  return 0;
}

int cmd_classify(const Options& o) {
  qmax::Graph g = load_graph(o.in);
  qmax::StructureClass c = qmax::classify(g, o.k);
  json j;
  if (auto* p = std::get_if<qmax::HasLongPath>(&c)) {
    j["class"] = "has_long_path";
    j["witness"] = p->witness;
  } else if (auto* l = std::get_if<qmax::IsLtk>(&c)) {
    j["class"] = "is_ltk";
    j["t"] = l->t;
    j["k"] = o.k;
  } else {
    j["class"] = "subgraph_of_snk";
    j["cover"] = std::get<qmax::SubgraphOfSnk>(c).cover;
  }
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_verify(const Options& o, bool have_in) {
  qmax::VerifyOutcome out;
  if (have_in) {
    std::istringstream ss(slurp(o.in));
    out = qmax::verify_stream(ss, o.k);
  } else {
    out = qmax::verify_exhaustive(o.n, o.k, o.jobs);
  }
  if (o.report_format == "csv")
    std::cout << qmax::to_csv(out.report);
  else
    std::cout << qmax::to_json(out.report) << '\n';
  for (const auto& v : out.violations) std::cerr << "violation: " << v << '\n';
  std::cerr << "examined " << out.report.total_graphs << " graphs, " << out.report.free_graphs
            << " passed the cycle constraint, max q " << fmtg(out.report.max_q) << '\n';
  return out.violations.empty() ? 0 : 1;
}

int cmd_search(const Options& o) {
  qmax::SearchConfig cfg;
  cfg.n = o.n;
  cfg.k = o.k;
  cfg.iterations = o.iters;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  cfg.moves.clear();
  for (const auto& m : o.moves) {
    if (m == "add")
      cfg.moves.push_back(qmax::Move::add);
    else if (m == "remove")
      cfg.moves.push_back(qmax::Move::remove);
    else if (m == "swap")
      cfg.moves.push_back(qmax::Move::swap);
    else
      throw std::invalid_argument("unknown move kind: " + m);
  }
  qmax::SearchOutcome out = qmax::local_search(cfg);
  std::cout << qmax::to_json(out.report) << '\n';
  if (out.finding) {
    json j;
    j["finding"] = {{"graph6", out.finding_graph6},
                    {"max_q", out.report.max_q},
                    {"predicted", qmax::snk_q_closed_form(o.n, o.k)}};
    std::cout << j.dump() << '\n';
  }
  std::cerr << "best q " << fmtg(out.report.max_q) << " after " << out.best_q_trace.size()
            << " proposals" << (out.finding ? " (exceeds the predicted maximum)" : "") << '\n';
  return out.finding ? 1 : 0;
}

json harness_json(const qmax::HarnessRecord& r, const std::string& name) {
  json j;
  j["harness"] = name;
  j["k"] = r.k;
  j["n"] = r.n;
  j["parts"] = r.parts;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["holds"] = r.holds;
  return j;
}

int cmd_harness_lemma8(const Options& o) {
  qmax::HarnessRecord r = qmax::lemma8_harness(o.k, o.big_n, o.t);
  std::cout << harness_json(r, "lemma8").dump() << '\n';
  std::cerr << "lhs=" << fmtg(r.lhs) << " rhs=" << fmtg(r.rhs) << " margin=" << fmtg(r.margin)
            << '\n';
  return r.holds ? 0 : 1;
}

int cmd_harness_lemma9(const Options& o) {
  qmax::HarnessRecord r = qmax::lemma9_harness(o.k, o.parts);
  std::cout << harness_json(r, "lemma9").dump() << '\n';
  std::cerr << "lhs=" << fmtg(r.lhs) << " rhs=" << fmtg(r.rhs) << " margin=" << fmtg(r.margin)
            << '\n';
  return r.holds ? 0 : 1;
}

int cmd_harness_theorem1(const Options& o) {
  qmax::Graph g = load_graph(o.in);
  qmax::CycleSpanRecord r = qmax::theorem1_harness(g, o.k);
  json j;
  j["harness"] = "theorem1";
  j["n"] = r.n;
  j["k"] = r.k;
  j["q"] = r.q;
  j["threshold"] = r.threshold;
  j["applicable"] = r.applicable;
  j["asserted"] = r.asserted;
  j["spectrum"] = r.spectrum;
  j["missing"] = r.missing;
  j["ok"] = r.ok;
  std::cout << j.dump() << '\n';
  std::cerr << (r.asserted ? "asserted" : r.applicable ? "applicable (small order)" : "not applicable")
            << (r.ok ? "" : ", missing cycle lengths") << '\n';
  return r.ok ? 0 : 1;
}

int cmd_convert(const Options& o) {
  qmax::Graph g = load_graph(o.in);
  emit_graph(g, o.to);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal graphs for forbidden odd cycles: constructions, q-index, bounds"};
  app.require_subcommand(1);
  Options o;

  CLI::App* construct = app.add_subcommand("construct", "build a named family member");
  construct->add_option("--family", o.family, "complete|empty|path|cycle|snk|snk_plus|ltk")
      ->required();
  construct->add_option("--n", o.n, "order");
  construct->add_option("--k", o.k, "family parameter k");
  construct->add_option("--t", o.t, "block count for ltk");
  construct->add_option("--format", o.format, "g6|edges (default g6)");

  CLI::App* qindex = app.add_subcommand("qindex", "largest signless laplacian eigenvalue");
  qindex->add_option("--in", o.in, "input file or - for stdin");
  qindex->add_option("--tol", o.tol, "residual tolerance (default 1e-10)");
  qindex->add_option("--max-iterations", o.max_iterations, "0 = 200 * order");
  qindex->add_flag("--vector", o.want_vector, "also print the eigenvector");
  qindex->add_flag("--dense", o.dense, "use the dense full-spectrum solver");

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate every bound on one graph");
  bounds->add_option("--in", o.in, "input file or - for stdin");
  bounds->add_option("--k", o.k, "parameter k")->required();
  bounds->add_option("--format", o.report_format, "json|csv (default json)");
  bounds->add_option("--tol", o.tol, "eigenvalue tolerance");

  CLI::App* free_cmd = app.add_subcommand("free", "test for a forbidden cycle length");
  free_cmd->add_option("--in", o.in, "input file or - for stdin");
  free_cmd->add_option("--cycle", o.cycle_len, "cycle length to test")->required();

  CLI::App* detect = app.add_subcommand("detect", "path/cycle search with witnesses");
  detect->add_option("--in", o.in, "input file or - for stdin");
  detect->add_option("--path", o.path_len, "path order to find");
  detect->add_option("--cycle", o.cycle_len, "cycle length to find");
  detect->add_option("--spectrum", o.spectrum_max, "list cycle lengths up to this cap");
  detect->add_flag("--circumference", o.want_circumference, "longest cycle length");

  CLI::App* peel_cmd = app.add_subcommand("peel", "remove low-degree vertices below k-1");
  peel_cmd->add_option("--in", o.in, "input file or - for stdin");
  peel_cmd->add_option("--k", o.k, "parameter k; threshold is k-1")->required();

  CLI::App* classify = app.add_subcommand("classify", "structural trichotomy for one graph");
  classify->add_option("--in", o.in, "input file or - for stdin");
  classify->add_option("--k", o.k, "parameter k")->required();

  CLI::App* verify = app.add_subcommand("verify", "maximize q over constraint-free graphs");
  verify->add_option("--n", o.n, "order for the exhaustive labeled scan");
  verify->add_option("--k", o.k, "parameter k")->required();
  CLI::Option* verify_ex = verify->add_flag("--exhaustive", "scan every labeled graph on n vertices");
  CLI::Option* verify_in =
      verify->add_option("--in", o.in, "graph6 stream to scan instead")->excludes(verify_ex);
  verify->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
  verify->add_option("--format", o.report_format, "json|csv (default json)");

  CLI::App* search = app.add_subcommand("search", "seeded stochastic hill climb");
  search->add_option("--n", o.n, "order")->required();
  search->add_option("--k", o.k, "parameter k")->required();
  search->add_option("--iters", o.iters, "proposals per start")->required();
  search->add_option("--restarts", o.restarts, "random restarts (default 0)");
  search->add_option("--seed", o.seed, "rng seed")->required();
  search->add_option("--moves", o.moves, "subset of add,remove,swap")->delimiter(',');

  CLI::App* harness = app.add_subcommand("harness", "inequality and cycle-span checks");
  harness->require_subcommand(1);
  CLI::App* lemma8 = harness->add_subcommand("lemma8", "attached-clique comparison");
  lemma8->add_option("--k", o.k)->required();
  lemma8->add_option("--n", o.big_n)->required();
  lemma8->add_option("--t", o.t)->required();
  CLI::App* lemma9 = harness->add_subcommand("lemma9", "multi-block comparison");
  lemma9->add_option("--k", o.k)->required();
  lemma9->add_option("--parts", o.parts, "comma-separated block orders")
      ->required()
      ->delimiter(',');
  CLI::App* theorem1 = harness->add_subcommand("theorem1", "cycle lengths under high q");
  theorem1->add_option("--in", o.in, "input file or - for stdin");
  theorem1->add_option("--k", o.k)->required();

  CLI::App* convert = app.add_subcommand("convert", "translate between graph formats");
  convert->add_option("--in", o.in, "input file or - for stdin");
  convert->add_option("--to", o.to, "g6|edges")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(construct)) return cmd_construct(o);
    if (app.got_subcommand(qindex)) return cmd_qindex(o);
    if (app.got_subcommand(bounds)) return cmd_bounds(o);
    if (app.got_subcommand(free_cmd)) return cmd_free(o);
    if (app.got_subcommand(detect)) return cmd_detect(o);
    if (app.got_subcommand(peel_cmd)) return cmd_peel(o);
    if (app.got_subcommand(classify)) return cmd_classify(o);
    if (app.got_subcommand(verify)) {
      if (!*verify_in && o.n < 0)
        throw std::invalid_argument("verify: pass --n for the exhaustive scan or --in for a stream");
      return cmd_verify(o, static_cast<bool>(*verify_in));
    }
    if (app.got_subcommand(search)) return cmd_search(o);
    if (app.got_subcommand(harness)) {
      if (harness->got_subcommand(lemma8)) return cmd_harness_lemma8(o);
      if (harness->got_subcommand(lemma9)) return cmd_harness_lemma9(o);
      return cmd_harness_theorem1(o);
    }
    if (app.got_subcommand(convert)) return cmd_convert(o);
  } catch (const qmax::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qmax::StructureError& e) {
    std::cerr << "structure violation: " << e.what() << '\n';
    return 1;
  } catch (const qmax::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
