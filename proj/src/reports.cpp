#include "qmax/reports.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace qmax {

namespace {

using nlohmann::json;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json number_or_null(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

double double_or_nan(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

}  // namespace

std::string to_json(const BoundReport& r) {
  json j;
  j["n"] = r.n;
  j["e"] = r.e;
  j["min_degree"] = r.min_degree;
  j["max_degree"] = r.max_degree;
  j["k"] = r.k;
  j["q"] = number_or_null(r.q);
  j["merris_defined"] = r.merris_defined;
  j["merris_skipped_isolated"] = r.merris_skipped_isolated;
  j["merris"] = r.merris_defined ? json(r.merris) : json(nullptr);
  j["das"] = r.das;
  json limits = json::object();
  for (const auto& [p, e] : r.eg_path_limit) limits[std::to_string(p)] = e;
  j["eg_path_limit"] = limits;
  j["eg_cycle_limit"] = r.eg_cycle_limit;
  j["snk_lower"] = r.snk_lower;
  j["min_edges"] = r.min_edges;
  j["relations"] = {{"q_le_merris", r.relations.q_le_merris},
                    {"q_le_das", r.relations.q_le_das},
                    {"min_edges_applicable", r.relations.min_edges_applicable},
                    {"min_edges_ok", r.relations.min_edges_ok}};
  return j.dump();
}

std::string to_json(const VerificationReport& r) {
  json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["total_graphs"] = r.total_graphs;
  j["free_graphs"] = r.free_graphs;
  j["max_q"] = number_or_null(r.max_q);
  j["maximizer"] = r.maximizer;
  j["maximizer_is_snk"] = r.maximizer_is_snk;
  j["ties"] = r.ties;
  j["mode"] = r.mode;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  return j.dump();
}

BoundReport bound_report_from_json(const std::string& text) {
  json j = json::parse(text);
  BoundReport r;
  r.n = j.at("n").get<int>();
  r.e = j.at("e").get<long long>();
  r.min_degree = j.at("min_degree").get<int>();
  r.max_degree = j.at("max_degree").get<int>();
  r.k = j.at("k").get<int>();
  r.q = double_or_nan(j.at("q"));
  r.merris_defined = j.at("merris_defined").get<bool>();
  r.merris_skipped_isolated = j.at("merris_skipped_isolated").get<bool>();
  r.merris = j.at("merris").is_null() ? 0.0 : j.at("merris").get<double>();
  r.das = j.at("das").get<double>();
  for (const auto& [key, val] : j.at("eg_path_limit").items())
    r.eg_path_limit[std::stoi(key)] = val.get<long long>();
  r.eg_cycle_limit = j.at("eg_cycle_limit").get<long long>();
  r.snk_lower = j.at("snk_lower").get<double>();
  r.min_edges = j.at("min_edges").get<long long>();
  const json& rel = j.at("relations");
  r.relations.q_le_merris = rel.at("q_le_merris").get<bool>();
  r.relations.q_le_das = rel.at("q_le_das").get<bool>();
  r.relations.min_edges_applicable = rel.at("min_edges_applicable").get<bool>();
  r.relations.min_edges_ok = rel.at("min_edges_ok").get<bool>();
  return r;
}

VerificationReport verification_report_from_json(const std::string& text) {
  json j = json::parse(text);
  VerificationReport r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.total_graphs = j.at("total_graphs").get<std::uint64_t>();
  r.free_graphs = j.at("free_graphs").get<std::uint64_t>();
  r.max_q = double_or_nan(j.at("max_q"));
  r.maximizer = j.at("maximizer").get<std::string>();
  r.maximizer_is_snk = j.at("maximizer_is_snk").get<bool>();
  r.ties = j.at("ties").get<std::vector<std::string>>();
  r.mode = j.at("mode").get<std::string>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

std::string to_csv(const BoundReport& r) {
  // the two path limits are keyed by the forbidden orders 2k and 2k+2
  std::ostringstream out;
  out << "n,e,min_degree,max_degree,k,q,merris_defined,merris_skipped_isolated,merris,das,"
         "eg_path_limit_2k,eg_path_limit_2k_plus_2,eg_cycle_limit,snk_lower,min_edges,"
         "q_le_merris,q_le_das,min_edges_applicable,min_edges_ok\n";
  out << r.n << ',' << r.e << ',' << r.min_degree << ',' << r.max_degree << ',' << r.k << ','
      << fmt_double(r.q) << ',' << (r.merris_defined ? "true" : "false") << ','
      << (r.merris_skipped_isolated ? "true" : "false") << ','
      << (r.merris_defined ? fmt_double(r.merris) : std::string()) << ',' << fmt_double(r.das)
      << ',' << r.eg_path_limit.at(2 * r.k) << ',' << r.eg_path_limit.at(2 * r.k + 2) << ','
      << r.eg_cycle_limit << ',' << fmt_double(r.snk_lower) << ',' << r.min_edges << ','
      << (r.relations.q_le_merris ? "true" : "false") << ','
      << (r.relations.q_le_das ? "true" : "false") << ','
      << (r.relations.min_edges_applicable ? "true" : "false") << ','
      << (r.relations.min_edges_ok ? "true" : "false") << '\n';
  return out.str();
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "n,k,total_graphs,free_graphs,max_q,maximizer,maximizer_is_snk,ties,mode,seed\n";
  out << r.n << ',' << r.k << ',' << r.total_graphs << ',' << r.free_graphs << ','
      << (std::isnan(r.max_q) ? std::string() : fmt_double(r.max_q)) << ',' << r.maximizer << ','
      << (r.maximizer_is_snk ? "true" : "false") << ',';
  for (std::size_t i = 0; i < r.ties.size(); ++i) {
    if (i) out << ';';
    out << r.ties[i];
  }
  out << ',' << r.mode << ',';
  if (r.seed) out << *r.seed;
  out << '\n';
  return out.str();
}

}  // namespace qmax
