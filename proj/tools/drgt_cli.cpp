#include "drgt/catalog.hpp"
#include "drgt/count_formulas.hpp"
#include "drgt/drg_verify.hpp"
#include "drgt/edge_partition.hpp"
#include "drgt/error.hpp"
#include "drgt/graph.hpp"
#include "drgt/homogeneity.hpp"
#include "drgt/report_json.hpp"
#include "drgt/search.hpp"
#include "drgt/spectrum.hpp"
#include "drgt/tight_edge.hpp"
#include "drgt/tightness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using drgt::Json;

int run_analyze(const std::string& array_text) {
  auto arr = drgt::IntersectionArray::parse(array_text);
  auto spec = drgt::spectrum(arr);
  auto rep = drgt::tightness_report(arr, spec);
  std::cout << drgt::report_json(arr, spec, rep).dump(2) << "\n";
  return 0;
}

// "p/q" stays exact; a decimal is converted to the exact fraction it denotes
// but taints the exactness marker of the output
drgt::Rational parse_flag_rational(const std::string& text, bool& tainted) {
  if (text.find('.') != std::string::npos) tainted = true;
  auto r = drgt::parse_rational(text);
  if (!r) drgt::fail(drgt::Errc::ParseError, "bad rational '" + text + "'");
  return *r;
}

int run_parametrize(const std::string& sigma_text, const std::string& epsilon_text) {
  bool tainted = false;
  std::vector<drgt::Rational> sigma;
  std::string tok;
  std::istringstream is(sigma_text);
  while (std::getline(is, tok, ',')) sigma.push_back(parse_flag_rational(tok, tainted));
  drgt::Rational eps = parse_flag_rational(epsilon_text, tainted);

  auto res = drgt::parametrize(sigma, eps);
  Json j;
  j["array"] = res.arr.str();
  j["integral"] = res.arr.integral;
  j["h"] = drgt::to_string(res.h);
  j["g"] = drgt::to_string(res.g);
  j["theta1"] = drgt::scalar_json(res.theta1);
  j["thetad"] = drgt::scalar_json(res.thetad);
  j["exact"] = !tainted;
  std::cout << j.dump(2) << "\n";
  return res.arr.integral ? 0 : 1;
}

drgt::Graph construct_from_spec(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon == std::string::npos ? text.size() : colon);
  std::vector<long> args;
  if (colon != std::string::npos) {
    std::istringstream is(text.substr(colon + 1));
    std::string tok;
    while (std::getline(is, tok, ',')) args.push_back(std::stol(tok));
  }
  auto need = [&](size_t n) {
    if (args.size() != n)
      drgt::fail(drgt::Errc::ParseError, name + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (name == "johnson") {
    need(2);
    return drgt::johnson_graph(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  if (name == "hypercube") {
    need(1);
    return drgt::hypercube_graph(static_cast<int>(args[0]));
  }
  if (name == "halved_cube") {
    need(1);
    return drgt::halved_cube_graph(static_cast<int>(args[0]));
  }
  if (name == "hamming") {
    need(2);
    return drgt::hamming_graph(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  if (name == "icosahedron") {
    need(0);
    return drgt::icosahedron_graph();
  }
  drgt::fail(drgt::Errc::ParseError, "unknown family '" + name + "'");
}

int run_verify_graph(const std::string& construct, const std::string& edge_file,
                     const std::string& export_file, bool homogeneous, bool formulas, bool strict,
                     bool force, long sample) {
  drgt::Graph g;
  if (!construct.empty())
    g = construct_from_spec(construct);
  else if (!edge_file.empty())
    g = drgt::load_graph_file(edge_file);
  else
    drgt::fail(drgt::Errc::ParseError, "need --construct or --edge-file");

  if (!export_file.empty()) {
    std::ofstream out(export_file);
    drgt::save_graph(g, out);
  }

  bool all_pass = true;
  Json j;
  j["n"] = g.n;
  j["m"] = g.edge_count();

  auto arr = drgt::verify_distance_regular(g, strict, force);
  j["distance_regular"] = true;
  j["array"] = arr.str();

  auto spec = drgt::spectrum(arr);
  auto rep = drgt::tightness_report(arr, spec);
  j["classification"] = drgt::classification_name(rep.classification);

  // f over every edge, against the eigenvalue bounds
  if (arr.a(1) != 0) {
    auto bounds = drgt::f_bounds(arr, spec);
    drgt::Rational fmin, fmax;
    bool first = true, in_bounds = true;
    for (int u = 0; u < g.n; ++u)
      for (int v : g.adj[u]) {
        if (u >= v) continue;
        auto part = drgt::edge_partition(g, arr, u, v);
        drgt::Rational f = drgt::compute_f(g, arr, part).f;
        if (first) {
          fmin = fmax = f;
          first = false;
        } else {
          fmin = std::min(fmin, f);
          fmax = std::max(fmax, f);
        }
        drgt::Scalar fs{f};
        if (bounds.first.definitely_less(fs) && bounds.second.definitely_less(fs))
          in_bounds = false;
        if (fs.definitely_less(bounds.first)) in_bounds = false;
      }
    j["f"] = Json{{"min", drgt::to_string(fmin)},
                  {"max", drgt::to_string(fmax)},
                  {"constant", fmin == fmax},
                  {"within_bounds", in_bounds},
                  {"bounds", Json::array({drgt::scalar_json(bounds.first),
                                          drgt::scalar_json(bounds.second)})}};
    all_pass = all_pass && in_bounds;

    int x = 0, y = g.adj[0][0];
    auto rank = drgt::tightness_rank(g, arr, spec, x, y);
    j["tightness_rank"] = Json{{"t", rank.t}, {"dim_MH", rank.dim_mh}};
  }

  if (homogeneous) {
    auto hom = drgt::check_one_homogeneous_all(g, arr, sample);
    j["homogeneous"] = Json{{"edges_checked", hom.edges_checked},
                            {"edges_failed", hom.edges_failed},
                            {"constants_uniform", hom.constants_uniform}};
    if (hom.sample) j["homogeneous"]["L_size"] = hom.sample->L.size();
    all_pass = all_pass && hom.edges_failed == 0;
  }

  if (formulas) {
    if (rep.classification != drgt::Classification::Tight)
      drgt::fail(drgt::Errc::NotTight, "--formulas requires a tight graph");
    int x = 0, y = g.adj[0][0];
    auto r1 = drgt::verify_count_formulas(g, arr, spec, 1, x, y);
    auto rd = drgt::verify_count_formulas(g, arr, spec, arr.d(), x, y);
    j["count_formulas"] = Json{{"checks_theta1", r1.checks},
                               {"checks_thetad", rd.checks},
                               {"max_deviation", drgt::to_string(
                                                     std::max(r1.max_deviation, rd.max_deviation))}};
    all_pass = all_pass && r1.ok() && rd.ok();
  }

  // brute-force local graph against the formula route
  auto local0 = drgt::local_graph(g, 0);
  try {
    auto srg = drgt::srg_parameters(local0);
    j["local_graph"] = Json{{"nu", srg.nu},
                            {"kappa", srg.kappa},
                            {"lambda", srg.lambda},
                            {"mu", srg.mu},
                            {"connected", srg.connected}};
    if (rep.local) {
      bool match = rep.local->nu.eq(drgt::Scalar(drgt::rat(srg.nu))) &&
                   rep.local->kappa.eq(drgt::Scalar(drgt::rat(srg.kappa))) &&
                   rep.local->lambda.eq(drgt::Scalar(drgt::rat(srg.lambda))) &&
                   rep.local->mu.eq(drgt::Scalar(drgt::rat(srg.mu)));
      j["local_graph"]["matches_formulas"] = match;
      all_pass = all_pass && match;
    }
  } catch (const drgt::Error& e) {
    j["local_graph"] = Json{{"strongly_regular", false}, {"witness", e.what()}};
    if (rep.classification == drgt::Classification::Tight) all_pass = false;
  }

  j["all_checks_passed"] = all_pass;
  std::cout << j.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

int run_catalog(bool validate, const std::string& json_file, bool constructible_only) {
  if (!json_file.empty()) {
    std::ofstream out(json_file);
    out << drgt::catalog_json().dump(2) << "\n";
  }
  if (validate) {
    auto reports = drgt::validate_catalog();
    std::cout << drgt::validation_json(reports).dump(2) << "\n";
    for (const auto& r : reports)
      if (!r.pass) return 1;
    return 0;
  }
  Json arr = Json::array();
  for (const auto* e : drgt::catalog_list(constructible_only))
    arr.push_back(drgt::catalog_entry_json(*e));
  std::cout << arr.dump(2) << "\n";
  return 0;
}

int run_search(int d, long max_k, bool antipodal, bool feasible, bool numeric, bool no_prune,
               std::uint64_t cap, int threads) {
  drgt::SearchConfig cfg;
  cfg.d = d;
  cfg.max_k = max_k;
  cfg.require_antipodal = antipodal;
  cfg.require_feasible = feasible;
  cfg.numeric_tolerance = numeric;
  cfg.prune = !no_prune;
  cfg.candidate_cap = cap;
  cfg.threads = threads;
  cfg.progress = [](std::uint64_t n) {
    std::cerr << "search: " << n << " candidates examined\n";
  };
  auto hits = drgt::search_tight_arrays(cfg);
  for (const auto& h : hits) std::cout << drgt::search_hit_json(h).dump() << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tight distance-regular graph analyzer"};
  app.require_subcommand(1);

  std::string array_text;
  auto* analyze = app.add_subcommand("analyze", "full tightness report for an intersection array");
  analyze->add_option("--array", array_text, "intersection array \"b0,..;c1,..\"")->required();

  std::string sigma_text, epsilon_text;
  auto* param = app.add_subcommand("parametrize", "intersection numbers from (sigma, epsilon)");
  param->add_option("--sigma", sigma_text, "cosine sequence \"1,1/2,...\"")->required();
  param->add_option("--epsilon", epsilon_text, "auxiliary parameter")->required();

  std::string construct, edge_file, export_file;
  bool homogeneous = false, formulas = false, strict = false, force = false;
  long sample = 0;
  auto* verify = app.add_subcommand("verify-graph", "combinatorial verification of a graph");
  verify->add_option("--construct", construct, "family, e.g. johnson:8,4 or icosahedron");
  verify->add_option("--edge-file", edge_file, "edge-list file");
  verify->add_option("--export", export_file, "write the edge list here");
  verify->add_flag("--homogeneous", homogeneous, "run the 1-homogeneity check");
  verify->add_flag("--formulas", formulas, "cross-check the closed-form cell counts");
  verify->add_flag("--strict", strict, "spot-check p^h_ij constancy for h > 1");
  verify->add_flag("--force", force, "allow graphs above 5000 vertices");
  verify->add_option("--sample", sample, "cap the number of edges checked");

  bool validate = false, constructible_only = false;
  std::string json_file;
  auto* cat = app.add_subcommand("catalog", "the worked-example table");
  cat->add_flag("--validate", validate, "recompute every column from the array");
  cat->add_flag("--constructible", constructible_only, "only entries with a builder");
  cat->add_option("--json", json_file, "export catalog.json here");

  int d = 4, threads = 0;
  long max_k = 16;
  bool antipodal = false, feasible = false, numeric = false, no_prune = false;
  std::uint64_t cap = 100000000;
  auto* search = app.add_subcommand("search", "enumerate tight arrays");
  search->add_option("--d", d, "diameter")->required();
  search->add_option("--max-k", max_k, "valency bound")->required();
  search->add_flag("--antipodal", antipodal, "require an antipodal array");
  search->add_flag("--feasible", feasible, "require a feasible theta_d sequence");
  search->add_flag("--numeric", numeric, "accept numerically tight candidates");
  search->add_flag("--no-prune", no_prune, "exhaustive box enumeration (small bounds)");
  search->add_option("--cap", cap, "candidate budget");
  search->add_option("--threads", threads, "worker count (0 = DRGT_THREADS or hardware)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(array_text);
    if (param->parsed()) return run_parametrize(sigma_text, epsilon_text);
    if (verify->parsed())
      return run_verify_graph(construct, edge_file, export_file, homogeneous, formulas, strict,
                              force, sample);
    if (cat->parsed()) return run_catalog(validate, json_file, constructible_only);
    if (search->parsed())
      return run_search(d, max_k, antipodal, feasible, numeric, no_prune, cap, threads);
  } catch (const drgt::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
