// gpc: batch front end over JSON files.
//
// Exit codes: 0 success (stdout carries a JSON body), 1 domain error
// (well-formed input that a module rejects), 2 I/O, JSON, or usage error.
// Every command is a pure function of its input file, flags, and seed, so
// reruns produce byte-identical output.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gpc/distance.hpp"
#include "gpc/errors.hpp"
#include "gpc/gauge.hpp"
#include "gpc/graph.hpp"
#include "gpc/inconsistency.hpp"
#include "gpc/pc_matrix.hpp"
#include "gpc/serialization.hpp"
#include "gpc/stochastic.hpp"
#include "gpc/weights.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gpc::ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw gpc::ParseError(path + ": " + e.what());
  }
}

void emit(const json& body) { std::cout << body.dump(2) << "\n"; }

struct CheckArgs {
  std::string file;
  double tol = gpc::kConsistencyTolerance;
};

void run_check(const CheckArgs& args) {
  const json doc = load_json(args.file);
  if (gpc::looks_like_graph(doc)) {
    const gpc::GraphPCMatrix g = gpc::graph_from_json(doc);
    emit(json{{"graph_consistent", gpc::is_graph_consistent(g, args.tol)}});
    return;
  }
  const gpc::PCMatrix a = gpc::pc_matrix_from_json(doc);
  emit(json{{"covariant", gpc::is_covariant_consistent(a, args.tol)},
            {"contravariant", gpc::is_contravariant_consistent(a, args.tol)}});
}

struct IndicatorArgs {
  std::string file;
  std::string kind = "generic";
  bool localize = false;
};

void run_indicator(const IndicatorArgs& args) {
  const gpc::PCMatrix a = gpc::pc_matrix_from_json(load_json(args.file));
  double value = 0.0;
  // The matrix the triad localization runs on; det scores the |det| image.
  gpc::PCMatrix scored = a;
  if (args.kind == "kii3") {
    if (a.spec().kind() != gpc::GroupKind::RPlus || a.size() != 3) {
      throw gpc::UnsupportedGroup("kii3 needs a 3x3 positive-real matrix");
    }
    value = gpc::kii3(a.upper(0, 1).rplus_value(), a.upper(0, 2).rplus_value(),
                      a.upper(1, 2).rplus_value());
  } else if (args.kind == "kiin") {
    value = gpc::kii_n(a);
  } else if (args.kind == "generic") {
    value = gpc::indicator_from_triads(a).first.value;
  } else if (args.kind == "det") {
    value = gpc::ii_det(a).value;
    scored = gpc::apply_morphism(a, gpc::MorphismKind::AbsDet);
  } else {
    throw gpc::ParseError("unknown indicator kind \"" + args.kind + "\"");
  }
  json body{{"kind", args.kind}, {"value", value}};
  if (args.localize) {
    const auto [ignored, worst] = gpc::indicator_from_triads(scored);
    (void)ignored;
    body["worst_triad"] = {worst.i + 1, worst.j + 1, worst.k + 1};
    body["defect"] = gpc::to_json(worst.defect);
  }
  emit(body);
}

struct DecomposeArgs {
  std::string file;
  bool inverse = false;
};

void run_decompose(const DecomposeArgs& args) {
  const json doc = load_json(args.file);
  if (args.inverse) {
    emit(gpc::to_json(gpc::phi_n_inverse(gpc::decomposition_from_json(doc))));
  } else {
    emit(gpc::to_json(gpc::phi_n(gpc::pc_matrix_from_json(doc))));
  }
}

void run_reduce(const std::string& file) {
  const gpc::PCMatrix a = gpc::pc_matrix_from_json(load_json(file));
  const gpc::LeftConsistentize3 r = gpc::left_consistentize_3(a);
  emit(json{{"g2", gpc::to_json(r.determined)},
            {"gauge", gpc::to_json(r.gauge)},
            {"consistent", gpc::to_json(r.consistent)}});
}

struct WeightsArgs {
  std::string file;
  std::string method = "chain";
};

void run_weights(const WeightsArgs& args) {
  const gpc::PCMatrix a = gpc::pc_matrix_from_json(load_json(args.file));
  gpc::AffinePotential p;
  if (args.method == "chain") {
    p = gpc::solve_chain(a);
  } else if (args.method == "lsq") {
    p = gpc::solve_least_squares(a);
  } else {
    throw gpc::ParseError("unknown method \"" + args.method + "\"");
  }
  json lambda = json::array();
  for (const double fi : p.f) lambda.push_back(std::exp(fi));
  emit(json{{"f", p.f},
            {"lambda", lambda},
            {"residual", gpc::reconstruction_residual_sq(a, p)}});
}

struct GraphArgs {
  std::string file;
  int series = -1;
  int basepoint = 1;
  double tol = gpc::kConsistencyTolerance;
};

void run_graph(const GraphArgs& args) {
  const gpc::GraphPCMatrix g = gpc::graph_from_json(load_json(args.file));
  if (args.basepoint < 1 || args.basepoint > g.size()) {
    throw gpc::IndexOutOfRange("basepoint must lie in 1..n");
  }
  const int s = args.basepoint - 1;
  json generators = json::array();
  for (const auto& h : gpc::holonomy_generators(g, s)) {
    generators.push_back(gpc::to_json(h));
  }
  json body{{"consistent", gpc::is_graph_consistent(g, args.tol)},
            {"generators", generators}};
  if (args.series >= 0) {
    const gpc::RankedSeries series = gpc::ranked_kii(g, s, args.series);
    body["series"] =
        json{{"coefficients", series.coefficients}, {"text", series.text()}};
  }
  emit(body);
}

struct SampleArgs {
  std::string file;
  std::string ii = "generic";
  double eps = 0.1;
  std::uint64_t n = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
};

void run_sample(const SampleArgs& args) {
  const gpc::ProductMeasure m =
      gpc::product_measure_from_json(load_json(args.file));
  gpc::IndicatorKind kind = gpc::IndicatorKind::Generic;
  if (args.ii == "generic") {
    kind = gpc::IndicatorKind::Generic;
  } else if (args.ii == "kiin") {
    kind = gpc::IndicatorKind::KiiN;
  } else if (args.ii == "det") {
    kind = gpc::IndicatorKind::Det;
  } else {
    throw gpc::ParseError("unknown indicator kind \"" + args.ii + "\"");
  }
  const gpc::MCEstimate e = gpc::acceptance_probability(
      m, kind, args.eps, static_cast<std::size_t>(args.n), args.seed,
      args.threads);
  emit(gpc::to_json(e));
}

struct LiftsArgs {
  std::string file;
  bool all = false;
  double tol = gpc::kConsistencyTolerance;
};

void run_lifts(const LiftsArgs& args) {
  const gpc::DistanceMatrix k = gpc::distance_from_json(load_json(args.file));
  json consistent = json::array();
  for (const auto& a : gpc::consistent_lifts(k, args.tol)) {
    consistent.push_back(gpc::to_json(a));
  }
  json body{{"count", gpc::count_lifts(k)}, {"consistent", consistent}};
  if (args.all) {
    json lifts = json::array();
    for (const auto& a : gpc::enumerate_lifts(k)) {
      lifts.push_back(gpc::to_json(a));
    }
    body["lifts"] = lifts;
  }
  emit(body);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise-comparison matrices over groups"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand(
      "check", "Consistency report for a matrix or graph file");
  check->add_option("file", check_args.file, "input JSON")->required();
  check->add_option("--tol", check_args.tol, "consistency tolerance");

  IndicatorArgs indicator_args;
  auto* indicator =
      app.add_subcommand("indicator", "Inconsistency indicator of a matrix");
  indicator->add_option("file", indicator_args.file, "input JSON")->required();
  indicator->add_option("--kind", indicator_args.kind,
                        "kii3, kiin, generic, or det");
  indicator->add_flag("--localize", indicator_args.localize,
                      "report the worst triad");

  DecomposeArgs decompose_args;
  auto* decompose = app.add_subcommand(
      "decompose", "Split a matrix into consistent part and components");
  decompose->add_option("file", decompose_args.file, "input JSON")->required();
  decompose->add_flag("--inverse", decompose_args.inverse,
                      "rebuild a matrix from a decomposition file");

  std::string reduce_file;
  auto* reduce = app.add_subcommand(
      "reduce", "Left-gauge consistentization of a 3x3 matrix");
  reduce->add_option("file", reduce_file, "input JSON")->required();

  WeightsArgs weights_args;
  auto* weights =
      app.add_subcommand("weights", "Weight vector behind a matrix");
  weights->add_option("file", weights_args.file, "input JSON")->required();
  weights->add_option("--method", weights_args.method, "chain or lsq");

  GraphArgs graph_args;
  auto* graph =
      app.add_subcommand("graph", "Holonomy report for a graph file");
  graph->add_option("file", graph_args.file, "input JSON")->required();
  graph->add_option("--series", graph_args.series,
                    "ranked series up to this loop length");
  graph->add_option("--basepoint", graph_args.basepoint,
                    "1-based basepoint node");
  graph->add_option("--tol", graph_args.tol, "consistency tolerance");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand(
      "sample", "Monte-Carlo inconsistency-acceptance estimate");
  sample->add_option("file", sample_args.file, "measure JSON")->required();
  sample->add_option("--ii", sample_args.ii, "generic, kiin, or det");
  sample->add_option("--eps", sample_args.eps, "acceptance threshold");
  sample->add_option("--samples", sample_args.n, "sample count");
  sample->add_option("--seed", sample_args.seed, "RNG seed");
  sample->add_option("--threads", sample_args.threads, "worker threads");

  LiftsArgs lifts_args;
  auto* lifts = app.add_subcommand(
      "lifts", "Positive-real matrices over a distance matrix");
  lifts->add_option("file", lifts_args.file, "distance JSON")->required();
  lifts->add_flag("--all", lifts_args.all, "list every lift, not only counts");
  lifts->add_option("--tol", lifts_args.tol, "consistency tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*check) run_check(check_args);
    if (*indicator) run_indicator(indicator_args);
    if (*decompose) run_decompose(decompose_args);
    if (*reduce) run_reduce(reduce_file);
    if (*weights) run_weights(weights_args);
    if (*graph) run_graph(graph_args);
    if (*sample) run_sample(sample_args);
    if (*lifts) run_lifts(lifts_args);
  } catch (const gpc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const gpc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
