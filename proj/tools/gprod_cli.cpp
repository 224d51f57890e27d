// gprod: command-line frontend.
//
// Exit status: 0 success, 1 domain or I/O error, 2 usage error,
// 3 experiment acceptance failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gprod/gprod.hpp"

namespace fs = std::filesystem;
using namespace gprod;

namespace {

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;
constexpr int exit_acceptance = 3;

// Writes to `path`, or to standard output when the path is empty or "-".
void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  write_file_atomic(path, writer);
}

bool to_stdout(const std::string& path) { return path.empty() || path == "-"; }

std::string format_real(const Real& x) { return x.str(17, std::ios_base::fmtflags(0)); }

struct GenerateArgs {
  std::string model = "er";
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<std::size_t> d;
  std::optional<std::size_t> k;
  double beta = default_rewire_probability;
  std::optional<std::size_t> m;
  std::optional<double> density;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string output;
};

int run_generate(const GenerateArgs& a) {
  const Model model = parse_model(a.model);
  GeneratorSpec spec{model, a.n, {}};
  if (a.density) {
    spec = density_calibrated_spec(model, a.n, *a.density);
  } else {
    auto need = [&](bool present, const char* flag) {
      if (!present) throw invalid_parameters(std::string("model ") + std::string(to_string(model)) + " needs " + flag);
    };
    switch (model) {
      case Model::erdos_renyi: need(a.p.has_value(), "--p"); spec.params.p = *a.p; break;
      case Model::random_regular: need(a.d.has_value(), "--d"); spec.params.d = *a.d; break;
      case Model::watts_strogatz:
        need(a.k.has_value(), "--k");
        spec.params.k = *a.k;
        spec.params.beta = a.beta;
        break;
      case Model::barabasi_albert: need(a.m.has_value(), "--m"); spec.params.m = *a.m; break;
      default: break;
    }
  }
  const Graph g = generate(spec, RngSeed{a.seed, a.stream});
  emit(a.output, [&](std::ostream& os) { write_edge_list(os, g); });
  if (!to_stdout(a.output))
    std::cout << "generated " << to_string(model) << " n=" << g.order() << " m=" << g.edge_count() << " -> "
              << a.output << '\n';
  return 0;
}

struct ProductArgs {
  std::string kind = "tensor";
  std::string left, right, output, map;
  std::size_t vertex_cap = ProductOptions{}.vertex_cap;
};

int run_product(const ProductArgs& a) {
  const Graph g = read_edge_list_file(a.left);
  const Graph h = read_edge_list_file(a.right);
  const ProductKind kind = parse_product_kind(a.kind);
  const Product prod = make_product(kind, g, h, ProductOptions{a.vertex_cap});
  emit(a.output, [&](std::ostream& os) { write_edge_list(os, prod.graph); });
  std::string map_path = a.map;
  if (map_path.empty() && !to_stdout(a.output)) map_path = a.output + ".map";
  if (!map_path.empty()) write_file_atomic(map_path, [&](std::ostream& os) { prod.map.write(os); });
  if (!to_stdout(a.output))
    std::cout << to_string(kind) << " product n=" << prod.graph.order() << " m=" << prod.graph.edge_count() << " -> "
              << a.output << " (map " << map_path << ")\n";
  return 0;
}

struct CensusArgs {
  std::string input, output, per_vertex, format = "json";
  std::size_t kmax = 3;
  std::uint64_t budget = CliqueOptions{}.node_budget;
};

int run_census(const CensusArgs& a) {
  const Graph g = read_edge_list_file(a.input);
  const CliqueCensus census = count_k_cliques(g, a.kmax, CliqueOptions{a.budget}, !a.per_vertex.empty());
  emit(a.output, [&](std::ostream& os) {
    if (a.format == "csv") {
      os << "k,count\n";
      for (std::size_t k = 1; k <= census.max_k_evaluated; ++k) os << k << ',' << census.counts[k].str() << '\n';
    } else {
      os << census_to_json(census).dump(2) << '\n';
    }
  });
  if (!a.per_vertex.empty())
    write_file_atomic(a.per_vertex, [&](std::ostream& os) { write_per_vertex_csv(os, census); });
  if (!to_stdout(a.output))
    std::cout << "census n=" << g.order() << " k<=" << census.max_k_evaluated
              << " omega>=" << census.largest_nonzero() << " nodes=" << census.nodes_explored << " -> " << a.output
              << '\n';
  return 0;
}

struct MetricsArgs {
  std::string input, output, format = "csv";
  std::size_t k = 2;
  std::optional<vertex_t> vertex;
  std::uint64_t budget = CliqueOptions{}.node_budget;
};

int run_metrics(const MetricsArgs& a) {
  const Graph g = read_edge_list_file(a.input);
  const CliqueOptions opts{a.budget};
  std::vector<VertexMetrics> rows;
  if (a.vertex)
    rows.push_back(vertex_metrics(g, *a.vertex, a.k, opts));
  else
    rows = all_vertex_metrics(g, a.k, opts);
  emit(a.output, [&](std::ostream& os) {
    if (a.format == "json")
      os << metrics_to_json(rows).dump(2) << '\n';
    else
      write_metrics_csv(os, rows);
  });
  if (!to_stdout(a.output)) std::cout << "metrics for " << rows.size() << " vertices -> " << a.output << '\n';
  return 0;
}

struct TheoryArgs {
  std::vector<std::string> kinds;
  std::size_t n = 0;
  std::string p;
  std::size_t k = 0;
  double m = theory::default_threshold_m;
  bool header = false;
};

int run_theory(const TheoryArgs& a) {
  const Rational p = parse_rational(a.p);
  std::vector<theory::Kind> kinds;
  bool everything = false;
  for (const auto& s : a.kinds) {
    if (s == "all") {
      everything = true;
      kinds.assign(std::begin(theory::all_kinds), std::end(theory::all_kinds));
    } else {
      kinds.push_back(theory::parse_kind(s));
    }
  }
  std::ostringstream out;
  if (a.header) out << "kind,n,p,k,value\n";
  for (theory::Kind kind : kinds) {
    try {
      const auto pred = theory::predict(kind, a.n, p, a.k, Real(a.m));
      out << to_string(kind) << ',' << a.n << ',' << a.p << ',' << pred.k << ',' << format_real(pred.value) << '\n';
    } catch (const domain_error& e) {
      // With --kind all, formulas undefined at these parameters are reported and skipped.
      if (!everything) throw;
      std::cerr << "gprod: " << to_string(kind) << " skipped: " << e.what() << '\n';
    }
  }
  std::cout << out.str();
  return 0;
}

struct McsArgs {
  std::string left, right, output, method = "modular-clique";
  std::uint64_t budget = CliqueOptions{}.node_budget;
};

int run_mcs(const McsArgs& a) {
  const Graph g = read_edge_list_file(a.left);
  const Graph h = read_edge_list_file(a.right);
  McsResult r;
  if (a.method == "brute-force")
    r = mcs_brute_force(g, h, std::min(g.order(), h.order()));
  else if (a.method == "modular-clique")
    r = mcs_via_modular_clique(g, h, CliqueOptions{a.budget});
  else
    throw invalid_parameters("unknown mcs method \"" + a.method + "\"");
  emit(a.output, [&](std::ostream& os) { os << mcs_to_json(r).dump() << '\n'; });
  if (!to_stdout(a.output)) std::cout << "mcs size=" << r.size << " -> " << a.output << '\n';
  return 0;
}

struct ExperimentArgs {
  std::string name;
  std::vector<std::size_t> n_grid;
  double p = 0.5;
  double density = 0.5;
  double c = 2.0;
  std::size_t k = 2;
  std::size_t replicas = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> models;
  std::size_t vertex_sample = 32;
  std::size_t threads = 0;
  std::uint64_t budget = CliqueOptions{}.node_budget;
  std::size_t materialize_limit = mc::ExperimentConfig{}.materialize_limit;
  double z_threshold = 4.0;
  double tolerance = 0.02;
  double threshold_m = theory::default_threshold_m;
  std::string output, plot, format = "json";
};

int run_experiment_cmd(const ExperimentArgs& a) {
  mc::ExperimentConfig cfg;
  cfg.experiment = mc::parse_experiment(a.name);
  cfg.n_grid = a.n_grid;
  cfg.p = a.p;
  cfg.density = a.density;
  cfg.c = a.c;
  cfg.k = a.k;
  cfg.replicas = a.replicas;
  cfg.seed = RngSeed{a.seed, 0};
  if (!a.models.empty()) {
    cfg.models.clear();
    for (const auto& m : a.models) cfg.models.push_back(parse_model(m));
  }
  cfg.vertex_sample = a.vertex_sample;
  cfg.threads = a.threads;
  cfg.node_budget = a.budget;
  cfg.materialize_limit = a.materialize_limit;
  cfg.z_threshold = a.z_threshold;
  cfg.convergence_tolerance = a.tolerance;
  cfg.threshold_m = a.threshold_m;

  const mc::ExperimentReport report = mc::run_experiment(cfg);
  emit(a.output, [&](std::ostream& os) {
    if (a.format == "csv")
      mc::write_plot_data(os, report);
    else
      os << mc::report_to_json(report).dump(2) << '\n';
  });
  if (!a.plot.empty()) mc::export_plot_data(report, a.plot);

  std::ostream& log = to_stdout(a.output) ? std::cerr : std::cout;
  const bool failed = report.acceptance.evaluated && !report.acceptance.passed;
  log << a.name << ": " << report.rows.size() << " rows, acceptance "
      << (report.acceptance.evaluated ? (failed ? "FAILED" : "passed") : "not evaluated") << '\n';
  if (failed)
    for (const auto& note : report.acceptance.notes) log << "  " << note << '\n';
  return failed ? exit_acceptance : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor and modular graph products: cliques, metrics, theory and Monte Carlo checks", "gprod"};
  app.set_version_flag("--version", std::string(mc::version));
  app.require_subcommand(1);

  std::function<int()> action;

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Sample a graph and write it as an edge list");
  generate_cmd->add_option("--model", gen.model, "er | regular | ws | ba | complete | path | empty")->capture_default_str();
  generate_cmd->add_option("--n", gen.n, "Vertex count")->required();
  generate_cmd->add_option("--p", gen.p, "Edge probability (er)");
  generate_cmd->add_option("--d", gen.d, "Degree (regular)");
  generate_cmd->add_option("--k", gen.k, "Even ring degree (ws)");
  generate_cmd->add_option("--beta", gen.beta, "Rewire probability (ws)")->capture_default_str();
  generate_cmd->add_option("--m", gen.m, "Attachment count (ba)");
  generate_cmd->add_option("--density", gen.density, "Calibrate model parameters to this edge density");
  generate_cmd->add_option("--seed", gen.seed, "Root seed")->capture_default_str();
  generate_cmd->add_option("--stream", gen.stream, "Substream index")->capture_default_str();
  generate_cmd->add_option("-o,--output", gen.output, "Output edge list (default: stdout)");
  generate_cmd->callback([&] { action = [&] { return run_generate(gen); }; });

  ProductArgs prod;
  auto* product_cmd = app.add_subcommand("product", "Build the tensor or modular product of two graphs");
  product_cmd->add_option("--kind", prod.kind, "tensor | modular")->capture_default_str();
  product_cmd->add_option("-a,--left", prod.left, "Edge list of G")->required()->check(CLI::ExistingFile);
  product_cmd->add_option("-b,--right", prod.right, "Edge list of H")->required()->check(CLI::ExistingFile);
  product_cmd->add_option("-o,--output", prod.output, "Output edge list (default: stdout)");
  product_cmd->add_option("--map", prod.map, "Vertex map sidecar (default: <output>.map)");
  product_cmd->add_option("--vertex-cap", prod.vertex_cap, "Largest product accepted")->capture_default_str();
  product_cmd->callback([&] { action = [&] { return run_product(prod); }; });

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Count k-cliques for k = 1..kmax");
  census_cmd->add_option("-i,--input", census.input, "Edge list")->required()->check(CLI::ExistingFile);
  census_cmd->add_option("--kmax", census.kmax, "Largest clique size")->capture_default_str()->check(CLI::PositiveNumber);
  census_cmd->add_option("--per-vertex", census.per_vertex, "Also write v,k,a_k CSV to this path");
  census_cmd->add_option("--budget", census.budget, "Search-node budget")->capture_default_str();
  census_cmd->add_option("--format", census.format, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  census_cmd->add_option("-o,--output", census.output, "Output file (default: stdout)");
  census_cmd->callback([&] { action = [&] { return run_census(census); }; });

  MetricsArgs met;
  auto* metrics_cmd = app.add_subcommand("metrics", "Per-vertex degree, A_k, C_k and local efficiency");
  metrics_cmd->add_option("-i,--input", met.input, "Edge list")->required()->check(CLI::ExistingFile);
  metrics_cmd->add_option("--k", met.k, "Clique size for A_k and C_k")->capture_default_str()->check(CLI::PositiveNumber);
  metrics_cmd->add_option("--vertex", met.vertex, "Only this vertex");
  metrics_cmd->add_option("--budget", met.budget, "Search-node budget")->capture_default_str();
  metrics_cmd->add_option("--format", met.format, "csv | json")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  metrics_cmd->add_option("-o,--output", met.output, "Output file (default: stdout)");
  metrics_cmd->callback([&] { action = [&] { return run_metrics(met); }; });

  TheoryArgs th;
  auto* theory_cmd = app.add_subcommand("theory", "Evaluate closed-form predictions as CSV (kind,n,p,k,value)");
  theory_cmd->add_option("--kind", th.kinds, "Formula kind, repeatable, or 'all'")->required();
  theory_cmd->add_option("--n", th.n, "Factor size")->required();
  theory_cmd->add_option("--p", th.p, "Edge probability (decimal or a/b)")->required();
  theory_cmd->add_option("--k", th.k, "Clique size")->capture_default_str();
  theory_cmd->add_option("--m", th.m, "Lower-threshold constant M > 4")->capture_default_str();
  theory_cmd->add_flag("--header", th.header, "Print the CSV header");
  theory_cmd->callback([&] { action = [&] { return run_theory(th); }; });

  McsArgs mcs;
  auto* mcs_cmd = app.add_subcommand("mcs", "Maximum common induced subgraph of two graphs (JSON)");
  mcs_cmd->add_option("-a,--left", mcs.left, "Edge list of G")->required()->check(CLI::ExistingFile);
  mcs_cmd->add_option("-b,--right", mcs.right, "Edge list of H")->required()->check(CLI::ExistingFile);
  mcs_cmd->add_option("--method", mcs.method, "modular-clique | brute-force")->capture_default_str();
  mcs_cmd->add_option("--budget", mcs.budget, "Search-node budget")->capture_default_str();
  mcs_cmd->add_option("-o,--output", mcs.output, "Output file (default: stdout)");
  mcs_cmd->callback([&] { action = [&] { return run_mcs(mcs); }; });

  ExperimentArgs ex;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a replicated Monte Carlo experiment");
  std::string experiment_names;
  for (auto e : mc::all_experiments) experiment_names += (experiment_names.empty() ? "" : " | ") + std::string(to_string(e));
  exp_cmd->add_option("--name", ex.name, experiment_names)->required();
  exp_cmd->add_option("--n", ex.n_grid, "Factor sizes (repeatable or comma separated)")->required()->delimiter(',');
  exp_cmd->add_option("--p", ex.p, "Edge probability")->capture_default_str();
  exp_cmd->add_option("--density", ex.density, "Target density (model-comparison)")->capture_default_str();
  exp_cmd->add_option("--c", ex.c, "p = c/n (isolated-wlln)")->capture_default_str();
  exp_cmd->add_option("--k", ex.k, "Clique size")->capture_default_str();
  exp_cmd->add_option("--replicas", ex.replicas, "Replicas per grid point")->capture_default_str();
  exp_cmd->add_option("--seed", ex.seed, "Root seed")->capture_default_str();
  exp_cmd->add_option("--models", ex.models, "Models for model-comparison")->delimiter(',');
  exp_cmd->add_option("--vertex-sample", ex.vertex_sample, "Product vertices per replica (0 = all)")->capture_default_str();
  exp_cmd->add_option("--threads", ex.threads, "Worker threads (0 = available parallelism)")->capture_default_str();
  exp_cmd->add_option("--budget", ex.budget, "Search-node budget per solve")->capture_default_str();
  exp_cmd->add_option("--materialize-limit", ex.materialize_limit, "Largest product materialized")->capture_default_str();
  exp_cmd->add_option("--z-threshold", ex.z_threshold, "Acceptance |z| bound")->capture_default_str();
  exp_cmd->add_option("--tolerance", ex.tolerance, "Convergence tolerance")->capture_default_str();
  exp_cmd->add_option("--threshold-m", ex.threshold_m, "Lower-threshold constant M")->capture_default_str();
  exp_cmd->add_option("--format", ex.format, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  exp_cmd->add_option("-o,--output", ex.output, "Report file (default: stdout)");
  exp_cmd->add_option("--plot", ex.plot, "Also write plot CSV to this path");
  exp_cmd->callback([&] { action = [&] { return run_experiment_cmd(ex); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "gprod: " << e.what() << '\n';
    return exit_domain;
  }
}
