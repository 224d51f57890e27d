#pragma once

// Replicated experiments pairing empirical statistics of random graph
// products with their closed-form predictions.
//
// Every replica draws its graphs from its own stream, derived from the root
// seed and (series, grid point, replica index). Per-replica values are folded
// in replica order, so reports are bit-identical for any worker count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gprod/cliques.hpp"
#include "gprod/edge_list.hpp"
#include "gprod/error.hpp"
#include "gprod/generators.hpp"
#include "gprod/graph.hpp"
#include "gprod/metrics.hpp"
#include "gprod/products.hpp"
#include "gprod/rng.hpp"
#include "gprod/theory.hpp"

namespace gprod::mc {

inline constexpr std::string_view version = "gprod 1.0.0";

enum class Experiment {
  clique_count_mean,
  clique_count_variance,
  max_clique_growth,
  clustering_convergence,
  efficiency_convergence,
  isolated_mean,
  isolated_wlln,
  model_comparison,
  modular_vs_tensor_clique,
};

inline constexpr Experiment all_experiments[] = {
    Experiment::clique_count_mean,      Experiment::clique_count_variance, Experiment::max_clique_growth,
    Experiment::clustering_convergence, Experiment::efficiency_convergence, Experiment::isolated_mean,
    Experiment::isolated_wlln,          Experiment::model_comparison,      Experiment::modular_vs_tensor_clique,
};

inline constexpr std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::clique_count_mean: return "clique-count-mean";
    case Experiment::clique_count_variance: return "clique-count-variance";
    case Experiment::max_clique_growth: return "max-clique-growth";
    case Experiment::clustering_convergence: return "clustering-convergence";
    case Experiment::efficiency_convergence: return "efficiency-convergence";
    case Experiment::isolated_mean: return "isolated-mean";
    case Experiment::isolated_wlln: return "isolated-wlln";
    case Experiment::model_comparison: return "model-comparison";
    case Experiment::modular_vs_tensor_clique: return "modular-vs-tensor-clique";
  }
  return "unknown";
}

inline Experiment parse_experiment(std::string_view s) {
  for (Experiment e : all_experiments)
    if (to_string(e) == s) return e;
  throw invalid_parameters("unknown experiment \"" + std::string(s) + "\"");
}

struct ExperimentConfig {
  Experiment experiment = Experiment::clique_count_mean;
  std::vector<std::size_t> n_grid;
  double p = 0.5;
  double density = 0.5;  // model-comparison target edge density
  double c = 2.0;        // isolated-wlln uses p = c / n
  std::size_t k = 2;
  std::size_t replicas = 100;
  RngSeed seed{};
  std::vector<Model> models{Model::erdos_renyi, Model::random_regular, Model::watts_strogatz,
                            Model::barabasi_albert};
  /// Product vertices sampled per replica for local statistics; 0 means all.
  std::size_t vertex_sample = 32;
  /// Worker threads; 0 means hardware concurrency. Never affects results.
  std::size_t threads = 0;
  std::uint64_t node_budget = 1'000'000'000;
  /// Largest product (in vertices) that is materialized. Beyond it, clique
  /// numbers and isolated counts of tensor products are taken from the
  /// factors; other experiments reject the configuration.
  std::size_t materialize_limit = 40'000;
  double z_threshold = 4.0;
  double convergence_tolerance = 0.02;
  double wlln_tolerance = 0.1;
  double threshold_m = theory::default_threshold_m;

  void validate() const {
    if (replicas < 1) throw invalid_parameters("replicas must be >= 1");
    if (n_grid.empty()) throw invalid_parameters("n_grid must be non-empty");
    for (std::size_t i = 1; i < n_grid.size(); ++i)
      if (n_grid[i] <= n_grid[i - 1]) throw invalid_parameters("n_grid must be strictly increasing");
    if (n_grid.front() < 1) throw invalid_parameters("n_grid entries must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameters("p must lie in [0, 1]");
    if (experiment == Experiment::model_comparison && models.empty())
      throw invalid_parameters("model-comparison needs at least one model");
    if (experiment == Experiment::isolated_wlln && !(c > 0.0))
      throw invalid_parameters("isolated-wlln needs c > 0");
    if ((experiment == Experiment::clique_count_mean || experiment == Experiment::clique_count_variance) &&
        (k < 1 || k > n_grid.front()))
      throw invalid_parameters("clique size k must satisfy 1 <= k <= n");
  }
};

struct ReportRow {
  std::size_t n = 0;
  std::string statistic;
  double mean = 0.0;
  double variance = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
  std::optional<double> theory;
  std::optional<double> z;
  std::map<std::string, double> extras;
};

struct Acceptance {
  bool evaluated = false;
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string note) {
    evaluated = true;
    passed = passed && ok;
    notes.push_back((ok ? "ok: " : "FAIL: ") + std::move(note));
  }
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  Acceptance acceptance;
  std::vector<std::string> notes;

  const ReportRow* find(std::size_t n, std::string_view statistic) const {
    for (const auto& r : rows)
      if (r.n == n && r.statistic == statistic) return &r;
    return nullptr;
  }

  std::vector<const ReportRow*> series(std::string_view statistic) const {
    std::vector<const ReportRow*> out;
    for (const auto& r : rows)
      if (r.statistic == statistic) out.push_back(&r);
    return out;
  }
};

struct Summary {
  double mean = 0.0;
  double variance = 0.0;  // Bessel-corrected
  double standard_error = 0.0;
};

inline Summary summarize(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.variance = ss / static_cast<double>(xs.size() - 1);
    s.standard_error = std::sqrt(s.variance / static_cast<double>(xs.size()));
  }
  return s;
}

/// Sample variance together with the large-sample standard error of that
/// variance, (m4 - s^4 (R-3)/(R-1)) / R.
inline Summary summarize_variance(const std::vector<double>& xs) {
  const Summary base = summarize(xs);
  Summary out;
  out.mean = base.variance;
  const auto r = static_cast<double>(xs.size());
  if (xs.size() < 4) return out;
  double m4 = 0.0;
  for (double x : xs) m4 += std::pow(x - base.mean, 4);
  m4 /= r;
  const double s4 = base.variance * base.variance;
  out.variance = std::max(0.0, (m4 - s4 * (r - 3.0) / (r - 1.0)) / r);
  out.standard_error = std::sqrt(out.variance);
  return out;
}

inline ReportRow make_row(std::size_t n, std::string statistic, const Summary& s, std::size_t samples,
                          std::optional<double> theory_value) {
  ReportRow row;
  row.n = n;
  row.statistic = std::move(statistic);
  row.mean = s.mean;
  row.variance = s.variance;
  row.standard_error = s.standard_error;
  row.samples = samples;
  row.theory = theory_value;
  if (theory_value && s.standard_error > 0.0) row.z = (s.mean - *theory_value) / s.standard_error;
  return row;
}

/// Runs f(i) for i in [0, count) on a worker pool and returns results in
/// index order. The exception of the lowest failing index is rethrown.
template <class F>
auto run_indexed(std::size_t count, std::size_t threads, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> results(count);
  std::vector<std::exception_ptr> errors(count);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      if (failed.load()) break;
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
        failed = true;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

namespace detail {

inline RngSeed replica_seed(const ExperimentConfig& cfg, std::size_t series, std::size_t grid_index,
                            std::size_t replica) {
  const std::uint64_t stream = (static_cast<std::uint64_t>(series) << 48) ^
                               (static_cast<std::uint64_t>(grid_index) << 32) ^ static_cast<std::uint64_t>(replica);
  return cfg.seed.with_stream(stream);
}

inline GeneratorSpec er_spec(std::size_t n, double p) {
  GeneratorSpec spec{Model::erdos_renyi, n, {}};
  spec.params.p = p;
  return spec;
}

inline void require_materializable(const ExperimentConfig& cfg, std::size_t n) {
  if (n * n > cfg.materialize_limit)
    throw invalid_parameters("product of two " + std::to_string(n) + "-vertex graphs exceeds the materialize limit of " +
                             std::to_string(cfg.materialize_limit) + " vertices");
}

inline CliqueOptions clique_options(const ExperimentConfig& cfg) { return CliqueOptions{cfg.node_budget}; }

inline std::string clustering_name(std::size_t k, std::string_view graph) {
  return "C_" + std::to_string(k) + "(" + std::string(graph) + ")";
}

struct LocalSample {
  double product_ck = 0.0;
  double product_eff = 0.0;
  double factor_ck = 0.0;
};

// Averages over sampled product vertices of C_k and Eff on the materialized
// tensor product, plus the average C_k over all vertices of G.
inline LocalSample local_structure(const Graph& g, const Graph& h, std::size_t k, std::size_t vertex_sample, Rng& rng,
                                   const CliqueOptions& opts) {
  const Product prod = tensor_product(g, h);
  const std::size_t total = prod.graph.order();
  std::vector<vertex_t> sample;
  if (vertex_sample == 0 || vertex_sample >= total) {
    for (std::size_t i = 0; i < total; ++i) sample.push_back(static_cast<vertex_t>(i));
  } else {
    for (std::size_t i = 0; i < vertex_sample; ++i) sample.push_back(static_cast<vertex_t>(rng.below(total)));
  }
  LocalSample out;
  for (vertex_t x : sample) {
    const VertexMetrics m = vertex_metrics(prod.graph, x, k, opts);
    out.product_ck += m.c_k;
    out.product_eff += m.eff;
  }
  out.product_ck /= static_cast<double>(sample.size());
  out.product_eff /= static_cast<double>(sample.size());
  for (vertex_t u = 0; u < g.order(); ++u) out.factor_ck += clustering_k(g, u, k, opts);
  out.factor_ck /= static_cast<double>(g.order());
  return out;
}

// I(G x H): counted on the product when it fits, otherwise from the factors
// through "(u,v) is isolated iff u or v is isolated".
inline double product_isolated(const Graph& g, const Graph& h, std::size_t materialize_limit, bool& direct) {
  direct = g.order() * h.order() <= materialize_limit;
  if (direct) return static_cast<double>(isolation_report(tensor_product(g, h).graph).isolated_count);
  const auto ig = static_cast<double>(isolation_report(g).isolated_count);
  const auto ih = static_cast<double>(isolation_report(h).isolated_count);
  return static_cast<double>(h.order()) * ig + static_cast<double>(g.order()) * ih - ig * ih;
}

// omega(G x H): solved on the product when it fits, otherwise as
// min(omega(G), omega(H)) (a product clique projects to cliques of equal size
// in both factors, and any pair of equal-size cliques lifts back).
inline std::size_t tensor_clique_number(const Graph& g, const Graph& h, std::size_t materialize_limit,
                                        const CliqueOptions& opts, bool& direct) {
  direct = g.order() * h.order() <= materialize_limit;
  if (direct) return max_clique(tensor_product(g, h).graph, opts).omega;
  return std::min(max_clique(g, opts).omega, max_clique(h, opts).omega);
}

inline double exact_to_double(const Real& r) { return r.convert_to<double>(); }

inline Rational rational_p(double p) { return Rational(p); }

inline ExperimentReport clique_count(const ExperimentConfig& cfg, bool variance) {
  ExperimentReport report{cfg, {}, {}, {}};
  const auto opts = clique_options(cfg);
  const std::string name = "Z_" + std::to_string(cfg.k);
  for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
    const std::size_t n = cfg.n_grid[gi];
    require_materializable(cfg, n);
    const auto values = run_indexed(cfg.replicas, cfg.threads, [&](std::size_t r) {
      Rng rng(replica_seed(cfg, 0, gi, r));
      const Graph g = generate(er_spec(n, cfg.p), rng);
      const Graph h = generate(er_spec(n, cfg.p), rng);
      return count_k_cliques(tensor_product(g, h).graph, cfg.k, opts).count(cfg.k).convert_to<double>();
    });
    const Real p(cfg.p);
    if (!variance) {
      const double expected = exact_to_double(theory::expected_zk(n, p, cfg.k));
      report.rows.push_back(make_row(n, name, summarize(values), values.size(), expected));
    } else {
      const Real var_x = theory::variance_xk(n, p, cfg.k);
      const Real mean_x = theory::expected_xk(n, p, cfg.k);
      const double expected = exact_to_double(theory::var_zk_from_varxk(var_x, mean_x, cfg.k));
      report.rows.push_back(make_row(n, "Var(" + name + ")", summarize_variance(values), values.size(), expected));
    }
    const ReportRow& row = report.rows.back();
    report.acceptance.require(row.z.has_value() ? std::abs(*row.z) < cfg.z_threshold
                                                : row.theory && row.mean == *row.theory,
                              row.statistic + " at n=" + std::to_string(n) + " z=" +
                                  (row.z ? std::to_string(*row.z) : std::string("n/a")));
  }
  return report;
}

inline ExperimentReport max_clique_growth(const ExperimentConfig& cfg) {
  ExperimentReport report{cfg, {}, {}, {}};
  const auto opts = clique_options(cfg);
  for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
    const std::size_t n = cfg.n_grid[gi];
    std::vector<char> direct(cfg.replicas, 0);
    const auto omegas = run_indexed(cfg.replicas, cfg.threads, [&](std::size_t r) {
      Rng rng(replica_seed(cfg, 0, gi, r));
      const Graph g = generate(er_spec(n, cfg.p), rng);
      const Graph h = generate(er_spec(n, cfg.p), rng);
      bool d = false;
      const auto w = static_cast<double>(tensor_clique_number(g, h, cfg.materialize_limit, opts, d));
      direct[r] = d;
      return w;
    });
    const Real nn(n);
    const Real p(cfg.p);
    const double reference = exact_to_double(Real(2) * log(nn) / log(Real(1) / p));
    const double upper = std::ceil(exact_to_double(theory::clique_threshold_upper(nn, p)));
    const double lower = std::floor(exact_to_double(theory::lower_threshold_value(nn, p, Real(cfg.threshold_m))));
    std::vector<double> inside;
    for (double w : omegas) inside.push_back(w >= lower && w <= upper ? 1.0 : 0.0);
    ReportRow row = make_row(n, "omega(GxH)", summarize(omegas), omegas.size(), reference);
    row.extras["k_lower_floor"] = lower;
    row.extras["k_upper_ceil"] = upper;
    row.extras["min"] = *std::min_element(omegas.begin(), omegas.end());
    row.extras["max"] = *std::max_element(omegas.begin(), omegas.end());
    row.extras["materialized"] = std::all_of(direct.begin(), direct.end(), [](char c) { return c != 0; }) ? 1.0 : 0.0;
    report.rows.push_back(std::move(row));
    const Summary band = summarize(inside);
    report.rows.push_back(make_row(n, "in-threshold-band", band, inside.size(), std::nullopt));
    report.acceptance.require(band.mean == 1.0, "every omega(GxH) at n=" + std::to_string(n) + " lies in [" +
                                                    std::to_string(static_cast<int>(lower)) + ", " +
                                                    std::to_string(static_cast<int>(upper)) + "]");
  }
  return report;
}

}  // namespace detail

struct ConvergenceVerdict {
  std::vector<double> deviations;  // |mean - theory| per grid point
  bool monotone = false;           // deviations non-increasing
  double final_deviation = 0.0;
  bool within_tolerance = false;
  bool passed() const noexcept { return monotone && within_tolerance; }
};

/// Checks that |empirical mean - limit| is non-increasing along the grid and
/// ends below `tolerance`.
inline ConvergenceVerdict summarize_convergence(const ExperimentReport& report, std::string_view statistic,
                                                double tolerance) {
  ConvergenceVerdict v;
  for (const ReportRow* r : report.series(statistic)) {
    if (!r->theory) throw invalid_parameters("statistic " + std::string(statistic) + " has no limit value");
    v.deviations.push_back(std::abs(r->mean - *r->theory));
  }
  if (v.deviations.empty()) throw invalid_parameters("report has no rows for " + std::string(statistic));
  v.monotone = true;
  for (std::size_t i = 1; i < v.deviations.size(); ++i)
    if (v.deviations[i] > v.deviations[i - 1]) v.monotone = false;
  v.final_deviation = v.deviations.back();
  v.within_tolerance = v.final_deviation < tolerance;
  return v;
}

namespace detail {

inline ExperimentReport local_convergence(const ExperimentConfig& cfg, bool efficiency) {
  ExperimentReport report{cfg, {}, {}, {}};
  const auto opts = clique_options(cfg);
  const std::size_t k = efficiency ? 2 : cfg.k;
  const std::string ck_product = clustering_name(k, "GxH");
  const std::string ck_factor = clustering_name(k, "G");
  for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
    const std::size_t n = cfg.n_grid[gi];
    require_materializable(cfg, n);
    const auto samples = run_indexed(cfg.replicas, cfg.threads, [&](std::size_t r) {
      Rng rng(replica_seed(cfg, 0, gi, r));
      const Graph g = generate(er_spec(n, cfg.p), rng);
      const Graph h = generate(er_spec(n, cfg.p), rng);
      return local_structure(g, h, k, cfg.vertex_sample, rng, opts);
    });
    std::vector<double> ck, eff, fk;
    for (const auto& s : samples) {
      ck.push_back(s.product_ck);
      eff.push_back(s.product_eff);
      fk.push_back(s.factor_ck);
    }
    const double p = cfg.p;
    const double product_limit = theory::product_clustering_limit(p, k);
    const double factor_limit = std::pow(p, static_cast<double>(k * (k - 1) / 2));
    const double eff_limit = theory::product_efficiency_limit(p);
    report.rows.push_back(make_row(n, ck_product, summarize(ck), ck.size(), product_limit));
    report.rows.push_back(make_row(n, "Eff(GxH)", summarize(eff), eff.size(), eff_limit));
    report.rows.push_back(make_row(n, ck_factor, summarize(fk), fk.size(), factor_limit));
  }
  const std::string primary = efficiency ? "Eff(GxH)" : ck_product;
  const ConvergenceVerdict verdict = summarize_convergence(report, primary, cfg.convergence_tolerance);
  std::string devs;
  for (double d : verdict.deviations) devs += (devs.empty() ? "" : ", ") + std::to_string(d);
  report.acceptance.require(verdict.monotone, primary + " deviations non-increasing [" + devs + "]");
  report.acceptance.require(verdict.within_tolerance, primary + " final deviation " +
                                                          std::to_string(verdict.final_deviation) + " < " +
                                                          std::to_string(cfg.convergence_tolerance));
  return report;
}

inline ExperimentReport isolated(const ExperimentConfig& cfg, bool wlln) {
  ExperimentReport report{cfg, {}, {}, {}};
  bool any_factor_route = false;
  for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
    const std::size_t n = cfg.n_grid[gi];
    const double p = wlln ? cfg.c / static_cast<double>(n) : cfg.p;
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_parameters("edge probability outside [0, 1]");
    std::vector<char> direct(cfg.replicas, 0);
    const auto counts = run_indexed(cfg.replicas, cfg.threads, [&](std::size_t r) {
      Rng rng(replica_seed(cfg, 0, gi, r));
      const Graph g = generate(er_spec(n, p), rng);
      const Graph h = generate(er_spec(n, p), rng);
      bool d = false;
      const double value = product_isolated(g, h, cfg.materialize_limit, d);
      direct[r] = d;
      return value;
    });
    any_factor_route = any_factor_route || std::any_of(direct.begin(), direct.end(), [](char c) { return c == 0; });
    const double expected = theory::isolated_product_mean(n, Real(p)).mean.convert_to<double>();
    ReportRow raw = make_row(n, "I(GxH)", summarize(counts), counts.size(), expected);
    raw.extras["p"] = p;
    report.rows.push_back(raw);
    if (!wlln) {
      const ReportRow& row = report.rows.back();
      report.acceptance.require(row.z ? std::abs(*row.z) < cfg.z_threshold : row.mean == expected,
                                "I(GxH) at n=" + std::to_string(n) + " z=" + (row.z ? std::to_string(*row.z) : "n/a"));
    } else {
      std::vector<double> ratios;
      for (double c : counts) ratios.push_back(expected > 0.0 ? c / expected : 0.0);
      report.rows.push_back(make_row(n, "I(GxH)/E[I(GxH)]", summarize(ratios), ratios.size(), 1.0));
    }
  }
  if (wlln) {
    const ReportRow& last = report.rows.back();
    report.acceptance.require(std::abs(last.mean - 1.0) <= cfg.wlln_tolerance,
                              "ratio at n=" + std::to_string(last.n) + " is " + std::to_string(last.mean) +
                                  ", tolerance " + std::to_string(cfg.wlln_tolerance));
  }
  if (any_factor_route)
    report.notes.push_back("I(GxH) beyond the materialize limit counted from the factors");
  return report;
}

inline ExperimentReport model_comparison(const ExperimentConfig& cfg) {
  ExperimentReport report{cfg, {}, {}, {}};
  const auto opts = clique_options(cfg);
  for (std::size_t mi = 0; mi < cfg.models.size(); ++mi) {
    const Model model = cfg.models[mi];
    for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
      const std::size_t n = cfg.n_grid[gi];
      require_materializable(cfg, n);
      const GeneratorSpec spec = density_calibrated_spec(model, n, cfg.density);
      const auto samples = run_indexed(cfg.replicas, cfg.threads, [&](std::size_t r) {
        Rng rng(replica_seed(cfg, mi + 1, gi, r));
        const Graph g = generate(spec, rng);
        const Graph h = generate(spec, rng);
        return local_structure(g, h, 2, cfg.vertex_sample, rng, opts).product_ck;
      });
      ReportRow row = make_row(n, "C_2(GxH)[" + std::string(to_string(model)) + "]", summarize(samples),
                               samples.size(), std::nullopt);
      row.extras["expected_density"] = spec.expected_density();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline ExperimentReport modular_vs_tensor(const ExperimentConfig& cfg) {
  ExperimentReport report{cfg, {}, {}, {}};
  const auto opts = clique_options(cfg);
  struct Triple {
    double single = 0, tensor = 0, modular = 0;
  };
  for (std::size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
    const std::size_t n = cfg.n_grid[gi];
    require_materializable(cfg, n);
    const auto samples = run_indexed(cfg.replicas, cfg.threads, [&](std::size_t r) {
      Rng rng(replica_seed(cfg, 0, gi, r));
      const Graph g = generate(er_spec(n, cfg.p), rng);
      const Graph h = generate(er_spec(n, cfg.p), rng);
      Triple t;
      t.single = static_cast<double>(max_clique(g, opts).omega);
      t.tensor = static_cast<double>(max_clique(tensor_product(g, h).graph, opts).omega);
      t.modular = static_cast<double>(max_clique(modular_product(g, h).graph, opts).omega);
      return t;
    });
    std::vector<double> single, tensor, modular;
    for (const auto& t : samples) {
      single.push_back(t.single);
      tensor.push_back(t.tensor);
      modular.push_back(t.modular);
    }
    const Summary s = summarize(single);
    const Summary t = summarize(tensor);
    const Summary m = summarize(modular);
    report.rows.push_back(make_row(n, "omega(G)", s, single.size(), std::nullopt));
    report.rows.push_back(make_row(n, "omega(GxH)", t, tensor.size(), std::nullopt));
    report.rows.push_back(make_row(n, "omega(GxmH)", m, modular.size(), std::nullopt));
    const std::string at = " at n=" + std::to_string(n);
    report.acceptance.require(std::abs(t.mean - s.mean) <= 1.0, "tensor " + std::to_string(t.mean) +
                                                                    " within 1.0 of single " +
                                                                    std::to_string(s.mean) + at);
    report.acceptance.require(m.mean > t.mean && m.mean > s.mean,
                              "modular " + std::to_string(m.mean) + " exceeds tensor and single" + at);
    if (n >= 10) {
      const double ratio = t.mean > 0.0 ? m.mean / t.mean : 0.0;
      report.acceptance.require(ratio >= 1.5 && ratio <= 2.5,
                                "modular/tensor ratio " + std::to_string(ratio) + " in [1.5, 2.5]" + at);
    }
  }
  return report;
}

}  // namespace detail

inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  switch (cfg.experiment) {
    case Experiment::clique_count_mean: return detail::clique_count(cfg, false);
    case Experiment::clique_count_variance: return detail::clique_count(cfg, true);
    case Experiment::max_clique_growth: return detail::max_clique_growth(cfg);
    case Experiment::clustering_convergence: return detail::local_convergence(cfg, false);
    case Experiment::efficiency_convergence: return detail::local_convergence(cfg, true);
    case Experiment::isolated_mean: return detail::isolated(cfg, false);
    case Experiment::isolated_wlln: return detail::isolated(cfg, true);
    case Experiment::model_comparison: return detail::model_comparison(cfg);
    case Experiment::modular_vs_tensor_clique: return detail::modular_vs_tensor(cfg);
  }
  throw invalid_parameters("unhandled experiment");
}

/// Long-format CSV, one series per statistic:
///   series,n,mean,standard_error,theory
/// `theory` is empty where the experiment has no prediction.
inline void write_plot_data(std::ostream& os, const ExperimentReport& report) {
  if (report.rows.empty()) throw invalid_parameters("report has no rows to export");
  std::vector<std::string> order;
  for (const auto& r : report.rows)
    if (std::find(order.begin(), order.end(), r.statistic) == order.end()) order.push_back(r.statistic);
  os << "series,n,mean,standard_error,theory\n";
  os.precision(17);
  for (const auto& name : order) {
    for (const ReportRow* r : report.series(name)) {
      os << '"' << name << "\"," << r->n << ',' << r->mean << ',' << r->standard_error << ',';
      if (r->theory) os << *r->theory;
      os << '\n';
    }
  }
}

inline void export_plot_data(const ExperimentReport& report, const std::filesystem::path& path) {
  if (report.rows.empty()) throw invalid_parameters("report has no rows to export");
  write_file_atomic(path, [&](std::ostream& os) { write_plot_data(os, report); });
}

}  // namespace gprod::mc
