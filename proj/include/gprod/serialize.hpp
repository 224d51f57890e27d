#pragma once

// JSON and CSV encodings of censuses, metrics, MCS results and experiment
// reports. Big integers are written as decimal strings.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gprod/cliques.hpp"
#include "gprod/mcs.hpp"
#include "gprod/metrics.hpp"
#include "gprod/montecarlo.hpp"

namespace gprod {

inline constexpr int report_schema_version = 1;

inline nlohmann::json census_to_json(const CliqueCensus& census) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t k = 1; k <= census.max_k_evaluated; ++k) j[std::to_string(k)] = census.counts[k].str();
  return j;
}

inline void write_per_vertex_csv(std::ostream& os, const CliqueCensus& census) {
  os << "v,k,a_k\n";
  for (std::size_t k = 1; k < census.per_vertex.size(); ++k)
    for (std::size_t v = 0; v < census.per_vertex[k].size(); ++v) os << v << ',' << k << ',' << census.per_vertex[k][v] << '\n';
}

inline void write_metrics_csv(std::ostream& os, const std::vector<VertexMetrics>& rows) {
  os << "v,degree,a_k,c_k,eff\n";
  os.precision(17);
  double deg = 0, ak = 0, ck = 0, eff = 0;
  for (const auto& m : rows) {
    os << m.v << ',' << m.degree << ',' << m.a_k << ',' << m.c_k << ',' << m.eff << '\n';
    deg += static_cast<double>(m.degree);
    ak += static_cast<double>(m.a_k);
    ck += m.c_k;
    eff += m.eff;
  }
  if (!rows.empty()) {
    const auto n = static_cast<double>(rows.size());
    os << "mean," << deg / n << ',' << ak / n << ',' << ck / n << ',' << eff / n << '\n';
  }
}

inline nlohmann::json metrics_to_json(const std::vector<VertexMetrics>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& m : rows)
    j.push_back({{"v", m.v}, {"degree", m.degree}, {"a_k", m.a_k}, {"c_k", m.c_k}, {"eff", m.eff}});
  return j;
}

inline nlohmann::json mcs_to_json(const McsResult& r) {
  nlohmann::json mapping = nlohmann::json::array();
  for (const auto& [u, v] : r.mapping) mapping.push_back({u, v});
  return {{"size", r.size}, {"mapping", mapping}, {"method", std::string(to_string(r.method))}};
}

namespace mc {

inline nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json models = nlohmann::json::array();
  for (Model m : c.models) models.push_back(std::string(to_string(m)));
  return {{"experiment", std::string(to_string(c.experiment))},
          {"n_grid", c.n_grid},
          {"p", c.p},
          {"density", c.density},
          {"c", c.c},
          {"k", c.k},
          {"replicas", c.replicas},
          {"seed", c.seed.seed},
          {"stream", c.seed.stream},
          {"models", models},
          {"vertex_sample", c.vertex_sample},
          {"node_budget", c.node_budget},
          {"materialize_limit", c.materialize_limit},
          {"z_threshold", c.z_threshold},
          {"convergence_tolerance", c.convergence_tolerance},
          {"wlln_tolerance", c.wlln_tolerance},
          {"threshold_m", c.threshold_m}};
}

inline nlohmann::json report_to_json(const ExperimentReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = {{"n", r.n},
                          {"statistic", r.statistic},
                          {"mean", r.mean},
                          {"variance", r.variance},
                          {"standard_error", r.standard_error},
                          {"samples", r.samples},
                          {"theory", r.theory ? nlohmann::json(*r.theory) : nlohmann::json(nullptr)},
                          {"z", r.z ? nlohmann::json(*r.z) : nlohmann::json(nullptr)}};
    if (!r.extras.empty()) row["extras"] = r.extras;
    rows.push_back(std::move(row));
  }
  nlohmann::json acceptance = {{"evaluated", report.acceptance.evaluated},
                               {"passed", report.acceptance.passed},
                               {"notes", report.acceptance.notes}};
  return {{"schema", report_schema_version},
          {"version", std::string(version)},
          {"config", config_to_json(report.config)},
          {"rows", rows},
          {"acceptance", acceptance},
          {"notes", report.notes}};
}

}  // namespace mc

}  // namespace gprod
