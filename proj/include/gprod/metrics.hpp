#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "gprod/cliques.hpp"
#include "gprod/error.hpp"
#include "gprod/graph.hpp"
#include "gprod/numeric.hpp"
#include "gprod/products.hpp"

namespace gprod {

/// C_k(v) = A_k(v) / C(d(v), k); defined as 0 when d(v) < k.
inline Rational clustering_k_exact(const Graph& g, vertex_t v, std::size_t k, const CliqueOptions& opts = {}) {
  const std::size_t d = g.degree(v);
  if (k == 0 || d < k) return 0;
  return Rational(BigInt(incident_clique_count(g, v, k, opts)), binomial(d, k));
}

inline double clustering_k(const Graph& g, vertex_t v, std::size_t k, const CliqueOptions& opts = {}) {
  return to_double(clustering_k_exact(g, v, k, opts));
}

/// C(d_g,k) C(d_h,k) / C(d_g d_h, k).
inline Rational d_factor(std::size_t d_g, std::size_t d_h, std::size_t k) {
  if (d_g * d_h < k)
    throw degenerate_degree("degree product " + std::to_string(d_g * d_h) + " is below k = " + std::to_string(k));
  return Rational(binomial(d_g, k) * binomial(d_h, k), binomial(d_g * d_h, k));
}

struct ClusteringIdentity {
  Rational lhs;  // C_k at (u,v) measured on the materialized product
  Rational rhs;  // k! C_k^G(u) C_k^H(v) D
};

inline ClusteringIdentity clustering_k_product_identity(const Graph& g, const Graph& h, vertex_t u, vertex_t v,
                                                        std::size_t k, const CliqueOptions& opts = {}) {
  const std::size_t dg = g.degree(u);
  const std::size_t dh = h.degree(v);
  if (dg * dh < k || k == 0)
    throw degenerate_degree("vertex (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has product degree below k");
  const Product prod = tensor_product(g, h);
  ClusteringIdentity out;
  out.lhs = clustering_k_exact(prod.graph, prod.map.index(u, v), k, opts);
  out.rhs = Rational(factorial(k)) * clustering_k_exact(g, u, k, opts) * clustering_k_exact(h, v, k, opts) *
            d_factor(dg, dh, k);
  return out;
}

/// Average of 1/dist over neighbour pairs. Two neighbours of v are at distance
/// 1 when adjacent and 2 otherwise (through v), so no search is needed.
/// Defined as 0 when d(v) < 2.
inline Rational local_efficiency_exact(const Graph& g, vertex_t v) {
  const std::size_t d = g.degree(v);
  if (d < 2) return 0;
  const BigInt pairs = binomial(d, 2);
  const BigInt adjacent = incident_clique_count(g, v, 2);
  return Rational(BigInt(2) * adjacent + (pairs - adjacent), BigInt(2) * pairs);
}

inline double local_efficiency(const Graph& g, vertex_t v) { return to_double(local_efficiency_exact(g, v)); }

struct VertexMetrics {
  vertex_t v = 0;
  std::size_t degree = 0;
  std::uint64_t a_k = 0;
  double c_k = 0.0;
  double eff = 0.0;
};

inline VertexMetrics vertex_metrics(const Graph& g, vertex_t v, std::size_t k, const CliqueOptions& opts = {}) {
  VertexMetrics m;
  m.v = v;
  m.degree = g.degree(v);
  m.a_k = incident_clique_count(g, v, k, opts);
  m.c_k = (k == 0 || m.degree < k) ? 0.0 : to_double(Rational(BigInt(m.a_k), binomial(m.degree, k)));
  const std::uint64_t a2 = k == 2 ? m.a_k : incident_clique_count(g, v, 2, opts);
  if (m.degree >= 2) {
    const double pairs = static_cast<double>(m.degree) * static_cast<double>(m.degree - 1) / 2.0;
    m.eff = (static_cast<double>(a2) + (pairs - static_cast<double>(a2)) / 2.0) / pairs;
  }
  return m;
}

inline std::vector<VertexMetrics> all_vertex_metrics(const Graph& g, std::size_t k, const CliqueOptions& opts = {}) {
  std::vector<VertexMetrics> out;
  out.reserve(g.order());
  for (vertex_t v = 0; v < g.order(); ++v) out.push_back(vertex_metrics(g, v, k, opts));
  return out;
}

struct IsolationReport {
  std::size_t isolated_count = 0;
  std::map<std::size_t, std::size_t> degree_histogram;  // degree m -> D_m
};

inline IsolationReport isolation_report(const Graph& g) {
  IsolationReport r;
  for (vertex_t v = 0; v < g.order(); ++v) ++r.degree_histogram[g.degree(v)];
  if (auto it = r.degree_histogram.find(0); it != r.degree_histogram.end()) r.isolated_count = it->second;
  return r;
}

/// I(G x H) == n_H I(G) + n_G I(H) - I(G) I(H), with I(G x H) counted on the
/// materialized product.
inline bool product_isolation_identity_check(const Graph& g, const Graph& h) {
  const Product prod = tensor_product(g, h);
  const std::size_t ig = isolation_report(g).isolated_count;
  const std::size_t ih = isolation_report(h).isolated_count;
  const std::size_t ip = isolation_report(prod.graph).isolated_count;
  return ip == h.order() * ig + g.order() * ih - ig * ih;
}

struct DegreeDecomposition {
  std::size_t actual = 0;   // D_m of the materialized product
  std::size_t literal = 0;  // the three indicator sums over factor pairs
  bool agree() const noexcept { return actual == literal; }
};

/// Compares D_m(G x H) against the indicator decomposition
///   sum 1(d_G = d_H = m) + sum 1(d_G = m, d_H > m) + sum 1(d_G > m, d_H = m),
/// evaluated literally. The two agree for m = 0 but not in general, since
/// product degrees are d_G d_H.
inline DegreeDecomposition degree_m_product_decomposition(const Graph& g, const Graph& h, std::size_t m) {
  const Product prod = tensor_product(g, h);
  DegreeDecomposition out;
  if (auto hist = isolation_report(prod.graph).degree_histogram; hist.count(m)) out.actual = hist[m];
  for (vertex_t u = 0; u < g.order(); ++u) {
    const std::size_t du = g.degree(u);
    for (vertex_t v = 0; v < h.order(); ++v) {
      const std::size_t dv = h.degree(v);
      if (du == m && dv == m) ++out.literal;
      if (du == m && dv > m) ++out.literal;
      if (du > m && dv == m) ++out.literal;
    }
  }
  return out;
}

inline bool degree_m_product_decomposition_check(const Graph& g, const Graph& h, std::size_t m) {
  return degree_m_product_decomposition(g, h, m).agree();
}

}  // namespace gprod
