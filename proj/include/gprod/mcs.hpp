#pragma once

// Maximum common induced subgraph. The main route solves maximum clique on
// the modular product; the brute-force route enumerates vertex subsets and
// injections and serves as an independent oracle on small inputs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <utility>
#include <vector>

#include "gprod/cliques.hpp"
#include "gprod/error.hpp"
#include "gprod/graph.hpp"
#include "gprod/products.hpp"

namespace gprod {

enum class McsMethod { modular_clique, brute_force };

inline constexpr std::string_view to_string(McsMethod m) {
  return m == McsMethod::modular_clique ? "modular-clique" : "brute-force";
}

struct McsResult {
  std::size_t size = 0;
  std::vector<std::pair<vertex_t, vertex_t>> mapping;  // (vertex of g, vertex of h)
  McsMethod method = McsMethod::modular_clique;
};

/// Injective in both coordinates and adjacency-preserving in both directions.
inline bool is_common_induced_mapping(const Graph& g, const Graph& h,
                                      const std::vector<std::pair<vertex_t, vertex_t>>& mapping) {
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    const auto [a, b] = mapping[i];
    if (a >= g.order() || b >= h.order()) return false;
    for (std::size_t j = i + 1; j < mapping.size(); ++j) {
      const auto [c, d] = mapping[j];
      if (a == c || b == d) return false;
      if (g.adjacent(a, c) != h.adjacent(b, d)) return false;
    }
  }
  return true;
}

inline McsResult mcs_via_modular_clique(const Graph& g, const Graph& h, const CliqueOptions& opts = {},
                                        const ProductOptions& popts = {}) {
  const Product prod = modular_product(g, h, popts);
  const MaxCliqueResult clique = max_clique(prod.graph, opts);
  McsResult out;
  out.size = clique.omega;
  out.method = McsMethod::modular_clique;
  for (vertex_t x : clique.witness) out.mapping.push_back(prod.map.pair(x));
  std::sort(out.mapping.begin(), out.mapping.end());
  return out;
}

namespace detail {

class McsBruteForce {
 public:
  McsBruteForce(const Graph& g, const Graph& h) : g_(g), h_(h), used_(h.order(), 0) {}

  /// Tries every size-s subset of g (lexicographic) against every injection
  /// into h. Returns true and fills `mapping` on success.
  bool search(std::size_t s, std::vector<std::pair<vertex_t, vertex_t>>& mapping) {
    subset_.clear();
    return choose_subset(0, s, mapping);
  }

 private:
  bool choose_subset(vertex_t from, std::size_t s, std::vector<std::pair<vertex_t, vertex_t>>& mapping) {
    if (subset_.size() == s) {
      image_.clear();
      if (assign(0)) {
        mapping.clear();
        for (std::size_t i = 0; i < s; ++i) mapping.emplace_back(subset_[i], image_[i]);
        return true;
      }
      return false;
    }
    for (vertex_t v = from; v + (s - subset_.size()) <= g_.order(); ++v) {
      subset_.push_back(v);
      if (choose_subset(v + 1, s, mapping)) return true;
      subset_.pop_back();
    }
    return false;
  }

  bool assign(std::size_t i) {
    if (i == subset_.size()) return true;
    for (vertex_t b = 0; b < h_.order(); ++b) {
      if (used_[b]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = g_.adjacent(subset_[i], subset_[j]) == h_.adjacent(b, image_[j]);
      if (!ok) continue;
      used_[b] = 1;
      image_.push_back(b);
      if (assign(i + 1)) {
        used_[b] = 0;
        return true;
      }
      image_.pop_back();
      used_[b] = 0;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<vertex_t> subset_;
  std::vector<vertex_t> image_;
  std::vector<char> used_;
};

}  // namespace detail

inline constexpr double brute_force_work_cap = 5e8;

/// Exact MCS by exhaustive search over subset sizes, largest first. Rejects
/// inputs whose worst-case work sum_s C(n_g, s) P(n_h, s) exceeds the cap.
inline McsResult mcs_brute_force(const Graph& g, const Graph& h, std::size_t size_cap) {
  if (size_cap < 1) throw invalid_parameters("size_cap must be >= 1");
  const std::size_t top = std::min({g.order(), h.order(), size_cap});
  double work = 0;
  for (std::size_t s = 1; s <= top; ++s) {
    double term = 1;
    for (std::size_t i = 0; i < s; ++i)
      term *= static_cast<double>(g.order() - i) / static_cast<double>(i + 1) * static_cast<double>(h.order() - i);
    work += term;
  }
  if (work > brute_force_work_cap)
    throw instance_too_large("brute-force MCS on " + std::to_string(g.order()) + " x " +
                             std::to_string(h.order()) + " vertices is too large");
  McsResult out;
  out.method = McsMethod::brute_force;
  detail::McsBruteForce solver(g, h);
  for (std::size_t s = top; s >= 1; --s) {
    if (solver.search(s, out.mapping)) {
      out.size = s;
      return out;
    }
  }
  return out;
}

}  // namespace gprod
