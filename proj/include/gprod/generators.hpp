#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gprod/error.hpp"
#include "gprod/graph.hpp"
#include "gprod/rng.hpp"

namespace gprod {

enum class Model { erdos_renyi, random_regular, watts_strogatz, barabasi_albert, complete, path, empty };

/// Rewiring probability used for small-world graphs unless overridden.
inline constexpr double default_rewire_probability = 0.3;

inline constexpr std::string_view to_string(Model m) {
  switch (m) {
    case Model::erdos_renyi: return "erdos-renyi";
    case Model::random_regular: return "random-regular";
    case Model::watts_strogatz: return "watts-strogatz";
    case Model::barabasi_albert: return "barabasi-albert";
    case Model::complete: return "complete";
    case Model::path: return "path";
    case Model::empty: return "empty";
  }
  return "unknown";
}

inline Model parse_model(std::string_view s) {
  if (s == "er" || s == "erdos-renyi") return Model::erdos_renyi;
  if (s == "regular" || s == "random-regular") return Model::random_regular;
  if (s == "ws" || s == "watts-strogatz" || s == "small-world") return Model::watts_strogatz;
  if (s == "ba" || s == "barabasi-albert") return Model::barabasi_albert;
  if (s == "complete") return Model::complete;
  if (s == "path") return Model::path;
  if (s == "empty") return Model::empty;
  throw invalid_parameters("unknown model \"" + std::string(s) + "\"");
}

/// Model-specific parameters; only the fields relevant to the model are read.
struct GeneratorParams {
  double p = 0.0;                              // erdos-renyi edge probability
  std::size_t d = 0;                           // random-regular degree
  std::size_t k = 0;                           // watts-strogatz ring degree
  double beta = default_rewire_probability;    // watts-strogatz rewire probability
  std::size_t m = 0;                           // barabasi-albert attachment count
};

struct GeneratorSpec {
  Model model = Model::erdos_renyi;
  std::size_t n = 0;
  GeneratorParams params;

  void validate() const {
    auto bad = [&](const std::string& what) {
      return invalid_parameters(std::string(to_string(model)) + ": " + what);
    };
    switch (model) {
      case Model::erdos_renyi:
        if (!(params.p >= 0.0 && params.p <= 1.0)) throw bad("p must lie in [0, 1]");
        break;
      case Model::random_regular:
        if (params.d >= n && n > 0) throw bad("d must be < n");
        if ((params.d * n) % 2 != 0) throw bad("d*n must be even");
        break;
      case Model::watts_strogatz:
        if (params.k % 2 != 0) throw bad("ring degree k must be even");
        if (params.k >= n) throw bad("ring degree k must be < n");
        if (!(params.beta >= 0.0 && params.beta <= 1.0)) throw bad("beta must lie in [0, 1]");
        break;
      case Model::barabasi_albert:
        if (params.m < 1 || params.m >= n) throw bad("attachment count must satisfy 1 <= m < n");
        break;
      case Model::complete:
      case Model::path:
      case Model::empty:
        break;
    }
  }

  /// Expected edge density |E| / C(n, 2).
  double expected_density() const {
    if (n < 2) return 0.0;
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    switch (model) {
      case Model::erdos_renyi: return params.p;
      case Model::random_regular: return static_cast<double>(params.d) / static_cast<double>(n - 1);
      case Model::watts_strogatz: return static_cast<double>(params.k) / static_cast<double>(n - 1);
      case Model::barabasi_albert: {
        const double m = static_cast<double>(params.m);
        return (m * static_cast<double>(n) - m * (m + 1) / 2.0) / pairs;
      }
      case Model::complete: return 1.0;
      case Model::path: return static_cast<double>(n - 1) / pairs;
      case Model::empty: return 0.0;
    }
    return 0.0;
  }
};

namespace detail {

inline Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

// Pairing with suitability checks (Steger & Wormald): stubs are shuffled and
// paired, failed pairs are recycled until no suitable pair remains.
inline bool try_random_regular(std::size_t n, std::size_t d, Rng& rng, Graph& g) {
  g = Graph(n);
  std::vector<vertex_t> stubs;
  stubs.reserve(n * d);
  for (std::size_t r = 0; r < d; ++r)
    for (vertex_t v = 0; v < n; ++v) stubs.push_back(v);

  std::vector<std::size_t> leftover(n, 0);
  while (!stubs.empty()) {
    std::fill(leftover.begin(), leftover.end(), 0);
    rng.shuffle(std::span<vertex_t>(stubs));
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const vertex_t a = stubs[i];
      const vertex_t b = stubs[i + 1];
      if (a != b && !bits::test(g.row(a), b)) {
        g.add_edge(a, b);
      } else {
        ++leftover[a];
        ++leftover[b];
      }
    }
    std::vector<vertex_t> pending;
    for (vertex_t v = 0; v < n; ++v)
      if (leftover[v] > 0) pending.push_back(v);
    if (!pending.empty()) {
      bool suitable = false;
      for (std::size_t i = 0; i < pending.size() && !suitable; ++i)
        for (std::size_t j = i + 1; j < pending.size() && !suitable; ++j)
          if (!bits::test(g.row(pending[i]), pending[j])) suitable = true;
      if (!suitable) return false;
    }
    stubs.clear();
    for (vertex_t v : pending) stubs.insert(stubs.end(), leftover[v], v);
  }
  return true;
}

inline Graph random_regular(std::size_t n, std::size_t d, Rng& rng) {
  Graph g;
  constexpr int max_attempts = 100000;
  for (int attempt = 0; attempt < max_attempts; ++attempt)
    if (try_random_regular(n, d, rng, g)) return g;
  throw invalid_parameters("random-regular: pairing failed after repeated attempts");
}

inline Graph watts_strogatz(std::size_t n, std::size_t k, double beta, Rng& rng) {
  Graph g(n);
  const std::size_t half = k / 2;
  for (std::size_t j = 1; j <= half; ++j)
    for (vertex_t u = 0; u < n; ++u) g.add_edge(u, static_cast<vertex_t>((u + j) % n));
  for (std::size_t j = 1; j <= half; ++j) {
    for (vertex_t u = 0; u < n; ++u) {
      const auto v = static_cast<vertex_t>((u + j) % n);
      if (!rng.bernoulli(beta)) continue;
      if (g.degree(u) >= n - 1) continue;
      vertex_t w;
      do {
        w = static_cast<vertex_t>(rng.below(n));
      } while (w == u || bits::test(g.row(u), w));
      g.remove_edge(u, v);
      g.add_edge(u, w);
    }
  }
  return g;
}

// Seed clique on vertices 0..m, then each new vertex attaches to m distinct
// existing vertices chosen with probability proportional to degree.
inline Graph barabasi_albert(std::size_t n, std::size_t m, Rng& rng) {
  Graph g(n);
  std::vector<vertex_t> repeated;
  for (vertex_t u = 0; u <= m && u < n; ++u)
    for (vertex_t v = u + 1; v <= m && v < n; ++v) {
      g.add_edge(u, v);
      repeated.push_back(u);
      repeated.push_back(v);
    }
  std::vector<vertex_t> targets;
  std::vector<char> chosen(n, 0);
  for (auto src = static_cast<vertex_t>(m + 1); src < n; ++src) {
    targets.clear();
    while (targets.size() < m) {
      const vertex_t t = repeated[rng.below(repeated.size())];
      if (!chosen[t]) {
        chosen[t] = 1;
        targets.push_back(t);
      }
    }
    for (vertex_t t : targets) {
      g.add_edge(src, t);
      chosen[t] = 0;
      repeated.push_back(t);
      repeated.push_back(src);
    }
  }
  return g;
}

}  // namespace detail

/// Samples a graph from `spec`; a pure function of (spec, seed).
inline Graph generate(const GeneratorSpec& spec, RngSeed seed) {
  spec.validate();
  Rng rng(seed);
  Graph g;
  switch (spec.model) {
    case Model::erdos_renyi: g = detail::erdos_renyi(spec.n, spec.params.p, rng); break;
    case Model::random_regular: g = detail::random_regular(spec.n, spec.params.d, rng); break;
    case Model::watts_strogatz:
      g = detail::watts_strogatz(spec.n, spec.params.k, spec.params.beta, rng);
      break;
    case Model::barabasi_albert: g = detail::barabasi_albert(spec.n, spec.params.m, rng); break;
    case Model::complete: g = complete_graph(spec.n); break;
    case Model::path: g = path_graph(spec.n); break;
    case Model::empty: g = Graph(spec.n); break;
  }
  g.set_label(std::string(to_string(spec.model)));
  assert(g.is_simple());
  return g;
}

/// Samples from `spec` with a caller-owned generator (used when several graphs
/// share one replica stream).
inline Graph generate(const GeneratorSpec& spec, Rng& rng) {
  return generate(spec, RngSeed{rng(), rng()});
}

inline constexpr double density_tolerance = 0.05;

/// Picks model parameters whose expected edge density is closest to `target`.
/// Ties break toward the smaller parameter.
inline GeneratorSpec density_calibrated_spec(Model model, std::size_t n, double target) {
  if (!(target > 0.0 && target < 1.0)) throw invalid_parameters("target density must lie in (0, 1)");
  if (n < 4) throw invalid_parameters("density calibration needs n >= 4");

  GeneratorSpec spec{model, n, {}};
  const double span = static_cast<double>(n - 1);
  switch (model) {
    case Model::erdos_renyi:
      spec.params.p = target;
      break;
    case Model::random_regular: {
      double best = 2.0;
      for (std::size_t d = 0; d < n; ++d) {
        if ((d * n) % 2 != 0) continue;
        const double dev = std::abs(static_cast<double>(d) / span - target);
        if (dev < best) {
          best = dev;
          spec.params.d = d;
        }
      }
      break;
    }
    case Model::watts_strogatz: {
      // Nearest even integer to target*(n-1), kept inside [2, n).
      const double x = target * span;
      auto k = static_cast<std::size_t>(2.0 * std::round(x / 2.0));
      if (k < 2) k = 2;
      while (k >= n) k -= 2;
      spec.params.k = k;
      spec.params.beta = default_rewire_probability;
      break;
    }
    case Model::barabasi_albert: {
      double best = 2.0;
      for (std::size_t m = 1; m < n; ++m) {
        spec.params.m = m;
        const double dev = std::abs(spec.expected_density() - target);
        if (dev < best) best = dev;
      }
      for (std::size_t m = 1; m < n; ++m) {
        spec.params.m = m;
        if (std::abs(spec.expected_density() - target) == best) break;
      }
      break;
    }
    case Model::complete:
    case Model::path:
    case Model::empty:
      break;
  }
  spec.validate();
  const double achieved = spec.expected_density();
  if (std::abs(achieved - target) > density_tolerance)
    throw unachievable_density(std::string(to_string(model)) + " on " + std::to_string(n) +
                               " vertices cannot reach density " + std::to_string(target) +
                               " (closest " + std::to_string(achieved) + ")");
  return spec;
}

}  // namespace gprod
