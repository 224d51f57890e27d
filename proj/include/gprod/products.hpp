#pragma once

#include <cstddef>
#include <ostream>
#include <string_view>
#include <utility>
#include <vector>

#include "gprod/error.hpp"
#include "gprod/graph.hpp"

namespace gprod {

enum class ProductKind { tensor, modular };

inline constexpr std::string_view to_string(ProductKind k) {
  return k == ProductKind::tensor ? "tensor" : "modular";
}

inline ProductKind parse_product_kind(std::string_view s) {
  if (s == "tensor") return ProductKind::tensor;
  if (s == "modular") return ProductKind::modular;
  throw invalid_parameters("unknown product kind \"" + std::string(s) + "\"");
}

/// Row-major pair indexing: (u, v) <-> u * n_h + v.
struct ProductVertexMap {
  std::size_t n_g = 0;
  std::size_t n_h = 0;

  std::size_t size() const noexcept { return n_g * n_h; }

  vertex_t index(vertex_t u, vertex_t v) const noexcept {
    return static_cast<vertex_t>(static_cast<std::size_t>(u) * n_h + v);
  }

  std::pair<vertex_t, vertex_t> pair(vertex_t index) const noexcept {
    return {static_cast<vertex_t>(index / n_h), static_cast<vertex_t>(index % n_h)};
  }

  /// Sidecar mapping file: one "index u v" line per product vertex.
  void write(std::ostream& os) const {
    for (std::size_t i = 0; i < size(); ++i) {
      const auto [u, v] = pair(static_cast<vertex_t>(i));
      os << i << ' ' << u << ' ' << v << '\n';
    }
  }
};

struct ProductOptions {
  std::size_t vertex_cap = 250'000;
};

struct Product {
  Graph graph;
  ProductVertexMap map;
};

namespace detail {

inline ProductVertexMap checked_map(const Graph& g, const Graph& h, const ProductOptions& opts) {
  if (g.order() == 0 || h.order() == 0) throw invalid_parameters("product factors must be non-empty");
  const std::size_t n = g.order() * h.order();
  if (n / g.order() != h.order() || n > opts.vertex_cap || n > UINT32_MAX)
    throw size_overflow("product of " + std::to_string(g.order()) + " x " + std::to_string(h.order()) +
                        " vertices exceeds the vertex cap of " + std::to_string(opts.vertex_cap));
  return {g.order(), h.order()};
}

}  // namespace detail

/// (u,v) ~ (u',v') iff u ~ u' in g and v ~ v' in h.
inline Product tensor_product(const Graph& g, const Graph& h, const ProductOptions& opts = {}) {
  const ProductVertexMap map = detail::checked_map(g, h, opts);
  Graph out(map.size(), "tensor");
  const std::size_t nh = h.order();
  for (vertex_t u = 0; u < g.order(); ++u) {
    for (vertex_t v = 0; v < nh; ++v) {
      auto dst = out.mutable_row(map.index(u, v));
      const auto hrow = h.row(v);
      bits::for_each(g.row(u), [&](std::size_t u2) { bits::or_shifted(dst, hrow, nh, u2 * nh); });
    }
  }
  return {std::move(out), map};
}

/// (u,v) ~ (u',v') iff u != u', v != v' and the two factor pairs are either
/// both adjacent or both non-adjacent.
inline Product modular_product(const Graph& g, const Graph& h, const ProductOptions& opts = {}) {
  const ProductVertexMap map = detail::checked_map(g, h, opts);
  Graph out(map.size(), "modular");
  const std::size_t nh = h.order();
  const std::size_t hw = h.words_per_row();
  std::vector<word_t> non_adjacent(hw);
  for (vertex_t v = 0; v < nh; ++v) {
    // complement of N_H(v) without v itself
    const auto hrow = h.row(v);
    for (std::size_t w = 0; w < hw; ++w) non_adjacent[w] = ~hrow[w];
    if (nh % bits::word_bits != 0) non_adjacent[hw - 1] &= (word_t{1} << (nh % bits::word_bits)) - 1;
    bits::reset(non_adjacent, v);
    for (vertex_t u = 0; u < g.order(); ++u) {
      auto dst = out.mutable_row(map.index(u, v));
      const auto grow = g.row(u);
      for (vertex_t u2 = 0; u2 < g.order(); ++u2) {
        if (u2 == u) continue;
        const bool adjacent = bits::test(grow, u2);
        bits::or_shifted(dst, adjacent ? hrow : std::span<const word_t>(non_adjacent), nh,
                         static_cast<std::size_t>(u2) * nh);
      }
    }
  }
  return {std::move(out), map};
}

inline Product make_product(ProductKind kind, const Graph& g, const Graph& h, const ProductOptions& opts = {}) {
  return kind == ProductKind::tensor ? tensor_product(g, h, opts) : modular_product(g, h, opts);
}

/// True iff every product vertex (u,v) has degree d_G(u) * d_H(v).
inline bool product_degree_check(const Graph& g, const Graph& h, const ProductOptions& opts = {}) {
  const Product p = tensor_product(g, h, opts);
  for (vertex_t u = 0; u < g.order(); ++u)
    for (vertex_t v = 0; v < h.order(); ++v)
      if (p.graph.degree(p.map.index(u, v)) != g.degree(u) * h.degree(v)) return false;
  return true;
}

}  // namespace gprod
