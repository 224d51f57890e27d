#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gprod/error.hpp"

namespace gprod {

using vertex_t = std::uint32_t;
using word_t = std::uint64_t;

namespace bits {

inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + word_bits - 1) / word_bits; }

inline bool test(std::span<const word_t> row, std::size_t i) {
  return (row[i / word_bits] >> (i % word_bits)) & 1U;
}

inline void set(std::span<word_t> row, std::size_t i) {
  row[i / word_bits] |= word_t{1} << (i % word_bits);
}

inline void reset(std::span<word_t> row, std::size_t i) {
  row[i / word_bits] &= ~(word_t{1} << (i % word_bits));
}

inline std::size_t count(std::span<const word_t> row) {
  std::size_t c = 0;
  for (word_t w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t count_and(std::span<const word_t> a, std::span<const word_t> b) {
  assert(a.size() == b.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// Calls f(index) for every set bit, in increasing order.
template <class F>
void for_each(std::span<const word_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    word_t word = row[w];
    while (word != 0) {
      const auto b = static_cast<std::size_t>(std::countr_zero(word));
      f(w * word_bits + b);
      word &= word - 1;
    }
  }
}

/// dst[offset .. offset+nbits) |= src[0 .. nbits). src must have no bits at or
/// above nbits.
inline void or_shifted(std::span<word_t> dst, std::span<const word_t> src, std::size_t nbits,
                       std::size_t offset) {
  const std::size_t src_words = words_for(nbits);
  const std::size_t word_off = offset / word_bits;
  const std::size_t shift = offset % word_bits;
  if (shift == 0) {
    for (std::size_t i = 0; i < src_words; ++i) dst[word_off + i] |= src[i];
    return;
  }
  for (std::size_t i = 0; i < src_words; ++i) {
    const word_t w = src[i];
    if (w == 0) continue;
    dst[word_off + i] |= w << shift;
    const word_t spill = w >> (word_bits - shift);
    if (spill != 0) dst[word_off + i + 1] |= spill;
  }
}

}  // namespace bits

/// Simple undirected graph over vertices 0..n-1, stored as a dense row-major
/// adjacency bitmatrix. Symmetric with an empty diagonal.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n, std::string label = {})
      : n_(n), words_(bits::words_for(n)), adj_(n * bits::words_for(n), 0), label_(std::move(label)) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Unchecked row access for hot loops.
  std::span<const word_t> row(vertex_t v) const noexcept {
    assert(v < n_);
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  /// Raw row access for builders; the caller keeps the matrix symmetric.
  std::span<word_t> mutable_row(vertex_t v) noexcept {
    assert(v < n_);
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool adjacent(vertex_t u, vertex_t v) const {
    check_vertex(u);
    check_vertex(v);
    return bits::test(row(u), v);
  }

  void add_edge(vertex_t u, vertex_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_parameters("self-loop on vertex " + std::to_string(u));
    bits::set(mutable_row(u), v);
    bits::set(mutable_row(v), u);
  }

  void remove_edge(vertex_t u, vertex_t v) {
    check_vertex(u);
    check_vertex(v);
    bits::reset(mutable_row(u), v);
    bits::reset(mutable_row(v), u);
  }

  std::size_t degree(vertex_t v) const {
    check_vertex(v);
    return bits::count(row(v));
  }

  std::vector<vertex_t> neighborhood(vertex_t v) const {
    check_vertex(v);
    std::vector<vertex_t> out;
    bits::for_each(row(v), [&](std::size_t w) { out.push_back(static_cast<vertex_t>(w)); });
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (vertex_t v = 0; v < n_; ++v) twice += bits::count(row(v));
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<vertex_t, vertex_t>> edges() const {
    std::vector<std::pair<vertex_t, vertex_t>> out;
    for (vertex_t u = 0; u < n_; ++u) {
      bits::for_each(row(u), [&](std::size_t v) {
        if (v > u) out.emplace_back(u, static_cast<vertex_t>(v));
      });
    }
    return out;
  }

  /// Symmetric adjacency, empty diagonal, no bits past column n-1.
  bool is_simple() const {
    for (vertex_t u = 0; u < n_; ++u) {
      auto r = row(u);
      if (bits::test(r, u)) return false;
      if (n_ % bits::word_bits != 0 && words_ > 0 && (r[words_ - 1] >> (n_ % bits::word_bits)) != 0)
        return false;
      bool symmetric = true;
      bits::for_each(r, [&](std::size_t v) {
        if (!bits::test(row(static_cast<vertex_t>(v)), u)) symmetric = false;
      });
      if (!symmetric) return false;
    }
    return true;
  }

  /// Subgraph induced by `vs`; vertex i of the result is vs[i].
  Graph induced(std::span<const vertex_t> vs) const {
    Graph out(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      check_vertex(vs[i]);
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (bits::test(row(vs[i]), vs[j])) {
          bits::set(out.mutable_row(static_cast<vertex_t>(i)), j);
          bits::set(out.mutable_row(static_cast<vertex_t>(j)), i);
        }
      }
    }
    return out;
  }

  /// Labels are cosmetic and do not take part in equality.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check_vertex(vertex_t v) const {
    if (v >= n_)
      throw vertex_out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                                std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<word_t> adj_;
  std::string label_;
};

inline std::size_t degree(const Graph& g, vertex_t v) { return g.degree(v); }

inline std::vector<vertex_t> neighborhood(const Graph& g, vertex_t v) { return g.neighborhood(v); }

inline Graph complete_graph(std::size_t n) {
  Graph g(n, "complete");
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n, "path");
  for (vertex_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, static_cast<vertex_t>(n - 1));
  g.set_label("cycle");
  return g;
}

inline Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1, "star");
  for (vertex_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace gprod
