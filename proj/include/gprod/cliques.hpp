#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gprod/error.hpp"
#include "gprod/graph.hpp"
#include "gprod/numeric.hpp"
#include "gprod/products.hpp"

namespace gprod {

struct CliqueOptions {
  /// Hard cap on search-tree nodes; exceeding it throws budget_exceeded.
  std::uint64_t node_budget = 1'000'000'000;
};

/// Clique counts X_k and, optionally, incident counts A_k(v).
struct CliqueCensus {
  /// counts[k] = number of k-cliques for 1 <= k <= max_k_evaluated; counts[0] = 1.
  std::vector<BigInt> counts;
  /// per_vertex[k][v] = A_k(v), the number of k-cliques inside N(v), for
  /// 1 <= k < max_k_evaluated. Empty unless requested.
  std::vector<std::vector<std::uint64_t>> per_vertex;
  std::size_t max_k_evaluated = 0;
  std::uint64_t nodes_explored = 0;

  const BigInt& count(std::size_t k) const {
    if (k > max_k_evaluated) throw invalid_parameters("clique size " + std::to_string(k) + " not evaluated");
    return counts[k];
  }

  bool has_per_vertex() const noexcept { return !per_vertex.empty(); }

  std::size_t largest_nonzero() const {
    std::size_t k = 0;
    while (k + 1 <= max_k_evaluated && counts[k + 1] != 0) ++k;
    return k;
  }
};

struct MaxCliqueResult {
  std::size_t omega = 0;
  std::vector<vertex_t> witness;  // sorted ascending
  std::uint64_t nodes_explored = 0;
};

/// Smallest-last (degeneracy) ordering via the Batagelj-Zaversnik bucket
/// scheme. Ties break by vertex index, so the order is reproducible.
inline std::vector<vertex_t> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (vertex_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (std::size_t d : deg) ++bin[d];
  std::size_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    const std::size_t num = bin[d];
    bin[d] = start;
    start += num;
  }
  std::vector<vertex_t> vert(n);
  std::vector<std::size_t> pos(n);
  for (vertex_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg + 1; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;
  std::vector<char> removed(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const vertex_t v = vert[i];
    removed[v] = 1;
    bits::for_each(g.row(v), [&](std::size_t uu) {
      const auto u = static_cast<vertex_t>(uu);
      if (removed[u] || deg[u] <= deg[v]) return;
      const std::size_t du = deg[u];
      const std::size_t pu = pos[u];
      const std::size_t pw = bin[du];
      const vertex_t w = vert[pw];
      if (u != w) {
        pos[u] = pw;
        vert[pu] = w;
        pos[w] = pu;
        vert[pw] = u;
      }
      ++bin[du];
      --deg[u];
    });
  }
  return vert;
}

/// Copy of g with vertex order[i] renamed to i.
inline Graph relabel(const Graph& g, const std::vector<vertex_t>& order) {
  const std::size_t n = g.order();
  std::vector<vertex_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<vertex_t>(i);
  Graph out(n, g.label());
  for (vertex_t v = 0; v < n; ++v) {
    auto dst = out.mutable_row(rank[v]);
    bits::for_each(g.row(v), [&](std::size_t u) { bits::set(dst, rank[u]); });
  }
  return out;
}

namespace detail {

// Ordered enumeration: a clique is visited once, from its lowest-ranked
// vertex, extending only by higher-ranked common neighbours. One search node
// per visited clique of size < k_max; cliques of size k_max are counted by
// popcount without being visited.
class CliqueCounter {
 public:
  CliqueCounter(const Graph& ordered, const std::vector<vertex_t>& order, std::size_t k_max,
                bool per_vertex, std::uint64_t budget)
      : g_(ordered),
        order_(order),
        k_max_(k_max),
        per_vertex_(per_vertex),
        budget_(budget),
        words_(ordered.words_per_row()),
        buffers_(k_max + 1, std::vector<word_t>(ordered.words_per_row())),
        counts_(k_max + 1, 0) {
    if (per_vertex_) incident_.assign(k_max, std::vector<std::uint64_t>(ordered.order(), 0));
  }

  void run() {
    const std::size_t n = g_.order();
    for (vertex_t x = 0; x < n; ++x) {
      auto& cand = buffers_[1];
      const std::size_t first = x / bits::word_bits;
      const auto row = g_.row(x);
      for (std::size_t i = first; i < words_; ++i) cand[i] = row[i];
      cand[first] &= upper_mask(x);
      clique_.assign(1, x);
      extend(1, first);
    }
    for (std::size_t k = 0; k <= k_max_; ++k) flush(k);
  }

  std::vector<BigInt> counts() const {
    std::vector<BigInt> out(k_max_ + 1, 0);
    out[0] = 1;
    if (k_max_ >= 1) out[1] = g_.order();
    for (std::size_t k = 2; k <= k_max_; ++k) out[k] = totals_.empty() ? BigInt(0) : totals_[k];
    return out;
  }

  /// incident[k][v] indexed by original vertex label.
  std::vector<std::vector<std::uint64_t>> incident() const {
    if (!per_vertex_) return {};
    std::vector<std::vector<std::uint64_t>> out(k_max_, std::vector<std::uint64_t>(g_.order(), 0));
    for (std::size_t k = 1; k < k_max_; ++k)
      for (std::size_t r = 0; r < g_.order(); ++r) out[k][order_[r]] = incident_[k][r];
    return out;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  static word_t upper_mask(std::size_t x) {
    const std::size_t b = x % bits::word_bits;
    return b == bits::word_bits - 1 ? word_t{0} : ~word_t{0} << (b + 1);
  }

  void add(std::size_t k, std::uint64_t c) {
    counts_[k] += c;
    if (counts_[k] > (std::numeric_limits<std::uint64_t>::max() >> 1)) flush(k);
  }

  void flush(std::size_t k) {
    if (totals_.empty()) totals_.assign(k_max_ + 1, 0);
    totals_[k] += counts_[k];
    counts_[k] = 0;
  }

  // Current clique has `size` vertices; buffers_[size] holds their common
  // neighbours ranked above the last vertex, nonzero only from word `first`.
  void extend(std::size_t size, std::size_t first) {
    if (++nodes_ > budget_)
      throw budget_exceeded("clique census exceeded node budget of " + std::to_string(budget_));
    const std::span<const word_t> cand(buffers_[size].data() + first, words_ - first);
    const std::size_t c = bits::count(cand);
    if (size + 1 <= k_max_) add(size + 1, c);
    if (per_vertex_ && c > 0 && size < k_max_) {
      // each (size+1)-clique C + w credits A_size to all of its members
      for (vertex_t m : clique_) incident_[size][m] += c;
      bits::for_each(cand, [&](std::size_t w) { ++incident_[size][first * bits::word_bits + w]; });
    }
    if (size + 1 >= k_max_ || c == 0) return;
    auto& next = buffers_[size + 1];
    bits::for_each(cand, [&](std::size_t off) {
      const std::size_t w = first * bits::word_bits + off;
      const std::size_t wfirst = w / bits::word_bits;
      const auto row = g_.row(static_cast<vertex_t>(w));
      const auto& cur = buffers_[size];
      for (std::size_t i = wfirst; i < words_; ++i) next[i] = cur[i] & row[i];
      next[wfirst] &= upper_mask(w);
      clique_.push_back(static_cast<vertex_t>(w));
      extend(size + 1, wfirst);
      clique_.pop_back();
    });
  }

  const Graph& g_;
  const std::vector<vertex_t>& order_;
  std::size_t k_max_;
  bool per_vertex_;
  std::uint64_t budget_;
  std::size_t words_;
  std::vector<std::vector<word_t>> buffers_;
  std::vector<std::uint64_t> counts_;
  std::vector<BigInt> totals_;
  std::vector<std::vector<std::uint64_t>> incident_;
  std::vector<vertex_t> clique_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact k-clique counts for k = 1..k_max. Vertices are processed in
/// degeneracy order so nodes_explored is reproducible. With per_vertex set,
/// also fills A_k(v) for k < k_max.
inline CliqueCensus count_k_cliques(const Graph& g, std::size_t k_max, const CliqueOptions& opts = {},
                                    bool per_vertex = false) {
  if (k_max < 1) throw invalid_parameters("k_max must be >= 1");
  const auto order = degeneracy_order(g);
  const Graph ordered = relabel(g, order);
  detail::CliqueCounter counter(ordered, order, k_max, per_vertex, opts.node_budget);
  if (k_max >= 2) counter.run();
  CliqueCensus census;
  census.counts = counter.counts();
  census.max_k_evaluated = k_max;
  census.nodes_explored = counter.nodes();
  if (per_vertex) {
    census.per_vertex = counter.incident();
    if (k_max >= 2) {
      // A_1(v) = degree; the enumeration credits it through 2-cliques already.
      for (vertex_t v = 0; v < g.order(); ++v) assert(census.per_vertex[1][v] == g.degree(v));
    }
  }
  return census;
}

namespace detail {

inline std::uint64_t count_inside(const Graph& g, std::vector<std::vector<word_t>>& buffers, std::size_t size,
                                  std::size_t k, std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget)
    throw budget_exceeded("incident clique count exceeded node budget of " + std::to_string(budget));
  const auto& cand = buffers[size];
  if (size + 1 == k) return bits::count(cand);
  std::uint64_t total = 0;
  auto& next = buffers[size + 1];
  bits::for_each(cand, [&](std::size_t w) {
    const auto row = g.row(static_cast<vertex_t>(w));
    const std::size_t wfirst = w / bits::word_bits;
    std::fill(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(wfirst), 0);
    for (std::size_t i = wfirst; i < cand.size(); ++i) next[i] = cand[i] & row[i];
    const std::size_t b = w % bits::word_bits;
    next[wfirst] &= b == bits::word_bits - 1 ? word_t{0} : ~word_t{0} << (b + 1);
    total += count_inside(g, buffers, size + 1, k, nodes, budget);
  });
  return total;
}

}  // namespace detail

/// A_k(v): the number of k-cliques contained in N(v). A_0(v) = 1.
inline std::uint64_t incident_clique_count(const Graph& g, vertex_t v, std::size_t k,
                                           const CliqueOptions& opts = {}) {
  const auto nbrs = g.row(v);
  (void)g.degree(v);  // range check
  if (k == 0) return 1;
  std::vector<std::vector<word_t>> buffers(k + 1, std::vector<word_t>(g.words_per_row()));
  std::copy(nbrs.begin(), nbrs.end(), buffers[0].begin());
  std::uint64_t nodes = 0;
  return detail::count_inside(g, buffers, 0, k, nodes, opts.node_budget);
}

/// A_k(v) for every vertex, each counted inside its own neighbourhood.
inline std::vector<std::uint64_t> per_vertex_clique_counts(const Graph& g, std::size_t k,
                                                           const CliqueOptions& opts = {}) {
  if (k < 1) throw invalid_parameters("k must be >= 1");
  std::vector<std::uint64_t> out(g.order());
  for (vertex_t v = 0; v < g.order(); ++v) out[v] = incident_clique_count(g, v, k, opts);
  return out;
}

namespace detail {

// Bitset branch and bound with greedy sequential colouring as the bound
// (MCQ/BBMC family). Vertices are renumbered so that the highest-core
// vertices come first.
class MaxCliqueSolver {
 public:
  MaxCliqueSolver(const Graph& ordered, std::uint64_t budget)
      : g_(ordered), budget_(budget), words_(ordered.words_per_row()) {}

  void run() {
    std::vector<word_t> all(words_, 0);
    for (std::size_t v = 0; v < g_.order(); ++v) bits::set(all, v);
    expand(all);
  }

  const std::vector<vertex_t>& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void expand(std::vector<word_t> p) {
    if (++nodes_ > budget_)
      throw budget_exceeded("max clique search exceeded node budget of " + std::to_string(budget_));

    // Colour P greedily; keep only vertices whose colour can still improve.
    const std::size_t kmin = best_.size() + 1 > current_.size() ? best_.size() + 1 - current_.size() : 1;
    std::vector<vertex_t> order;
    std::vector<std::size_t> colour;
    std::vector<word_t> uncoloured = p;
    std::vector<word_t> q(words_);
    std::size_t k = 1;
    while (bits::count(uncoloured) > 0) {
      q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * bits::word_bits + static_cast<std::size_t>(std::countr_zero(q[w]));
          bits::reset(q, v);
          bits::reset(uncoloured, v);
          const auto row = g_.row(static_cast<vertex_t>(v));
          for (std::size_t i = w; i < words_; ++i) q[i] &= ~row[i];
          if (k >= kmin) {
            order.push_back(static_cast<vertex_t>(v));
            colour.push_back(k);
          }
        }
      }
      ++k;
    }

    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_.size()) return;
      const vertex_t v = order[i];
      current_.push_back(v);
      std::vector<word_t> next(words_);
      const auto row = g_.row(v);
      bool empty = true;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = p[w] & row[w];
        empty = empty && next[w] == 0;
      }
      if (empty) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      bits::reset(p, v);
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::size_t words_;
  std::vector<vertex_t> current_;
  std::vector<vertex_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact clique number with a witness clique.
inline MaxCliqueResult max_clique(const Graph& g, const CliqueOptions& opts = {}) {
  if (g.order() == 0) throw invalid_parameters("max_clique needs at least one vertex");
  auto order = degeneracy_order(g);
  std::reverse(order.begin(), order.end());
  const Graph ordered = relabel(g, order);
  detail::MaxCliqueSolver solver(ordered, opts.node_budget);
  solver.run();
  MaxCliqueResult result;
  for (vertex_t v : solver.best()) result.witness.push_back(order[v]);
  std::sort(result.witness.begin(), result.witness.end());
  result.omega = result.witness.size();
  result.nodes_explored = solver.nodes();
  return result;
}

inline bool is_clique(const Graph& g, std::span<const vertex_t> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

/// Z_k(G x H) == k! X_k Y_k, with every count enumerated directly.
inline bool tensor_census_identity_check(const Graph& g, const Graph& h, std::size_t k,
                                         const CliqueOptions& opts = {}) {
  const Product prod = tensor_product(g, h);
  const BigInt z = count_k_cliques(prod.graph, k, opts).count(k);
  const BigInt x = count_k_cliques(g, k, opts).count(k);
  const BigInt y = count_k_cliques(h, k, opts).count(k);
  return z == factorial(k) * x * y;
}

}  // namespace gprod
