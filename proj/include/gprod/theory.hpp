#pragma once

// Closed-form predictions for cliques, clique-number thresholds and isolated
// vertices in G(n, p) and in tensor products of two independent G(n, p).
//
// Polynomial formulas are templates over the scalar type: instantiate with
// Rational for exact checks, Real (50 digits) for reporting, or double.

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gprod/error.hpp"
#include "gprod/numeric.hpp"

namespace gprod::theory {

namespace detail {

template <class T>
void check_probability(const T& p) {
  if (p < T(0) || p > T(1)) throw domain_error("p must lie in [0, 1]");
}

template <class T>
void check_open_probability(const T& p) {
  if (p <= T(0) || p >= T(1)) throw domain_error("p must lie in (0, 1)");
}

inline long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace detail

/// E[X_k] = C(n,k) p^C(k,2).
template <class T>
T expected_xk(std::size_t n, const T& p, std::size_t k) {
  detail::check_probability(p);
  if (k < 1 || k > n) throw domain_error("expected_xk needs 1 <= k <= n");
  return from_big<T>(binomial(n, k)) * ipow(p, detail::choose2(static_cast<long long>(k)));
}

/// E[Z_k] = k! C(n,k)^2 p^(k(k-1)).
template <class T>
T expected_zk(std::size_t n, const T& p, std::size_t k) {
  detail::check_probability(p);
  if (k < 1 || k > n) throw domain_error("expected_zk needs 1 <= k <= n");
  const BigInt c = binomial(n, k);
  const auto kk = static_cast<long long>(k);
  return from_big<T>(factorial(k) * c * c) * ipow(p, kk * (kk - 1));
}

/// Exact Var(X_k) by overlap size i = |A ∩ B| of two k-sets:
/// C(n,k) sum_i C(k,i) C(n-k,k-i) p^(2C(k,2) - C(i,2)) - E[X_k]^2.
template <class T>
T variance_xk(std::size_t n, const T& p, std::size_t k) {
  detail::check_probability(p);
  if (k < 1 || k > n) throw domain_error("variance_xk needs 1 <= k <= n");
  const auto kk = static_cast<long long>(k);
  T second(0);
  for (std::size_t i = 0; i <= k; ++i) {
    if (k - i > n - k) continue;
    const auto ii = static_cast<long long>(i);
    second += from_big<T>(binomial(k, i) * binomial(n - k, k - i)) *
              ipow(p, 2 * detail::choose2(kk) - detail::choose2(ii));
  }
  const T mean = expected_xk(n, p, k);
  return from_big<T>(binomial(n, k)) * second - mean * mean;
}

/// Var(Z_k) = (k!)^2 (Var(X_k)^2 + 2 Var(X_k) E[X_k]^2).
template <class T>
T var_zk_from_varxk(const T& var_xk, const T& mean_xk, std::size_t k) {
  if (var_xk < T(0)) throw domain_error("variance must be non-negative");
  const BigInt f = factorial(k);
  return from_big<T>(f * f) * (var_xk * var_xk + T(2) * var_xk * mean_xk * mean_xk);
}

/// Variance bound summing over overlaps i = 2..k-1.
template <class T>
T varxk_bound_full(std::size_t n, const T& p, std::size_t k) {
  detail::check_open_probability(p);
  if (k < 2 || k > n) throw domain_error("varxk_bound_full needs 2 <= k <= n");
  const auto kk = static_cast<long long>(k);
  const T lead = from_big<T>(binomial(n, k)) * ipow(p, detail::choose2(kk));
  T sum(0);
  for (std::size_t i = 2; i + 1 <= k; ++i) {
    const auto ii = static_cast<long long>(i);
    sum += from_big<T>(binomial(k, i) * binomial(n - k, k - i)) *
           ipow(p, detail::choose2(kk) - detail::choose2(ii));
  }
  return lead + lead * sum;
}

/// Variance bound keeping only the dominant overlap term, scaled by k^3/2.
template <class T>
T varxk_bound_corollary(std::size_t n, const T& p, std::size_t k) {
  detail::check_open_probability(p);
  if (k < 3 || k > n) throw domain_error("varxk_bound_corollary needs 3 <= k <= n");
  const auto kk = static_cast<long long>(k);
  const T lead = from_big<T>(binomial(n, k)) * ipow(p, detail::choose2(kk));
  const T tail = from_big<T>(binomial(n, k) * binomial(n - k, k - 2)) * ipow(p, kk * (kk - 1)) *
                 from_big<T>(BigInt(kk * kk * kk)) / T(2) / p;
  return lead + tail;
}

/// a_i = C(k,i) C(n-k,k-i) p^(-C(i,2)) for i = 2..k-1.
template <class T>
struct BoundTermSequence {
  std::size_t n = 0;
  std::size_t k = 0;
  T p;
  std::vector<T> terms;  // terms[j] = a_(j+2)

  bool strictly_decreasing() const {
    for (std::size_t j = 1; j < terms.size(); ++j)
      if (!(terms[j] < terms[j - 1])) return false;
    return true;
  }
};

template <class T>
BoundTermSequence<T> bound_term_sequence(std::size_t n, const T& p, std::size_t k) {
  detail::check_open_probability(p);
  if (k < 3 || 2 * k > n) throw domain_error("bound_term_sequence needs 3 <= k <= n/2");
  BoundTermSequence<T> seq{n, k, p, {}};
  for (std::size_t i = 2; i + 1 <= k; ++i)
    seq.terms.push_back(from_big<T>(binomial(k, i) * binomial(n - k, k - i)) *
                        ipow(p, -detail::choose2(static_cast<long long>(i))));
  return seq;
}

/// (2 + a_n) log_{1/p} n with a_n = log_{1/p}(log2 n) / log_{1/p} n.
template <class T>
T clique_threshold_upper(const T& n, const T& p) {
  using std::log;
  detail::check_open_probability(p);
  if (n < T(3)) throw domain_error("clique_threshold_upper needs n >= 3");
  const T base = log(T(1) / p);
  const T log_n = log(n) / base;
  const T a_n = (log(log(n) / log(T(2))) / base) / log_n;
  return (T(2) + a_n) * log_n;
}

inline constexpr double default_threshold_m = 4.01;

/// 2 log_{1/p} n - M log_{1/p}(log2 n) without the k >= 2 precondition; at
/// small n the value can fall below 2 (about 1.63 at n = 64, p = 1/2).
template <class T>
T lower_threshold_value(const T& n, const T& p, const T& m = T(default_threshold_m)) {
  using std::log;
  detail::check_open_probability(p);
  if (!(m > T(4))) throw domain_error("clique_threshold_lower needs M > 4");
  if (n < T(3)) throw domain_error("clique_threshold_lower needs n >= 3");
  const T base = log(T(1) / p);
  return T(2) * log(n) / base - m * log(log(n) / log(T(2))) / base;
}

/// (2 - a_n) log_{1/p} n with a_n = M log_{1/p}(log2 n) / log_{1/p} n, M > 4.
/// Requires n large enough that the value is at least 2.
template <class T>
T clique_threshold_lower(const T& n, const T& p, const T& m = T(default_threshold_m)) {
  const T value = lower_threshold_value(n, p, m);
  if (value < T(2)) throw domain_error("clique_threshold_lower is below 2 for this n");
  return value;
}

template <class T>
struct Moments {
  T mean;
  T variance;
};

/// Mean and variance of the isolated-vertex count of G(n, p).
template <class T>
Moments<T> isolated_moments(std::size_t n, const T& p) {
  detail::check_probability(p);
  if (n < 1) throw domain_error("isolated_moments needs n >= 1");
  const T q = T(1) - p;
  const auto nn = static_cast<long long>(n);
  const T mean = T(nn) * ipow(q, nn - 1);
  // n = 1: the lone vertex is always isolated, so the variance is 0.
  const T inner = n >= 2 ? ipow(q, nn - 2) : T(0);
  const T variance = n >= 2 ? mean * (T(1) + (T(nn) * p - T(1)) * inner) : T(0);
  return {mean, variance};
}

template <class T>
struct ProductIsolation {
  T mean;        // exact E[I(G x H)]
  T normalizer;  // 2 n^2 (1-p)^(n-1)
};

/// E[I(G x H)] = 2n^2 (1-p)^(n-1) - n^2 (1-p)^(2n-2) for independent G, H ~ G(n, p).
template <class T>
ProductIsolation<T> isolated_product_mean(std::size_t n, const T& p) {
  detail::check_probability(p);
  if (n < 1) throw domain_error("isolated_product_mean needs n >= 1");
  const T q = T(1) - p;
  const auto nn = static_cast<long long>(n);
  const T n2 = T(nn * nn);
  const T normalizer = T(2) * n2 * ipow(q, nn - 1);
  return {normalizer - n2 * ipow(q, 2 * nn - 2), normalizer};
}

/// Var(XY) for X, Y iid: Var(X) (Var(X) + 2 E[X]^2).
template <class T>
T var_product_iid(const T& var_x, const T& mean_x) {
  if (var_x < T(0)) throw domain_error("variance must be non-negative");
  return var_x * (var_x + T(2) * mean_x * mean_x);
}

/// Limit of the k-clustering coefficient at a tensor-product vertex: p^(2 C(k,2)).
template <class T>
T product_clustering_limit(const T& p, std::size_t k) {
  return ipow(p, 2 * detail::choose2(static_cast<long long>(k)));
}

/// Limit of the local efficiency at a tensor-product vertex: (1 + p^2) / 2.
template <class T>
T product_efficiency_limit(const T& p) {
  return (T(1) + p * p) / T(2);
}

enum class Kind {
  mean_xk,
  mean_zk,
  var_xk_exact,
  var_zk_exact_from_varxk,
  varxk_bound_full,
  varxk_bound_corollary,
  k_star_upper,
  k_star_lower,
  isolated_mean,
  isolated_var,
  isolated_product_mean,
};

inline constexpr std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::mean_xk: return "mean-xk";
    case Kind::mean_zk: return "mean-zk";
    case Kind::var_xk_exact: return "var-xk-exact";
    case Kind::var_zk_exact_from_varxk: return "var-zk-exact-from-varxk";
    case Kind::varxk_bound_full: return "varxk-bound-full";
    case Kind::varxk_bound_corollary: return "varxk-bound-corollary";
    case Kind::k_star_upper: return "k-star-upper";
    case Kind::k_star_lower: return "k-star-lower";
    case Kind::isolated_mean: return "isolated-mean";
    case Kind::isolated_var: return "isolated-var";
    case Kind::isolated_product_mean: return "isolated-product-mean";
  }
  return "unknown";
}

inline constexpr Kind all_kinds[] = {
    Kind::mean_xk,          Kind::mean_zk,      Kind::var_xk_exact,  Kind::var_zk_exact_from_varxk,
    Kind::varxk_bound_full, Kind::varxk_bound_corollary, Kind::k_star_upper, Kind::k_star_lower,
    Kind::isolated_mean,    Kind::isolated_var, Kind::isolated_product_mean,
};

inline Kind parse_kind(std::string_view s) {
  for (Kind k : all_kinds)
    if (to_string(k) == s) return k;
  throw invalid_parameters("unknown theory kind \"" + std::string(s) + "\"");
}

struct TheoryPrediction {
  Kind kind = Kind::mean_xk;
  std::size_t n = 0;
  Rational p;
  std::size_t k = 0;  // 0 where the formula has no clique size
  Real value;
};

/// Evaluates one formula. Polynomial kinds are computed exactly in p and
/// rounded to Real once; threshold kinds are evaluated in Real.
inline TheoryPrediction predict(Kind kind, std::size_t n, const Rational& p, std::size_t k,
                                const Real& m = Real(default_threshold_m)) {
  TheoryPrediction out{kind, n, p, k, Real(0)};
  auto exact = [&](const Rational& r) { out.value = r.convert_to<Real>(); };
  switch (kind) {
    case Kind::mean_xk: exact(expected_xk(n, p, k)); break;
    case Kind::mean_zk: exact(expected_zk(n, p, k)); break;
    case Kind::var_xk_exact: exact(variance_xk(n, p, k)); break;
    case Kind::var_zk_exact_from_varxk:
      exact(var_zk_from_varxk(variance_xk(n, p, k), expected_xk(n, p, k), k));
      break;
    case Kind::varxk_bound_full: exact(varxk_bound_full(n, p, k)); break;
    case Kind::varxk_bound_corollary: exact(varxk_bound_corollary(n, p, k)); break;
    case Kind::k_star_upper:
      out.k = 0;
      out.value = clique_threshold_upper(Real(n), p.convert_to<Real>());
      break;
    case Kind::k_star_lower:
      out.k = 0;
      out.value = clique_threshold_lower(Real(n), p.convert_to<Real>(), m);
      break;
    case Kind::isolated_mean:
      out.k = 0;
      exact(isolated_moments(n, p).mean);
      break;
    case Kind::isolated_var:
      out.k = 0;
      exact(isolated_moments(n, p).variance);
      break;
    case Kind::isolated_product_mean:
      out.k = 0;
      exact(isolated_product_mean(n, p).mean);
      break;
  }
  return out;
}

}  // namespace gprod::theory
