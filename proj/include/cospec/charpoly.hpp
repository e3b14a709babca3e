#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Exact integer characteristic polynomial of the adjacency matrix,
/// coeffs[i] = coefficient of lambda^i, coeffs.size() = node_count + 1, monic.
struct CharPoly {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  bool operator==(const CharPoly& other) const { return coeffs == other.coeffs; }

  /// Decimal coefficients, constant term first, comma-separated.
  std::string to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (i) out << ',';
      out << coeffs[i].get_str();
    }
    return out.str();
  }
};

/// Schoolbook product of coefficient vectors (exact).
inline std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline CharPoly char_poly_product(const CharPoly& a, const CharPoly& b) {
  return CharPoly{poly_mul(a.coeffs, b.coeffs)};
}

namespace detail {

/// Faddeev-LeVerrier recursion on one connected component, exact over mpz.
/// M_0 = I; M_k = A M_{k-1} + c_k I with c_k = -tr(A M_{k-1}) / k (the division
/// is always exact for integer matrices). Matrix products use the adjacency
/// structure, so one step costs O(|E_comp| * m) big-integer additions.
inline std::vector<mpz_class> component_char_poly(const Graph& g, const std::vector<int>& nodes) {
  const int m = static_cast<int>(nodes.size());
  std::vector<int> local(static_cast<size_t>(g.node_count()), -1);
  for (int i = 0; i < m; ++i) local[static_cast<size_t>(nodes[static_cast<size_t>(i)])] = i;

  std::vector<std::vector<int>> adj(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int w : g.neighbors(nodes[static_cast<size_t>(i)]))
      adj[static_cast<size_t>(i)].push_back(local[static_cast<size_t>(w)]);

  auto at = [m](std::vector<mpz_class>& mat, int r, int c) -> mpz_class& {
    return mat[static_cast<size_t>(r) * static_cast<size_t>(m) + static_cast<size_t>(c)];
  };

  std::vector<mpz_class> coeffs(static_cast<size_t>(m) + 1, mpz_class(0));
  coeffs[static_cast<size_t>(m)] = 1;

  std::vector<mpz_class> work(static_cast<size_t>(m) * static_cast<size_t>(m), mpz_class(0));
  for (int i = 0; i < m; ++i) at(work, i, i) = 1;  // M_0 = I
  std::vector<mpz_class> next(work.size(), mpz_class(0));

  for (int k = 1; k <= m; ++k) {
    for (auto& x : next) x = 0;
    for (int i = 0; i < m; ++i)
      for (int t : adj[static_cast<size_t>(i)])
        for (int j = 0; j < m; ++j) at(next, i, j) += at(work, t, j);
    mpz_class trace(0);
    for (int i = 0; i < m; ++i) trace += at(next, i, i);
    if (trace % k != 0) throw std::logic_error("char_poly: inexact division in recursion");
    mpz_class ck = -(trace / k);
    for (int i = 0; i < m; ++i) at(next, i, i) += ck;
    coeffs[static_cast<size_t>(m - k)] = ck;
    work.swap(next);
  }
  return coeffs;
}

}  // namespace detail

/// Exact char poly det(lambda I - A). The matrix is block-diagonal over
/// connected components, so each block runs through the integer
/// Faddeev-LeVerrier recursion and the factors are multiplied exactly.
inline CharPoly char_poly(const Graph& g) {
  std::vector<mpz_class> acc{mpz_class(1)};
  for (const auto& comp : connected_components(g))
    acc = poly_mul(acc, detail::component_char_poly(g, comp));
  return CharPoly{std::move(acc)};
}

/// Exact cospectrality: equal node counts and identical coefficient vectors.
/// Floating eigenvalues are never consulted.
inline bool cospectral(const Graph& g1, const Graph& g2) {
  if (g1.node_count() != g2.node_count()) return false;
  return char_poly(g1) == char_poly(g2);
}

/// counts[k-1] = tr(A^k), exact, for k = 1..k_max.
struct WalkCounts {
  std::vector<mpz_class> counts;

  const mpz_class& trace(int k) const { return counts[static_cast<size_t>(k) - 1]; }
};

inline WalkCounts closed_walk_counts(const Graph& g, int k_max) {
  if (k_max < 1) throw std::invalid_argument("closed_walk_counts: need k_max >= 1");
  const int n = g.node_count();
  WalkCounts wc;
  std::vector<mpz_class> power(static_cast<size_t>(n) * static_cast<size_t>(n), mpz_class(0));
  auto at = [n](std::vector<mpz_class>& mat, int r, int c) -> mpz_class& {
    return mat[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)];
  };
  for (int i = 0; i < n; ++i) at(power, i, i) = 1;
  std::vector<mpz_class> next(power.size(), mpz_class(0));
  for (int k = 1; k <= k_max; ++k) {
    for (auto& x : next) x = 0;
    for (int i = 0; i < n; ++i)
      for (int t : g.neighbors(i))
        for (int j = 0; j < n; ++j) at(next, i, j) += at(power, t, j);
    power.swap(next);
    mpz_class trace(0);
    for (int i = 0; i < n; ++i) trace += at(power, i, i);
    wc.counts.push_back(std::move(trace));
  }
  return wc;
}

/// Power sums of the roots of a monic integer polynomial via Newton's
/// identities, exact. Agrees with closed_walk_counts when p = char_poly(g).
inline WalkCounts power_sums_from_charpoly(const CharPoly& p, int k_max) {
  if (k_max < 1) throw std::invalid_argument("power_sums_from_charpoly: need k_max >= 1");
  const int n = p.degree();
  if (n < 0 || p.coeffs[static_cast<size_t>(n)] != 1)
    throw std::invalid_argument("power_sums_from_charpoly: polynomial must be monic");
  // e[i] = i-th elementary symmetric function = (-1)^i coeffs[n-i]
  std::vector<mpz_class> e(static_cast<size_t>(k_max) + 1, mpz_class(0));
  for (int i = 1; i <= k_max && i <= n; ++i) {
    e[static_cast<size_t>(i)] = p.coeffs[static_cast<size_t>(n - i)];
    if (i % 2) e[static_cast<size_t>(i)] = -e[static_cast<size_t>(i)];
  }
  WalkCounts wc;
  std::vector<mpz_class> ps(static_cast<size_t>(k_max) + 1, mpz_class(0));
  for (int k = 1; k <= k_max; ++k) {
    mpz_class sum = e[static_cast<size_t>(k)] * k;
    if (k % 2 == 0) sum = -sum;
    for (int i = 1; i < k; ++i) {
      mpz_class term = e[static_cast<size_t>(i)] * ps[static_cast<size_t>(k - i)];
      if (i % 2) sum += term; else sum -= term;
    }
    ps[static_cast<size_t>(k)] = sum;
    wc.counts.push_back(std::move(sum));
  }
  return wc;
}

/// Exact char poly of the n-node path via the Chebyshev-style recurrence
/// p_n = lambda p_{n-1} - p_{n-2}, p_0 = 1, p_1 = lambda.
inline CharPoly path_char_poly(int n) {
  if (n < 0) throw std::invalid_argument("path_char_poly: need n >= 0");
  std::vector<mpz_class> prev{mpz_class(1)};            // p_0
  if (n == 0) return CharPoly{std::move(prev)};
  std::vector<mpz_class> cur{mpz_class(0), mpz_class(1)};  // p_1
  for (int i = 2; i <= n; ++i) {
    std::vector<mpz_class> next(static_cast<size_t>(i) + 1, mpz_class(0));
    for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return CharPoly{std::move(cur)};
}

/// Exact char poly of C_n: c_n = p_n - p_{n-2} - 2.
inline CharPoly cycle_char_poly(int n) {
  if (n < 3) throw std::invalid_argument("cycle_char_poly: need n >= 3");
  std::vector<mpz_class> out = path_char_poly(n).coeffs;
  const auto& sub = path_char_poly(n - 2).coeffs;
  for (size_t j = 0; j < sub.size(); ++j) out[j] -= sub[j];
  out[0] -= 2;
  return CharPoly{std::move(out)};
}

/// Cosine closed forms for path and cycle spectra, evaluated in double
/// precision. Diagnostic only; exact claims go through integer polynomials.
struct ClosedFormSpectrum {
  enum class Family { Path, Cycle };

  Family family;
  int n;
  std::vector<double> values;
};

inline ClosedFormSpectrum path_spectrum(int n) {
  if (n < 1) throw std::invalid_argument("path_spectrum: need n >= 1");
  ClosedFormSpectrum s{ClosedFormSpectrum::Family::Path, n, {}};
  for (int j = 1; j <= n; ++j)
    s.values.push_back(2.0 * std::cos(std::numbers::pi * j / (n + 1)));
  return s;
}

inline ClosedFormSpectrum cycle_spectrum(int n) {
  if (n < 3) throw std::invalid_argument("cycle_spectrum: need n >= 3");
  ClosedFormSpectrum s{ClosedFormSpectrum::Family::Cycle, n, {}};
  for (int j = 0; j < n; ++j)
    s.values.push_back(2.0 * std::cos(2.0 * std::numbers::pi * j / n));
  return s;
}

/// Floating eigenvalues of the adjacency matrix, sorted descending.
/// Accuracy is the solver's (~1e-9 at this scale); display use only, never
/// part of a cospectrality decision. Throws if the eigensolver fails.
inline std::vector<double> float_spectrum(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("float_spectrum: eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace cospec
