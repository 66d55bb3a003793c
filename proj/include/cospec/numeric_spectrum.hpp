#ifndef COSPEC_NUMERIC_SPECTRUM_HPP
#define COSPEC_NUMERIC_SPECTRUM_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "cospec/errors.hpp"
#include "cospec/exact_spectrum.hpp"
#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

using DenseMatrix = std::vector<std::vector<double>>;

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// sorted descending. Sweeps until every off-diagonal entry is below 1e-12.
inline std::vector<double> symmetric_eigenvalues(DenseMatrix a) {
  const auto n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw ParameterError("eigenvalues need a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i][j] != a[j][i]) throw ParameterError("matrix is not symmetric");

  constexpr double kOffDiagonal = 1e-12;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double largest = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) largest = std::max(largest, std::abs(a[p][q]));
    if (largest < kOffDiagonal) break;

    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < kOffDiagonal * 1e-3) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

/// Real spectrum sorted descending, with the tolerance used to cluster
/// near-equal values into multiplicities.
struct NumericSpectrum {
  std::vector<double> values;
  double tolerance = 1e-7;

  struct Cluster {
    double value;
    std::size_t multiplicity;
  };

  /// Consecutive values within `tolerance` merge; a cluster reports its mean.
  [[nodiscard]] std::vector<Cluster> clustered() const {
    std::vector<Cluster> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
      if (i < values.size() && values[i - 1] - values[i] <= tolerance) continue;
      double sum = 0.0;
      for (std::size_t j = start; j < i; ++j) sum += values[j];
      out.push_back({sum / static_cast<double>(i - start), i - start});
      start = i;
    }
    return out;
  }
};

inline NumericSpectrum eigenvalues(const Graph& g) { return {symmetric_eigenvalues(adjacency_matrix(g))}; }

/// trace(A^k): the number of closed walks of length k.
inline BigInt closed_walk_count(const Graph& g, unsigned k) {
  if (k == 0) throw ParameterError("walk length must be positive");
  const auto n = g.order();
  // column j of A^k as we go; trace = sum of diagonal entries
  BigInt trace = 0;
  std::vector<BigInt> walk(n);
  std::vector<BigInt> next(n);
  for (Vertex start = 0; start < n; ++start) {
    std::fill(walk.begin(), walk.end(), BigInt(0));
    walk[start] = 1;
    for (unsigned step = 0; step < k; ++step) {
      for (Vertex v = 0; v < n; ++v) {
        next[v] = 0;
        for (auto bits = g.neighbors(v); bits; bits &= bits - 1)
          next[v] += walk[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      std::swap(walk, next);
    }
    trace += walk[start];
  }
  return trace;
}

namespace detail {

inline bool is_integer_threshold(double a) {
  return std::isfinite(a) && a == std::floor(a) && std::abs(a) < 9.0e15;
}

}  // namespace detail

/// Number of eigenvalues <= a. Integer thresholds are decided exactly from
/// the characteristic polynomial: its roots are all real, so Descartes' rule
/// counts the roots of p(x + a) above zero exactly.
inline std::size_t count_leq(const Graph& g, double a) {
  if (detail::is_integer_threshold(a)) {
    const auto p = charpoly(g).shifted(BigInt(static_cast<long long>(a)));
    return g.order() - p.sign_changes();
  }
  const auto spectrum = eigenvalues(g);
  return static_cast<std::size_t>(
      std::count_if(spectrum.values.begin(), spectrum.values.end(), [a](double x) { return x <= a; }));
}

/// Number of eigenvalues >= a.
inline std::size_t count_geq(const Graph& g, double a) {
  if (detail::is_integer_threshold(a)) {
    const auto p = charpoly(g).shifted(BigInt(static_cast<long long>(a)));
    return g.order() - p.reflected().sign_changes();
  }
  const auto spectrum = eigenvalues(g);
  return static_cast<std::size_t>(
      std::count_if(spectrum.values.begin(), spectrum.values.end(), [a](double x) { return x >= a; }));
}

/// Number of eigenvalues strictly below a.
inline std::size_t count_less(const Graph& g, double a) { return g.order() - count_geq(g, a); }

/// Cauchy interlacing for the subgraph induced by `subset`: with m = |subset|,
/// lambda_{n-m+i} <= mu_i <= lambda_i for every i (both lists descending).
inline bool verify_interlacing(const Graph& g, std::span<const Vertex> subset, double tolerance = 1e-8) {
  if (subset.empty() || subset.size() > g.order()) throw ParameterError("subset must be nonempty");
  const auto whole = eigenvalues(g).values;
  const auto part = eigenvalues(induced_subgraph(g, subset)).values;
  const auto n = whole.size();
  const auto m = part.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (part[i] > whole[i] + tolerance) return false;
    if (part[i] < whole[n - m + i] - tolerance) return false;
  }
  return true;
}

/// True iff the closed-form values agree elementwise with the numeric spectrum.
inline bool match_closed_form(const Graph& g, const ClosedFormSpectrum& cf, double tolerance = 1e-8) {
  if (cf.order() != g.order())
    throw ParameterError("closed form has " + std::to_string(cf.order()) + " values for a graph of order " +
                         std::to_string(g.order()));
  const auto expected = cf.values_descending();
  const auto actual = eigenvalues(g).values;
  for (std::size_t i = 0; i < actual.size(); ++i)
    if (std::abs(expected[i] - actual[i]) > tolerance) return false;
  return true;
}

}  // namespace cospec

#endif  // COSPEC_NUMERIC_SPECTRUM_HPP
