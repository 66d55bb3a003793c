#ifndef COSPEC_EXACT_SPECTRUM_HPP
#define COSPEC_EXACT_SPECTRUM_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cospec/errors.hpp"
#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/rational_matrix.hpp"

namespace cospec {

// ---------------------------------------------------------------------------
// Characteristic polynomials (division-free)

/// det(xI - M) for a square integer matrix, by Berkowitz's recurrence over
/// leading principal submatrices. Uses only ring operations.
inline IntPolynomial charpoly(const std::vector<std::vector<BigInt>>& m) {
  const auto n = m.size();
  if (n == 0) return IntPolynomial{1};
  for (const auto& row : m)
    if (row.size() != n) throw ParameterError("charpoly needs a square matrix");

  std::vector<BigInt> poly{1, -m[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{r-1} C
    std::vector<BigInt> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m[r][r];
    std::vector<BigInt> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m[i][r];
    for (std::size_t k = 2; k < r + 2; ++k) {
      BigInt dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += m[r][j] * v[j];
      toeplitz[k] = -dot;
      if (k + 1 < r + 2) {
        std::vector<BigInt> next(r, 0);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += m[i][j] * v[j];
        v = std::move(next);
      }
    }
    std::vector<BigInt> next(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  return IntPolynomial(std::move(poly));
}

/// det(xI - A(g)). Same recurrence as above, specialized to 0/1 adjacency
/// rows so every matrix-vector product is a masked sum.
inline IntPolynomial charpoly(const Graph& g) {
  const auto n = g.order();
  std::vector<BigInt> poly{1, 0};
  std::vector<BigInt> v;
  std::vector<BigInt> next_v;
  for (std::size_t r = 1; r < n; ++r) {
    const std::uint64_t lower = (Graph::bit(r) - 1);
    std::vector<BigInt> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = 0;
    v.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      if (g.adjacent(i, r)) v[i] = 1;
    const auto row_r = g.neighbors(r) & lower;
    for (std::size_t k = 2; k < r + 2; ++k) {
      BigInt dot = 0;
      for (auto bits = row_r; bits; bits &= bits - 1) dot += v[static_cast<std::size_t>(std::countr_zero(bits))];
      toeplitz[k] = -dot;
      if (k + 1 < r + 2) {
        next_v.assign(r, 0);
        for (std::size_t i = 0; i < r; ++i)
          for (auto bits = g.neighbors(i) & lower; bits; bits &= bits - 1)
            next_v[i] += v[static_cast<std::size_t>(std::countr_zero(bits))];
        std::swap(v, next_v);
      }
    }
    std::vector<BigInt> next(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (toeplitz[i - j] != 0 && poly[j] != 0) next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  return IntPolynomial(std::move(poly));
}

/// Cospectrality is decided by exact polynomial equality only.
inline bool are_cospectral(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) return false;
  return charpoly(g1) == charpoly(g2);
}

struct SpectralCounts {
  BigInt edges;
  BigInt triangles;
};

/// Edge and triangle counts read off a characteristic polynomial through
/// Newton's identities: with p = x^n + c1 x^{n-1} + c2 x^{n-2} + c3 x^{n-3}
/// and c1 = 0, the power sums are 2|E| = -2 c2 and 6 T = -3 c3.
inline SpectralCounts edges_and_triangles(const IntPolynomial& p) {
  const auto n = p.degree();
  if (p.coefficient(n) != 1) throw NotGraphPolynomial("polynomial is not monic");
  if (n == 0) return {0, 0};
  if (p.coefficient(n - 1) != 0) throw NotGraphPolynomial("nonzero trace coefficient");
  const BigInt c2 = n >= 2 ? p.coefficient(n - 2) : BigInt(0);
  const BigInt c3 = n >= 3 ? p.coefficient(n - 3) : BigInt(0);
  const BigInt edges = -c2;
  if (edges < 0) throw NotGraphPolynomial("negative edge count");
  if (c3 % 2 != 0) throw NotGraphPolynomial("non-integral triangle count");
  const BigInt triangles = -c3 / 2;
  if (triangles < 0) throw NotGraphPolynomial("negative triangle count");
  return {edges, triangles};
}

/// x I - A(g) at a rational point.
inline RationalMatrix characteristic_matrix(const Graph& g, const Rational& x) {
  RationalMatrix m(g.order(), g.order());
  for (Vertex i = 0; i < g.order(); ++i) {
    m(i, i) = x;
    for (Vertex j = 0; j < g.order(); ++j)
      if (g.adjacent(i, j)) m(i, j) = -1;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Quadratic surds and closed-form spectra

/// rational + coefficient * sqrt(radicand), radicand squarefree >= 2, or
/// coefficient = 0 and radicand = 1 for a rational value.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational rational_part) : rational_(std::move(rational_part)) {}  // NOLINT

  static QuadraticSurd make(Rational rational_part, Rational coefficient, BigInt radicand) {
    if (radicand < 0) throw ParameterError("negative radicand");
    QuadraticSurd q;
    q.rational_ = std::move(rational_part);
    if (radicand == 0 || coefficient == 0) return q;
    // pull square factors out of the radicand
    BigInt square_part = 1;
    for (BigInt f = 2; f * f <= radicand; ++f)
      while (radicand % (f * f) == 0) {
        radicand /= f * f;
        square_part *= f;
      }
    coefficient *= Rational(square_part);
    if (radicand == 1) {
      q.rational_ += coefficient;
      return q;
    }
    q.coefficient_ = coefficient;
    q.radicand_ = radicand;
    return q;
  }

  [[nodiscard]] const Rational& rational_part() const noexcept { return rational_; }
  [[nodiscard]] const Rational& coefficient() const noexcept { return coefficient_; }
  [[nodiscard]] const BigInt& radicand() const noexcept { return radicand_; }
  [[nodiscard]] bool is_rational() const noexcept { return coefficient_ == 0; }

  [[nodiscard]] QuadraticSurd conjugate() const {
    QuadraticSurd q = *this;
    q.coefficient_ = -q.coefficient_;
    return q;
  }

  [[nodiscard]] double value() const {
    return rational_.convert_to<double>() +
           coefficient_.convert_to<double>() * std::sqrt(radicand_.convert_to<double>());
  }

  /// "(a+b*sqrt(d))/c" with a, b, c integers over a common denominator.
  [[nodiscard]] std::string to_string() const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (is_rational()) {
      if (denominator(rational_) == 1) return numerator(rational_).str();
      return numerator(rational_).str() + "/" + denominator(rational_).str();
    }
    const BigInt c = boost::integer::lcm(denominator(rational_), denominator(coefficient_));
    const BigInt a = numerator(rational_) * (c / denominator(rational_));
    const BigInt b = numerator(coefficient_) * (c / denominator(coefficient_));
    std::string num;
    if (a != 0) num = a.str() + (b < 0 ? "-" : "+");
    else if (b < 0) num = "-";
    const BigInt mag = boost::multiprecision::abs(b);
    if (mag != 1) num += mag.str() + "*";
    num += "sqrt(" + radicand_.str() + ")";
    if (c == 1) return num;
    return "(" + num + ")/" + c.str();
  }

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  Rational rational_ = 0;
  Rational coefficient_ = 0;
  BigInt radicand_ = 1;
};

struct SpectrumEntry {
  QuadraticSurd value;
  unsigned multiplicity = 1;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Exact eigenvalue multiset, entries sorted by increasing value.
class ClosedFormSpectrum {
 public:
  ClosedFormSpectrum() = default;

  /// Adds `multiplicity` copies of `value`, merging with an equal entry.
  void add(const QuadraticSurd& value, unsigned multiplicity = 1) {
    if (multiplicity == 0) return;
    for (auto& e : entries_)
      if (e.value == value) {
        e.multiplicity += multiplicity;
        return;
      }
    entries_.push_back({value, multiplicity});
    std::sort(entries_.begin(), entries_.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value.value() < b.value.value(); });
  }

  [[nodiscard]] const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }

  [[nodiscard]] std::size_t order() const noexcept {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.multiplicity;
    return n;
  }

  /// Every eigenvalue with repetition, in decreasing order.
  [[nodiscard]] std::vector<double> values_descending() const {
    std::vector<double> out;
    for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value.value());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  /// prod (x - value)^multiplicity; throws ParameterError when a surd lacks
  /// its conjugate (the product would not have rational coefficients).
  [[nodiscard]] IntPolynomial expand() const {
    std::vector<Rational> poly{1};
    auto multiply = [&poly](const std::vector<Rational>& factor) {
      std::vector<Rational> out(poly.size() + factor.size() - 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) out[i + j] += poly[i] * factor[j];
      poly = std::move(out);
    };
    for (const auto& e : entries_) {
      const auto& q = e.value;
      std::vector<Rational> factor;
      if (q.is_rational()) {
        factor = {1, -q.rational_part()};
      } else {
        if (q.coefficient() < 0) continue;  // consumed with its partner
        const auto partner = std::find(entries_.begin(), entries_.end(), SpectrumEntry{q.conjugate(), e.multiplicity});
        if (partner == entries_.end()) throw ParameterError("surd " + q.to_string() + " lacks its conjugate");
        const Rational& a = q.rational_part();
        const Rational& b = q.coefficient();
        factor = {1, -2 * a, a * a - b * b * Rational(q.radicand())};
      }
      for (unsigned i = 0; i < e.multiplicity; ++i) multiply(factor);
    }
    for (const auto& e : entries_)
      if (!e.value.is_rational() && e.value.coefficient() < 0 &&
          std::find(entries_.begin(), entries_.end(), SpectrumEntry{e.value.conjugate(), e.multiplicity}) ==
              entries_.end())
        throw ParameterError("surd " + e.value.to_string() + " lacks its conjugate");
    std::vector<BigInt> coeffs;
    coeffs.reserve(poly.size());
    for (const auto& c : poly) {
      if (boost::multiprecision::denominator(c) != 1) throw ParameterError("expansion is not integral");
      coeffs.push_back(boost::multiprecision::numerator(c));
    }
    return IntPolynomial(std::move(coeffs));
  }

  friend bool operator==(const ClosedFormSpectrum&, const ClosedFormSpectrum&) = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

namespace detail {

/// 2 cos(2 pi j / denominator) when it is rational or a quadratic surd.
inline std::optional<QuadraticSurd> two_cos_of_fraction(long long j, long long denominator) {
  j %= denominator;
  const auto g = std::gcd(j, denominator);
  const auto reduced_j = j / g;
  const auto reduced_n = denominator / g;
  const auto half = Rational(1, 2);
  auto pick = [reduced_j, reduced_n](std::initializer_list<long long> first) {
    return std::find(first.begin(), first.end(), reduced_j) != first.end() ||
           std::find(first.begin(), first.end(), reduced_n - reduced_j) != first.end();
  };
  switch (reduced_n) {
    case 1: return QuadraticSurd(2);
    case 2: return QuadraticSurd(-2);
    case 3: return QuadraticSurd(-1);
    case 4: return QuadraticSurd(0);
    case 6: return QuadraticSurd(1);
    case 5:
      return pick({1}) ? QuadraticSurd::make(-half, half, 5) : QuadraticSurd::make(-half, -half, 5);
    case 8: return QuadraticSurd::make(0, pick({1}) ? 1 : -1, 2);
    case 10:
      return pick({1}) ? QuadraticSurd::make(half, half, 5) : QuadraticSurd::make(half, -half, 5);
    case 12: return QuadraticSurd::make(0, pick({1}) ? 1 : -1, 3);
    default: return std::nullopt;
  }
}

}  // namespace detail

/// Exact spectrum of a named family member, or nullopt when some eigenvalue
/// is neither rational nor a quadratic surd (paths and cycles only).
inline std::optional<ClosedFormSpectrum> closed_form_spectrum(const FamilySpec& spec) {
  validate(spec);
  ClosedFormSpectrum s;
  const long long a = spec.params[0];
  switch (spec.kind) {
    case FamilyKind::Complete:
      s.add(QuadraticSurd(-1), static_cast<unsigned>(a - 1));
      s.add(QuadraticSurd(a - 1));
      break;
    case FamilyKind::Empty: s.add(QuadraticSurd(0), static_cast<unsigned>(a)); break;
    case FamilyKind::Star:
      s.add(QuadraticSurd::make(0, -1, a));
      s.add(QuadraticSurd(0), static_cast<unsigned>(a - 1));
      s.add(QuadraticSurd::make(0, 1, a));
      break;
    case FamilyKind::CompleteBipartite: {
      const long long b = spec.params[1];
      s.add(QuadraticSurd::make(0, -1, a * b));
      s.add(QuadraticSurd(0), static_cast<unsigned>(a + b - 2));
      s.add(QuadraticSurd::make(0, 1, a * b));
      break;
    }
    case FamilyKind::Pyramid: {
      // roots of x^2 + (1-k)x - (n-k)k, then (-1)^{k-1} and 0^{n-k-1}
      const long long k = spec.params[1];
      const BigInt disc = BigInt(k - 1) * (k - 1) + BigInt(4) * k * (a - k);
      const Rational mid(k - 1, 2);
      s.add(QuadraticSurd::make(mid, Rational(-1, 2), disc));
      s.add(QuadraticSurd(-1), static_cast<unsigned>(k - 1));
      s.add(QuadraticSurd(0), static_cast<unsigned>(a - k - 1));
      s.add(QuadraticSurd::make(mid, Rational(1, 2), disc));
      break;
    }
    case FamilyKind::Path:
      for (long long j = 1; j <= a; ++j) {
        const auto v = detail::two_cos_of_fraction(j, 2 * (a + 1));
        if (!v) return std::nullopt;
        s.add(*v);
      }
      break;
    case FamilyKind::Cycle:
      for (long long j = 1; j <= a; ++j) {
        const auto v = detail::two_cos_of_fraction(j, a);
        if (!v) return std::nullopt;
        s.add(*v);
      }
      break;
  }
  return s;
}

/// x^{n-k-1} (x+1)^{k-1} (x^2 + (1-k)x - (n-k)k); factors with exponent 0
/// are omitted.
inline FactoredPolynomial charpoly_pyramid_factored(int n, int k) {
  validate(FamilySpec::pyramid(n, k));
  FactoredPolynomial factors;
  if (n - k - 1 > 0) factors.push_back({IntPolynomial{1, 0}, static_cast<unsigned>(n - k - 1)});
  if (k - 1 > 0) factors.push_back({IntPolynomial{1, 1}, static_cast<unsigned>(k - 1)});
  factors.push_back({IntPolynomial{1, 1LL - k, -static_cast<long long>(n - k) * k}, 1});
  return factors;
}

}  // namespace cospec

#endif  // COSPEC_EXACT_SPECTRUM_HPP
