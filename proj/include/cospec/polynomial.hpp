#ifndef COSPEC_POLYNOMIAL_HPP
#define COSPEC_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in one variable with arbitrary-precision integer coefficients,
/// stored highest degree first. The zero polynomial is stored as {0}.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  IntPolynomial(std::initializer_list<long long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) {
    normalize();
  }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static IntPolynomial monomial(std::size_t degree) {
    std::vector<BigInt> c(degree + 1, 0);
    c[0] = 1;
    return IntPolynomial(std::move(c));
  }

  [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^power (zero above the degree).
  [[nodiscard]] BigInt coefficient(std::size_t power) const {
    if (power > degree()) return 0;
    return coeffs_[degree() - power];
  }

  [[nodiscard]] BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (const auto& c : coeffs_) acc = acc * x + c;
    return acc;
  }

  [[nodiscard]] double evaluate(double x) const {
    double acc = 0.0;
    for (const auto& c : coeffs_) acc = acc * x + c.convert_to<double>();
    return acc;
  }

  /// p(x + a), by repeated synthetic division.
  [[nodiscard]] IntPolynomial shifted(const BigInt& a) const {
    std::vector<BigInt> c = coeffs_;
    const auto n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 1; j < n - i; ++j) c[j] += a * c[j - 1];
    return IntPolynomial(std::move(c));
  }

  /// p(-x).
  [[nodiscard]] IntPolynomial reflected() const {
    std::vector<BigInt> c = coeffs_;
    for (std::size_t power = 1; power <= degree(); power += 2) c[degree() - power] = -c[degree() - power];
    return IntPolynomial(std::move(c));
  }

  /// Sign changes in the coefficient sequence, zeros skipped.
  [[nodiscard]] std::size_t sign_changes() const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& c : coeffs_) {
      const int s = c.sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  /// Multiplicity of 0 as a root.
  [[nodiscard]] std::size_t zero_multiplicity() const {
    if (is_zero()) return degree();
    std::size_t k = 0;
    while (coefficient(k) == 0) ++k;
    return k;
  }

  [[nodiscard]] IntPolynomial pow(unsigned exponent) const {
    IntPolynomial result{1};
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    const auto n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<BigInt> c(n, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[n - a.coeffs_.size() + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[n - b.coeffs_.size() + i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Lexicographic on (degree, coefficients); used for keying classes.
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    return a.coeffs_ < b.coeffs_;
  }

  /// Human-readable form in the variable `var`, e.g. "x^3 - 3x - 2".
  [[nodiscard]] std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const auto& c = coeffs_[i];
      if (c == 0) continue;
      const auto power = degree() - i;
      const BigInt mag = boost::multiprecision::abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || power == 0) out += mag.str();
      if (power >= 1) out += var;
      if (power >= 2) out += "^" + std::to_string(power);
    }
    return out;
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    if (coeffs_.empty()) coeffs_.push_back(0);
  }

  std::vector<BigInt> coeffs_;
};

/// Product of powers of integer polynomials, kept unexpanded.
struct PolynomialFactor {
  IntPolynomial polynomial;
  unsigned exponent = 1;
  friend bool operator==(const PolynomialFactor&, const PolynomialFactor&) = default;
};

using FactoredPolynomial = std::vector<PolynomialFactor>;

inline IntPolynomial expand(const FactoredPolynomial& factors) {
  IntPolynomial result{1};
  for (const auto& f : factors) result = result * f.polynomial.pow(f.exponent);
  return result;
}

}  // namespace cospec

#endif  // COSPEC_POLYNOMIAL_HPP
