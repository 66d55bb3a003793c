#ifndef COSPEC_RATIONAL_MATRIX_HPP
#define COSPEC_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cospec/errors.hpp"

namespace cospec {

using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init)
      : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ParameterError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] RationalMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                                     std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw ParameterError("block out of range");
    RationalMatrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw ParameterError("matrix product dimension mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ParameterError("matrix difference dimension mismatch");
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  [[nodiscard]] Rational determinant() const {
    if (!square()) throw ParameterError("determinant of a non-square matrix");
    RationalMatrix work = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t pivot = c;
      while (pivot < rows_ && work(pivot, c) == 0) ++pivot;
      if (pivot == rows_) return 0;
      if (pivot != c) {
        work.swap_rows(pivot, c);
        det = -det;
      }
      det *= work(c, c);
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (work(r, c) == 0) continue;
        const Rational f = work(r, c) / work(c, c);
        for (std::size_t j = c; j < cols_; ++j) work(r, j) -= f * work(c, j);
      }
    }
    return det;
  }

  [[nodiscard]] std::size_t rank() const {
    RationalMatrix work = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      std::size_t pivot = rank;
      while (pivot < rows_ && work(pivot, c) == 0) ++pivot;
      if (pivot == rows_) continue;
      work.swap_rows(pivot, rank);
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if (work(r, c) == 0) continue;
        const Rational f = work(r, c) / work(rank, c);
        for (std::size_t j = c; j < cols_; ++j) work(r, j) -= f * work(rank, j);
      }
      ++rank;
    }
    return rank;
  }

  /// Gauss-Jordan inverse; throws SingularMatrix.
  [[nodiscard]] RationalMatrix inverse() const {
    if (!square()) throw ParameterError("inverse of a non-square matrix");
    const auto n = rows_;
    RationalMatrix work = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (pivot < n && work(pivot, c) == 0) ++pivot;
      if (pivot == n) throw SingularMatrix("matrix is singular");
      work.swap_rows(pivot, c);
      inv.swap_rows(pivot, c);
      const Rational p = work(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        work(c, j) /= p;
        inv(c, j) /= p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || work(r, c) == 0) continue;
        const Rational f = work(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          work(r, j) -= f * work(c, j);
          inv(r, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

namespace detail {

inline void check_split(const RationalMatrix& m, std::size_t split) {
  if (!m.square()) throw ParameterError("Schur complement needs a square matrix");
  if (split == 0 || split >= m.rows())
    throw ParameterError("trailing block size must satisfy 0 < split < order");
}

}  // namespace detail

/// For m = [[A, B], [C, D]] with D the trailing split x split block,
/// returns A - B D^{-1} C. Throws SingularMatrix when D is singular.
inline RationalMatrix schur_complement(const RationalMatrix& m, std::size_t split) {
  detail::check_split(m, split);
  const auto lead = m.rows() - split;
  const auto a = m.block(0, 0, lead, lead);
  const auto b = m.block(0, lead, lead, split);
  const auto c = m.block(lead, 0, split, lead);
  const auto d = m.block(lead, lead, split, split);
  return a - b * (d.inverse() * c);
}

struct SchurIdentityCheck {
  bool determinant_identity = false;  // det M = det D * det(M/D)
  bool rank_identity = false;         // rank M = rank D + rank(M/D)
};

inline SchurIdentityCheck verify_schur_identities(const RationalMatrix& m, std::size_t split) {
  const auto complement = schur_complement(m, split);
  const auto lead = m.rows() - split;
  const auto d = m.block(lead, lead, split, split);
  return {m.determinant() == d.determinant() * complement.determinant(),
          m.rank() == d.rank() + complement.rank()};
}

}  // namespace cospec

#endif  // COSPEC_RATIONAL_MATRIX_HPP
