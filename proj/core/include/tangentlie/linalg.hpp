#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tangentlie/error.hpp"
#include "tangentlie/scalar.hpp"

namespace tangentlie {

/// Coefficients of a left-invariant vector field in a fixed basis of the algebra.
template <Scalar S>
class AlgVector {
 public:
  AlgVector() = default;
  explicit AlgVector(std::size_t n) : coeffs_(n, S(0)) {}
  explicit AlgVector(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {}
  AlgVector(std::initializer_list<S> coeffs) : coeffs_(coeffs) {}

  static AlgVector unit(std::size_t n, std::size_t i) {
    AlgVector v(n);
    v[i] = S(1);
    return v;
  }

  std::size_t size() const { return coeffs_.size(); }
  S& operator[](std::size_t i) { return coeffs_[i]; }
  const S& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const S> coeffs() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  bool is_zero(double tol = kDefaultTolerance) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](const S& x) { return tangentlie::is_zero(x, tol); });
  }

  AlgVector& operator+=(const AlgVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  AlgVector& operator-=(const AlgVector& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  AlgVector& operator*=(const S& a) {
    for (auto& c : coeffs_) c *= a;
    return *this;
  }

  friend AlgVector operator+(AlgVector a, const AlgVector& b) { return a += b; }
  friend AlgVector operator-(AlgVector a, const AlgVector& b) { return a -= b; }
  friend AlgVector operator-(AlgVector a) { return a *= S(-1); }
  friend AlgVector operator*(const S& s, AlgVector a) { return a *= s; }
  friend AlgVector operator*(AlgVector a, const S& s) { return a *= s; }
  friend bool operator==(const AlgVector&, const AlgVector&) = default;

  template <Scalar T>
  AlgVector<T> convert() const {
    std::vector<T> out;
    out.reserve(size());
    for (const auto& c : coeffs_) out.push_back(scalar_cast<T>(c));
    return AlgVector<T>(std::move(out));
  }

 private:
  void require_same_size(const AlgVector& o) const {
    if (o.size() != size()) throw DimensionError("vector length mismatch");
  }

  std::vector<S> coeffs_;
};

/// Largest absolute coefficient; 0 for the empty vector.
template <Scalar S>
S max_abs(const AlgVector<S>& v) {
  S m(0);
  for (const auto& c : v) {
    const S a = c < 0 ? S(-c) : c;
    if (a > m) m = a;
  }
  return m;
}

template <Scalar S>
S dot(const AlgVector<S>& a, const AlgVector<S>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  S s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const AlgVector<S>& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_scalar(v[i]);
  return os << ')';
}

/// Dense row-major matrix.
template <Scalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Matrix(std::initializer_list<std::initializer_list<S>> rows) : rows_(rows.size()) {
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  AlgVector<S> column(std::size_t j) const {
    AlgVector<S> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  AlgVector<S> row(std::size_t i) const {
    AlgVector<S> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  void set_column(std::size_t j, const AlgVector<S>& c) {
    if (c.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero(double tol = kDefaultTolerance) const {
    return std::all_of(data_.begin(), data_.end(),
                       [tol](const S& x) { return tangentlie::is_zero(x, tol); });
  }

  bool is_symmetric(double tol = kDefaultTolerance) const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!tangentlie::is_zero(S((*this)(i, j) - (*this)(j, i)), tol)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend AlgVector<S> operator*(const Matrix& a, const AlgVector<S>& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    AlgVector<S> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      S s(0);
      for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  template <Scalar T>
  Matrix<T> convert() const {
    Matrix<T> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = scalar_cast<T>((*this)(i, j));
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Symmetric bilinear evaluation uᵀ·m·v.
template <Scalar S>
S bilinear(const Matrix<S>& m, const AlgVector<S>& u, const AlgVector<S>& v) {
  return dot(u, m * v);
}

template <Scalar S>
struct RowEchelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. Exact in rational mode;
/// float mode uses partial pivoting and treats |x| <= tol as zero.
template <Scalar S>
RowEchelon<S> row_reduce(Matrix<S> m, double tol = kDefaultTolerance) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    if constexpr (is_exact_v<S>) {
      for (std::size_t i = r; i < m.rows(); ++i)
        if (m(i, c) != 0) {
          best = i;
          break;
        }
    } else {
      double best_abs = tol;
      for (std::size_t i = r; i < m.rows(); ++i)
        if (std::abs(m(i, c)) > best_abs) {
          best_abs = std::abs(m(i, c));
          best = i;
        }
    }
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    const S inv = S(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if constexpr (!is_exact_v<S>) {
    for (std::size_t i = r; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = 0.0;
  }
  return {std::move(m), std::move(pivots)};
}

/// Rescales v so that its first nonzero entry is positive and, in exact mode,
/// all entries are coprime integers.
template <Scalar S>
AlgVector<S> normalize_direction(AlgVector<S> v, double tol = kDefaultTolerance) {
  if constexpr (is_exact_v<S>) {
    BigInt lcm = 1;
    for (const auto& c : v) lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(c)));
    BigInt g = 0;
    for (const auto& c : v) g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::numerator(Rational(c * lcm))));
    if (g != 0) v *= Rational(lcm, g);
  }
  for (const auto& c : v) {
    if (is_zero(c, tol)) continue;
    if (c < 0) v *= S(-1);
    break;
  }
  return v;
}

/// Basis of {x : m·x = 0}, one vector per free column of the echelon form.
template <Scalar S>
std::vector<AlgVector<S>> null_space(const Matrix<S>& m, double tol = kDefaultTolerance) {
  const auto ech = row_reduce(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<AlgVector<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    AlgVector<S> v(m.cols());
    v[free] = S(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(normalize_direction(std::move(v), tol));
  }
  return basis;
}

/// Rank of the matrix whose rows are the given vectors.
template <Scalar S>
std::size_t rank_of(std::span<const AlgVector<S>> vectors, double tol = kDefaultTolerance) {
  if (vectors.empty()) return 0;
  Matrix<S> m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  return row_reduce(std::move(m), tol).rank();
}

template <Scalar S>
S determinant(Matrix<S> m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  S det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    if constexpr (is_exact_v<S>) {
      for (std::size_t i = c; i < n; ++i)
        if (m(i, c) != 0) {
          best = i;
          break;
        }
    } else {
      double best_abs = 0.0;
      for (std::size_t i = c; i < n; ++i)
        if (std::abs(m(i, c)) > best_abs) {
          best_abs = std::abs(m(i, c));
          best = i;
        }
    }
    if (best == n) return S(0);
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(best, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const S f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Inverse by Gauss-Jordan on [m | I]. Throws DomainError if m is singular.
template <Scalar S>
Matrix<S> inverse(const Matrix<S>& m, double tol = kDefaultTolerance) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S(1);
  }
  const auto ech = row_reduce(std::move(aug), tol);
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

/// Sylvester's criterion: every leading principal minor is strictly positive.
template <Scalar S>
bool leading_minors_positive(const Matrix<S>& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix<S> sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    if (!(determinant(std::move(sub)) > 0)) return false;
  }
  return true;
}

/// Whether a Cholesky factorization succeeds with pivots above tol.
inline bool cholesky_succeeds(const Matrix<double>& m, double tol = kDefaultTolerance) {
  const std::size_t n = m.rows();
  Matrix<double> l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > tol)) return false;
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return true;
}

}  // namespace tangentlie
