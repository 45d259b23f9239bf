#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qgl21/field.hpp"

namespace qgl21 {

/// Dense row-major matrix over the scalar field. Representation dimensions
/// stay small (a few dozen), so no sparsity machinery; the multiply skips
/// exact-zero entries because generator matrices have at most two nonzeros
/// per column.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const S& fill)
      : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

  static Matrix zeros(std::size_t n, const Field<S>& f) { return Matrix(n, n, f.zero()); }
  static Matrix identity(std::size_t n, const Field<S>& f) {
    Matrix m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_, S{});
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a.at(i, k);
        if (scalar_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b.at(k, j);
          if (scalar_is_zero(bkj)) continue;
          out.at(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.d_.size(); ++i) out.d_[i] += b.d_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.d_.size(); ++i) out.d_[i] -= b.d_[i];
    return out;
  }

  Matrix scaled(const S& c) const {
    Matrix out = *this;
    for (auto& x : out.d_) x = x * c;
    return out;
  }

  S max_abs() const {
    S best{};
    for (const auto& x : d_) {
      S a = abs(x);
      if (a > best) best = a;
    }
    return best;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<S> out(rows_, S{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const S& m = at(i, j);
        if (!scalar_is_zero(m)) out[i] += m * v[j];
      }
    return out;
  }

  /// Copy with the given (sorted or unsorted) row/column index set removed.
  Matrix without(const std::vector<std::size_t>& dropped) const {
    std::vector<bool> drop(rows_, false);
    for (std::size_t i : dropped) drop.at(i) = true;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!drop[i]) keep.push_back(i);
    Matrix out(keep.size(), keep.size(), S{});
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = at(keep[i], keep[j]);
    return out;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<S> d_;
};

/// r-deformed commutator [X,Y]_r = XY - r YX.
template <class S>
Matrix<S> r_commutator(const Matrix<S>& x, const Matrix<S>& y, const S& r) {
  return x * y - (y * x).scaled(r);
}

template <class S>
Matrix<S> commutator(const Matrix<S>& x, const Matrix<S>& y, const Field<S>& f) {
  return r_commutator(x, y, f.one());
}

template <class S>
Matrix<S> anticommutator(const Matrix<S>& x, const Matrix<S>& y) {
  return x * y + y * x;
}

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  S out{};
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

/// Singular values by one-sided Jacobi orthogonalization of the columns,
/// descending. Robust at any working precision; the convergence threshold is
/// derived from the field precision.
template <class S>
std::vector<S> singular_values(Matrix<S> a, const Field<S>& f) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  if (n == 0) return {};
  S eps = pow_int(f.from_long(2), -static_cast<long>(f.precision > 8 ? f.precision - 4 : 4));
  auto col = [&](std::size_t j) {
    std::vector<S> c(m, S{});
    for (std::size_t i = 0; i < m; ++i) c[i] = a.at(i, j);
    return c;
  };
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        S app{}, aqq{}, apq{};
        for (std::size_t i = 0; i < m; ++i) {
          app += a.at(i, p) * a.at(i, p);
          aqq += a.at(i, q) * a.at(i, q);
          apq += a.at(i, p) * a.at(i, q);
        }
        if (scalar_is_zero(apq)) continue;
        if (abs(apq) <= eps * sqrt(app * aqq)) continue;
        rotated = true;
        // Jacobi rotation diagonalizing the 2x2 Gram block.
        S tau = (aqq - app) / (apq + apq);
        S t = (tau >= S{}) ? f.one() / (tau + sqrt(f.one() + tau * tau))
                           : (f.zero() - f.one()) / ((f.zero() - tau) + sqrt(f.one() + tau * tau));
        S c = f.one() / sqrt(f.one() + t * t);
        S s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          S vp = a.at(i, p), vq = a.at(i, q);
          a.at(i, p) = c * vp - s * vq;
          a.at(i, q) = s * vp + c * vq;
        }
      }
    if (!rotated) break;
  }
  std::vector<S> sv;
  sv.reserve(n);
  for (std::size_t j = 0; j < n; ++j) sv.push_back(sqrt(dot(col(j), col(j))));
  std::sort(sv.begin(), sv.end(), [](const S& x, const S& y) { return y < x; });
  return sv;
}

/// Numeric rank with the cutoff threshold * sigma_max.
template <class S>
std::size_t rank_by_singular_values(const Matrix<S>& a, const Field<S>& f, double threshold) {
  std::vector<S> sv = singular_values(a, f);
  if (sv.empty()) return 0;
  S cut = f.from_decimal(Field<double>::to_decimal(threshold)) * sv.front();
  std::size_t r = 0;
  for (const auto& s : sv)
    if (s > cut) ++r;
  return r;
}

}  // namespace qgl21
