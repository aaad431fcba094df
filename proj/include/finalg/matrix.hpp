#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <utility>

#include "finalg/core.hpp"

namespace finalg {

// Dense complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<Complex>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw DimensionError("matrix initializer rows have unequal lengths");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const Vector& entries() const { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector entries_;
};

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": shapes differ");
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix add");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix subtract");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline Matrix operator*(Complex s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

inline Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: dimensions differ");
  Vector out(a.rows(), Complex(0.0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

inline Matrix conjugate_transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline Complex trace(const Matrix& a) {
  if (!a.square()) throw DimensionError("trace: matrix must be square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// entrywise sup of moduli
inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

inline double max_abs(const Vector& v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

// LU factorization with partial pivoting on entry modulus. One factorization
// backs both determinants and linear solves.
struct LuDecomposition {
  Matrix lu;                      // L strictly below the diagonal, U on and above
  std::vector<std::size_t> perm;  // row i of LU came from row perm[i] of the input
  double parity = 1.0;
  double max_entry = 0.0;
  double min_pivot = 0.0;

  Complex det() const {
    Complex d = parity;
    for (std::size_t i = 0; i < lu.rows(); ++i) d *= lu(i, i);
    return d;
  }

  Vector solve(const Vector& b) const {
    const std::size_t n = lu.rows();
    if (b.size() != n) throw DimensionError("solve: right-hand side length differs");
    if (min_pivot <= RunConfig::kPivotFloor * max_entry)
      throw SingularMatrixError("solve: pivot modulus " + std::to_string(min_pivot) +
                                " is below the singularity floor");
    Vector y(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = b[perm[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * y[j];
      y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      Complex s = y[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
      x[i] = s / lu(i, i);
    }
    return x;
  }
};

inline LuDecomposition lu_factor(Matrix a) {
  if (!a.square()) throw DimensionError("lu_factor: matrix must be square");
  const std::size_t n = a.rows();
  LuDecomposition f;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  f.max_entry = max_abs(a);
  f.min_pivot = std::numeric_limits<double>::infinity();

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double m = std::abs(a(r, col));
      if (m > best) {
        best = m;
        pivot = r;
      }
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      std::swap(f.perm[col], f.perm[pivot]);
      f.parity = -f.parity;
    }
    const double pmod = std::abs(a(col, col));
    f.min_pivot = std::min(f.min_pivot, pmod);
    if (pmod == 0.0) continue;  // exactly singular column, leave it
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = a(r, col) / a(col, col);
      a(r, col) = factor;
      for (std::size_t c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  f.lu = std::move(a);
  return f;
}

inline Complex determinant(const Matrix& m) { return lu_factor(m).det(); }

inline Vector solve_linear(const Matrix& a, const Vector& b) { return lu_factor(a).solve(b); }

}  // namespace finalg
