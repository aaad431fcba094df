#pragma once

#include <array>
#include <memory>
#include <utility>

#include "finalg/matrix.hpp"
#include "finalg/semigroup.hpp"

namespace finalg {

enum class AlgebraKind { Function, MatrixUnits, Semigroup, Custom };

/// A finite-dimensional unital algebra represented by structure constants:
/// b_i b_j = sum_k tensor[i][j][k] b_k for the chosen basis. The identity's
/// coordinates are stored explicitly; the constructors below know them, and
/// user-supplied algebras must provide them (validate_algebra confirms).
/// Immutable after construction, so instances are freely shared across
/// threads.
class StructureAlgebra {
 public:
  StructureAlgebra(std::size_t dim, Vector tensor, Vector identity,
                   AlgebraKind kind = AlgebraKind::Custom)
      : dim_(dim), tensor_(std::move(tensor)), identity_(std::move(identity)), kind_(kind) {
    if (dim_ == 0) throw DomainError("algebra must have positive dimension");
    if (tensor_.size() != dim_ * dim_ * dim_)
      throw DimensionError("structure tensor must hold dim^3 entries");
    if (identity_.size() != dim_)
      throw DimensionError("identity coordinates must have length dim");
  }

  std::size_t dim() const { return dim_; }
  AlgebraKind kind() const { return kind_; }
  const Vector& identity_coords() const { return identity_; }
  const Vector& tensor() const { return tensor_; }

  // coefficient of b_k in b_i * b_j
  Complex structure(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim_ + j) * dim_ + k];
  }

  // Structural identity; the kind tag is metadata and does not participate.
  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
    return a.dim_ == b.dim_ && a.tensor_ == b.tensor_ && a.identity_ == b.identity_;
  }

 private:
  std::size_t dim_;
  Vector tensor_;
  Vector identity_;
  AlgebraKind kind_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

// coordinates of the product, out_k = sum_ij a_i b_j tensor[i][j][k]
inline Vector structure_product(const StructureAlgebra& alg, const Vector& a, const Vector& b) {
  const std::size_t n = alg.dim();
  if (a.size() != n || b.size() != n)
    throw DimensionError("structure_product: coordinate length must equal dim");
  const Vector& t = alg.tensor();
  Vector out(n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex w = a[i] * b[j];
      if (w == 0.0) continue;
      const Complex* slice = &t[(i * n + j) * n];
      for (std::size_t k = 0; k < n; ++k) out[k] += w * slice[k];
    }
  }
  return out;
}

/// Element of an algebra as a coordinate vector in the owning algebra's
/// basis. The owning algebra is checked at operation time; elements of
/// different algebras never coerce.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, Vector coords)
      : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (!algebra_) throw DomainError("element requires an owning algebra");
    if (coords_.size() != algebra_->dim())
      throw DimensionError("coordinate count must equal the algebra dimension");
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const Vector& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }

 private:
  AlgebraPtr algebra_;
  Vector coords_;
};

inline bool compatible(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra() == b.algebra() || *a.algebra() == *b.algebra();
}

inline AlgebraElement identity_element(const AlgebraPtr& alg) {
  return AlgebraElement(alg, alg->identity_coords());
}

inline AlgebraElement zero_element(const AlgebraPtr& alg) {
  return AlgebraElement(alg, Vector(alg->dim(), Complex(0.0)));
}

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!compatible(a, b))
    throw IncompatibleAlgebraError("multiply: elements belong to different algebras");
  return AlgebraElement(a.algebra(), structure_product(*a.algebra(), a.coords(), b.coords()));
}

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  if (!compatible(a, b))
    throw IncompatibleAlgebraError("add: elements belong to different algebras");
  Vector out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords()[i] + b.coords()[i];
  return AlgebraElement(a.algebra(), std::move(out));
}

inline AlgebraElement scale(Complex s, const AlgebraElement& a) {
  Vector out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a.coords()[i];
  return AlgebraElement(a.algebra(), std::move(out));
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }
inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return add(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return add(a, scale(-1.0, b)); }
inline AlgebraElement operator*(Complex s, const AlgebraElement& a) { return scale(s, a); }

/// Left regular representation: the matrix of x -> a x, column j holding the
/// coordinates of a * b_j. Unital homomorphism: L_e = I and L_{ab} = L_a L_b.
/// Faithful, since applying L_a to the identity's coordinates recovers a.
inline Matrix regular_rep(const AlgebraElement& a) {
  const StructureAlgebra& alg = *a.algebra();
  const std::size_t n = alg.dim();
  Matrix rep(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex ai = a.coords()[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) rep(k, j) += ai * alg.structure(i, j, k);
  }
  return rep;
}

/// Matrix of x -> x a, column j holding the coordinates of b_j * a. This is
/// an anti-homomorphism: R_{ab} = R_b R_a.
inline Matrix regular_rep_right(const AlgebraElement& a) {
  const StructureAlgebra& alg = *a.algebra();
  const std::size_t n = alg.dim();
  Matrix rep(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex ai = a.coords()[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) rep(k, j) += ai * alg.structure(j, i, k);
  }
  return rep;
}

/// Pointwise multiplication of functions on n points: diagonal structure
/// tensor, identity all-ones. Commutative.
inline AlgebraPtr make_function_algebra(std::size_t n) {
  if (n == 0) throw DomainError("function algebra needs at least one point");
  Vector tensor(n * n * n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i) tensor[(i * n + i) * n + i] = 1.0;
  return std::make_shared<const StructureAlgebra>(n, std::move(tensor), Vector(n, Complex(1.0)),
                                                  AlgebraKind::Function);
}

/// Full d x d matrix algebra over the matrix units E_ij in row-major order
/// (E_11, E_12, ...). E_ij E_kl = [j = k] E_il; the identity is the
/// coordinate vector of the identity matrix. Dimension d^2.
inline AlgebraPtr make_matrix_algebra(std::size_t d) {
  if (d == 0) throw DomainError("matrix algebra needs dimension at least 1");
  const std::size_t n = d * d;
  Vector tensor(n * n * n, Complex(0.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        const std::size_t p = i * d + j;  // E_ij
        const std::size_t q = j * d + l;  // E_jl
        const std::size_t r = i * d + l;  // E_il
        tensor[(p * n + q) * n + r] = 1.0;
      }
  Vector identity(n, Complex(0.0));
  for (std::size_t i = 0; i < d; ++i) identity[i * d + i] = 1.0;
  return std::make_shared<const StructureAlgebra>(n, std::move(tensor), std::move(identity),
                                                  AlgebraKind::MatrixUnits);
}

/// Convolution algebra of a finite semigroup with identity: basis delta_x,
/// tensor[i][j][k] = [i j = k], identity delta_theta. Multiplication of
/// coordinate vectors agrees with convolve on every input. The table is
/// validated first; an invalid table raises TableValidationError carrying
/// the report.
inline AlgebraPtr make_semigroup_algebra(const CayleyTable& t) {
  TableValidationReport report = validate_table(t);
  if (!report.pass()) throw TableValidationError(std::move(report));
  const std::size_t n = t.size();
  Vector tensor(n * n * n, Complex(0.0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) tensor[(x * n + y) * n + t.product(x, y)] = 1.0;
  Vector identity(n, Complex(0.0));
  identity[t.theta()] = 1.0;
  return std::make_shared<const StructureAlgebra>(n, std::move(tensor), std::move(identity),
                                                  AlgebraKind::Semigroup);
}

// Axiom residuals for a structure tensor. Distributivity is not checked:
// multiplication is bilinear in coordinates by construction, so it holds for
// every structure tensor. The worst triple is (i, j, k) for associativity
// and (j, 0, 0) for the identity laws.
struct AlgebraValidationReport {
  struct Check {
    bool pass = true;
    double worst_residual = 0.0;
    std::array<std::size_t, 3> worst = {0, 0, 0};
  };

  double tol = 0.0;
  Check left_identity;
  Check right_identity;
  Check associativity;

  bool pass() const { return left_identity.pass && right_identity.pass && associativity.pass; }
};

inline AlgebraValidationReport validate_algebra(const StructureAlgebra& alg, double tol = 1e-10) {
  const std::size_t n = alg.dim();
  const Vector& t = alg.tensor();
  const Vector& e = alg.identity_coords();
  AlgebraValidationReport report;
  report.tol = tol;

  const auto record = [tol](AlgebraValidationReport::Check& check, double residual,
                            std::array<std::size_t, 3> at) {
    if (residual > check.worst_residual) {
      check.worst_residual = residual;
      check.worst = at;
    }
    if (residual > tol) check.pass = false;
  };

  // e b_j = b_j and b_j e = b_j for every basis vector
  for (std::size_t j = 0; j < n; ++j) {
    double left = 0.0, right = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex lk = 0.0, rk = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        lk += e[i] * t[(i * n + j) * n + k];
        rk += e[i] * t[(j * n + i) * n + k];
      }
      const Complex expect = (k == j) ? Complex(1.0) : Complex(0.0);
      left = std::max(left, std::abs(lk - expect));
      right = std::max(right, std::abs(rk - expect));
    }
    record(report.left_identity, left, {j, 0, 0});
    record(report.right_identity, right, {j, 0, 0});
  }

  // (b_i b_j) b_k versus b_i (b_j b_k) over all triples
  Vector lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex* ij = &t[(i * n + j) * n];
        const Complex* jk = &t[(j * n + k) * n];
        for (std::size_t r = 0; r < n; ++r) {
          lhs[r] = 0.0;
          rhs[r] = 0.0;
        }
        for (std::size_t m = 0; m < n; ++m) {
          if (ij[m] != 0.0) {
            const Complex* mk = &t[(m * n + k) * n];
            for (std::size_t r = 0; r < n; ++r) lhs[r] += ij[m] * mk[r];
          }
          if (jk[m] != 0.0) {
            const Complex* im = &t[(i * n + m) * n];
            for (std::size_t r = 0; r < n; ++r) rhs[r] += jk[m] * im[r];
          }
        }
        double residual = 0.0;
        for (std::size_t r = 0; r < n; ++r) residual = std::max(residual, std::abs(lhs[r] - rhs[r]));
        record(report.associativity, residual, {i, j, k});
      }

  return report;
}

}  // namespace finalg
