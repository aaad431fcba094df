#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "finalg/matrix.hpp"

namespace finalg {

// Polynomial over the complex numbers; coeffs()[j] multiplies z^j.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coeffs) : coeffs_(std::move(coeffs)) {}
  Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {}

  const Vector& coeffs() const { return coeffs_; }

  Complex coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Complex(0.0); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == 0.0; });
  }

  // highest index with a nonzero coefficient
  std::size_t degree() const {
    for (std::size_t j = coeffs_.size(); j-- > 0;)
      if (coeffs_[j] != 0.0) return j;
    throw DomainError("degree: the zero polynomial has no degree");
  }

  // Horner evaluation
  Complex operator()(Complex z) const {
    Complex acc = 0.0;
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * z + coeffs_[j];
    return acc;
  }

 private:
  Vector coeffs_;
};

inline double max_abs_coeff(const Polynomial& p) { return max_abs(p.coeffs()); }

// Characteristic polynomial det(lambda I - m), monic of degree n, by the
// Faddeev-LeVerrier trace recursion:
//   M_k = m M_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(m M_k) / k,   c_n = 1.
inline Polynomial char_poly(const Matrix& m) {
  if (!m.square()) throw DimensionError("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) throw DimensionError("char_poly: matrix must be at least 1x1");

  Vector c(n + 1);
  c[n] = 1.0;
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    const Complex shift = c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += shift;
    Complex t = 0.0;  // tr(m * M_k) without forming the product
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t += m(i, j) * mk(j, i);
    c[n - k] = -t / static_cast<double>(k);
  }
  return Polynomial(std::move(c));
}

// p(m) = sum_j coeffs_j m^j with m^0 = I, by Horner on matrices.
inline Matrix poly_eval_at_matrix(const Polynomial& p, const Matrix& m) {
  if (!m.square()) throw DimensionError("poly_eval_at_matrix: matrix must be square");
  const std::size_t n = m.rows();
  const Vector& c = p.coeffs();
  Matrix acc(n, n);
  if (c.empty()) return acc;
  for (std::size_t i = 0; i < n; ++i) acc(i, i) = c.back();
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[j];
  }
  return acc;
}

// All degree-many roots (multiple roots repeated as near-equal values) by
// Durand-Kerner simultaneous iteration. Deterministic initial guesses
// (0.4 + 0.9i)^k; sweeps stop when the largest correction falls below
// kRootStepTol * (1 + max |root|) or at the iteration cap. Either way the
// result is accepted only if every residual satisfies
// |p(r)| <= tol * (1 + max |coeff|); otherwise ConvergenceError.
inline std::vector<Complex> poly_roots(const Polynomial& p,
                                       double tol = RunConfig{}.root_tol) {
  if (p.is_zero()) throw DomainError("poly_roots: zero polynomial");
  const std::size_t deg = p.degree();
  if (deg == 0) throw DomainError("poly_roots: constant polynomial has no roots");
  const Complex lead = p.coeff(deg);
  if (std::abs(lead) <= tol)
    throw DomainError("poly_roots: leading coefficient modulus is below the tolerance");

  Vector monic(deg + 1);
  for (std::size_t j = 0; j <= deg; ++j) monic[j] = p.coeff(j) / lead;
  const auto eval_monic = [&](Complex z) {
    Complex acc = 0.0;
    for (std::size_t j = deg + 1; j-- > 0;) acc = acc * z + monic[j];
    return acc;
  };

  std::vector<Complex> roots(deg);
  const Complex spiral(0.4, 0.9);
  Complex g = 1.0;
  for (std::size_t k = 0; k < deg; ++k) {
    roots[k] = g;
    g *= spiral;
  }

  for (std::size_t iter = 0; iter < RunConfig::kRootIterationCap; ++iter) {
    double max_step = 0.0;
    double max_mod = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      const Complex value = eval_monic(roots[i]);
      max_mod = std::max(max_mod, std::abs(roots[i]));
      if (std::abs(value) == 0.0) continue;  // already an exact root
      Complex dens = 1.0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) dens *= roots[i] - roots[j];
      if (std::abs(dens) == 0.0) continue;  // coincident iterates, skip this sweep
      const Complex step = value / dens;
      roots[i] -= step;
      max_step = std::max(max_step, std::abs(step));
      max_mod = std::max(max_mod, std::abs(roots[i]));
    }
    if (max_step <= RunConfig::kRootStepTol * (1.0 + max_mod)) break;
  }

  const double allow = tol * (1.0 + max_abs_coeff(p));
  double worst = 0.0;
  for (const Complex& r : roots) worst = std::max(worst, std::abs(p(r)));
  if (worst > allow)
    throw ConvergenceError("poly_roots: worst residual " + std::to_string(worst) +
                           " exceeds the acceptance bound " + std::to_string(allow));
  return roots;
}

}  // namespace finalg
