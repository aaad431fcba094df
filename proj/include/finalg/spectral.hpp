#pragma once

#include <optional>

#include "finalg/norms.hpp"
#include "finalg/polynomial.hpp"

namespace finalg {

struct SpectralCluster {
  Complex value;  // centroid of the merged points
  std::size_t multiplicity = 0;
};

// The spectrum of a: the lambda for which lambda e - a has no inverse in the
// algebra. Through the regular representation this is exactly the eigenvalue
// multiset of L_a, so points holds the dim-many roots of its characteristic
// polynomial (multiple eigenvalues repeated as near-equal values). Clusters
// merge points at the clustering radius; their counts sum to dim.
struct Spectrum {
  std::vector<Complex> points;
  std::vector<SpectralCluster> clusters;
};

namespace detail {

inline bool complex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace detail

inline Spectrum spectrum(const AlgebraElement& a, double tol = RunConfig{}.cluster_radius,
                         double root_tol = RunConfig{}.root_tol) {
  Spectrum result;
  result.points = poly_roots(char_poly(regular_rep(a)), root_tol);
  std::sort(result.points.begin(), result.points.end(), detail::complex_less);

  struct Accumulator {
    Complex sum;
    std::size_t count;
  };
  std::vector<Accumulator> groups;
  for (const Complex& p : result.points) {
    Accumulator* home = nullptr;
    for (Accumulator& g : groups)
      if (std::abs(p - g.sum / static_cast<double>(g.count)) <= tol) {
        home = &g;
        break;
      }
    if (home) {
      home->sum += p;
      ++home->count;
    } else {
      groups.push_back({p, 1});
    }
  }
  for (const Accumulator& g : groups)
    result.clusters.push_back({g.sum / static_cast<double>(g.count), g.count});
  std::sort(result.clusters.begin(), result.clusters.end(),
            [](const SpectralCluster& x, const SpectralCluster& y) {
              return detail::complex_less(x.value, y.value);
            });
  return result;
}

/// Inverse by the Cayley-Hamilton construction. With the monic
/// characteristic polynomial p(z) = z^n + c_{n-1} z^{n-1} + ... + c_0 of the
/// regular representation, p(a) = 0 gives
///   a^{-1} = -(1/c_0)(a^{n-1} + c_{n-1} a^{n-2} + ... + c_1 e),
/// evaluated by Horner in the algebra. |c_0| must clear the scaled
/// singularity threshold tol * (1 + max|L_a|)^n.
inline AlgebraElement invert_cayley_hamilton(const AlgebraElement& a,
                                             double tol = RunConfig{}.invert_tol) {
  const Matrix rep = regular_rep(a);
  const std::size_t n = a.dim();
  const Polynomial p = char_poly(rep);
  const Complex c0 = p.coeff(0);
  const double threshold = tol * std::pow(1.0 + max_abs(rep), static_cast<double>(n));
  if (std::abs(c0) <= threshold)
    throw NotInvertibleError("invert_cayley_hamilton: constant term modulus " +
                             std::to_string(std::abs(c0)) + " is at or below the threshold " +
                             std::to_string(threshold));

  const AlgebraElement e = identity_element(a.algebra());
  AlgebraElement acc = e;  // leading coefficient of the degree n-1 polynomial
  for (std::size_t j = n - 1; j >= 1; --j) acc = acc * a + scale(p.coeff(j), e);
  return scale(Complex(-1.0) / c0, acc);
}

struct InvertibilityCertificate {
  bool invertible = false;
  std::optional<AlgebraElement> inverse;  // the Cayley-Hamilton inverse when invertible
  double det_modulus = 0.0;
  double threshold = 0.0;
};

// a is declared invertible when |det L_a| clears tol * (1 + max|L_a|)^n; the
// scale factor keeps the test meaningful for elements of any magnitude.
inline InvertibilityCertificate is_invertible(const AlgebraElement& a,
                                              double tol = RunConfig{}.invert_tol) {
  const Matrix rep = regular_rep(a);
  InvertibilityCertificate cert;
  cert.det_modulus = std::abs(determinant(rep));
  cert.threshold = tol * std::pow(1.0 + max_abs(rep), static_cast<double>(a.dim()));
  if (cert.det_modulus > cert.threshold) {
    try {
      cert.inverse = invert_cayley_hamilton(a, tol);
      cert.invertible = true;
    } catch (const NotInvertibleError&) {
      // determinant and char-poly constant term straddle the threshold
      cert.invertible = false;
    }
  }
  return cert;
}

enum class InverseSide { Left, Right };

// A right inverse solves L_a y = e and a left inverse solves R_a y = e in
// coordinates. In finite dimension a one-sided inverse is automatically
// two-sided, so the solution is confirmed on both sides within tol before it
// is returned; a singular system (or a failed confirmation) yields nullopt.
inline std::optional<AlgebraElement> one_sided_inverse(const AlgebraElement& a, InverseSide side,
                                                       double tol = 1e-7) {
  const Matrix rep = side == InverseSide::Right ? regular_rep(a) : regular_rep_right(a);
  Vector solution;
  try {
    solution = solve_linear(rep, a.algebra()->identity_coords());
  } catch (const SingularMatrixError&) {
    return std::nullopt;
  }
  const AlgebraElement candidate(a.algebra(), std::move(solution));
  const Vector& e = a.algebra()->identity_coords();
  const auto deviation = [&](const AlgebraElement& product) {
    double worst = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i)
      worst = std::max(worst, std::abs(product.coords()[i] - e[i]));
    return worst;
  };
  if (deviation(a * candidate) > tol || deviation(candidate * a) > tol) return std::nullopt;
  return candidate;
}

struct ResolventResult {
  AlgebraElement value;     // truncated (lambda e - a)^{-1}
  std::size_t terms_used;   // number of summed series terms, k + 1
  double error_bound;       // a-priori tail bound in the chosen algebra norm
};

/// Truncated Neumann series for (lambda e - a)^{-1} = lambda^{-1} sum_j
/// (a / lambda)^j, valid on |lambda| > ||a||. The truncation index is the
/// smallest k whose geometric tail bound
///   ||a||^{k+1} / (|lambda|^{k+1} (|lambda| - ||a||))
/// is at or below target_error; the bound is returned alongside the sum and
/// decreases as more terms are taken.
///
/// Remark: when the algebra acts by operators and the norm is the induced
/// operator norm, invertibility of lambda e - a on this disk also follows
/// from a trivial-kernel argument; the series construction used here works
/// for every submultiplicative norm with ||e|| = 1.
inline ResolventResult resolvent_neumann(const AlgebraElement& a, Complex lambda,
                                         double target_error = RunConfig{}.resolvent_target_error,
                                         NormKind norm_kind = NormKind::RegRepOpL1) {
  if (target_error <= 0.0) throw DomainError("resolvent_neumann: target error must be positive");
  const double norm_a = algebra_norm(a, norm_kind);
  const double mod_lambda = std::abs(lambda);
  if (!(mod_lambda > norm_a)) throw OutOfDiskError(mod_lambda, norm_a);

  const double ratio = norm_a / mod_lambda;
  const double gap = mod_lambda - norm_a;
  std::size_t k = 0;
  double bound = ratio / gap;  // tail bound after the j = 0 term
  while (bound > target_error) {
    ++k;
    if (k + 1 > RunConfig::kNeumannTermCap)
      throw ConvergenceError("resolvent_neumann: term cap exceeded before the tail bound " +
                             std::to_string(bound) + " reached " + std::to_string(target_error));
    bound *= ratio;
  }

  const Complex inv_lambda = Complex(1.0) / lambda;
  AlgebraElement term = identity_element(a.algebra());
  AlgebraElement sum = term;
  for (std::size_t j = 1; j <= k; ++j) {
    term = scale(inv_lambda, term * a);
    sum = sum + term;
  }
  return {scale(inv_lambda, sum), k + 1, bound};
}

}  // namespace finalg
