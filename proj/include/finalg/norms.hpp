#pragma once

#include <optional>
#include <string_view>

#include "finalg/algebra.hpp"

namespace finalg {

// Every supported norm. The first three act on coordinate vectors, the Op*
// kinds are the induced operator norms of a square matrix, and the rest are
// algebra norms of an element (RegRepOp* composes the regular representation
// with the matching operator norm).
enum class NormKind {
  L1,
  L2,
  Linf,
  OpL1,
  OpL2,
  OpLinf,
  SupFunction,
  L1Convolution,
  RegRepOpL1,
  RegRepOpL2,
  RegRepOpLinf,
};

inline bool is_vector_kind(NormKind k) {
  return k == NormKind::L1 || k == NormKind::L2 || k == NormKind::Linf;
}

inline bool is_operator_kind(NormKind k) {
  return k == NormKind::OpL1 || k == NormKind::OpL2 || k == NormKind::OpLinf;
}

inline bool is_algebra_kind(NormKind k) {
  return k == NormKind::SupFunction || k == NormKind::L1Convolution ||
         k == NormKind::RegRepOpL1 || k == NormKind::RegRepOpL2 || k == NormKind::RegRepOpLinf;
}

// CLI spellings
inline std::string_view norm_kind_name(NormKind k) {
  switch (k) {
    case NormKind::L1: return "l1";
    case NormKind::L2: return "l2";
    case NormKind::Linf: return "linf";
    case NormKind::OpL1: return "op-l1";
    case NormKind::OpL2: return "op-l2";
    case NormKind::OpLinf: return "op-linf";
    case NormKind::SupFunction: return "sup";
    case NormKind::L1Convolution: return "conv-l1";
    case NormKind::RegRepOpL1: return "reg-op-l1";
    case NormKind::RegRepOpL2: return "reg-op-l2";
    case NormKind::RegRepOpLinf: return "reg-op-linf";
  }
  return "?";
}

inline std::optional<NormKind> parse_norm_kind(std::string_view name) {
  for (NormKind k : {NormKind::L1, NormKind::L2, NormKind::Linf, NormKind::OpL1, NormKind::OpL2,
                     NormKind::OpLinf, NormKind::SupFunction, NormKind::L1Convolution,
                     NormKind::RegRepOpL1, NormKind::RegRepOpL2, NormKind::RegRepOpLinf})
    if (norm_kind_name(k) == name) return k;
  return std::nullopt;
}

inline double vector_norm(const Vector& v, NormKind kind) {
  switch (kind) {
    case NormKind::L1: {
      double s = 0.0;
      for (const Complex& z : v) s += std::abs(z);
      return s;
    }
    case NormKind::L2: {
      double s = 0.0;
      for (const Complex& z : v) s += std::norm(z);
      return std::sqrt(s);
    }
    case NormKind::Linf:
      return max_abs(v);
    default:
      throw DomainError("vector_norm: kind is not a vector norm");
  }
}

namespace detail {

struct PowerIterationRun {
  double rayleigh = 0.0;  // largest eigenvalue estimate of the PSD operand
  bool converged = false;
};

// Power iteration on a Hermitian PSD matrix. The Rayleigh quotient of the
// normalized iterate increases monotonically, so the final value is always a
// valid lower estimate even when the relative-change test never fires.
inline PowerIterationRun power_iteration(const Matrix& b, Vector v, double tol) {
  PowerIterationRun run;
  const std::size_t n = b.rows();
  double vn = vector_norm(v, NormKind::L2);
  if (vn == 0.0) return {0.0, true};
  for (std::size_t i = 0; i < n; ++i) v[i] /= vn;

  double prev = -1.0;
  for (std::size_t iter = 0; iter < RunConfig::kPowerIterationCap; ++iter) {
    const Vector w = b * v;
    Complex quad = 0.0;
    for (std::size_t i = 0; i < n; ++i) quad += std::conj(v[i]) * w[i];
    run.rayleigh = quad.real();
    if (iter > 0 && std::abs(run.rayleigh - prev) <= tol * std::max(1.0, std::abs(run.rayleigh))) {
      run.converged = true;
      return run;
    }
    prev = run.rayleigh;
    const double wn = vector_norm(w, NormKind::L2);
    if (wn == 0.0) return {0.0, true};  // operand annihilates the iterate
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
  }
  return run;
}

}  // namespace detail

// Induced operator norms. OpL1 is the maximum column modulus-sum and OpLinf
// the maximum row modulus-sum, both exact. OpL2 is the largest singular
// value, estimated by power iteration on m^H m from two deterministic starts
// (all-ones and a fixed pseudo-random vector, the latter covering starts
// orthogonal to the dominant direction); the larger estimate wins.
inline double operator_norm(const Matrix& m, NormKind kind,
                            double tol = RunConfig{}.power_tol) {
  if (!m.square()) throw DimensionError("operator_norm: matrix must be square");
  const std::size_t n = m.rows();
  switch (kind) {
    case NormKind::OpL1: {
      double best = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::abs(m(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::OpLinf: {
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::OpL2: {
      const Matrix b = conjugate_transpose(m) * m;
      const auto first = detail::power_iteration(b, Vector(n, Complex(1.0)), tol);
      Rng rng(0x9e3779b97f4a7c15ull);
      Vector start(n);
      for (Complex& z : start) z = rng.complex_symmetric();
      const auto second = detail::power_iteration(b, std::move(start), tol);
      if (!first.converged && !second.converged)
        throw ConvergenceError("operator_norm: power iteration did not converge, last estimate " +
                               std::to_string(std::sqrt(std::max(first.rayleigh, second.rayleigh))));
      return std::sqrt(std::max(first.rayleigh, second.rayleigh));
    }
    default:
      throw DomainError("operator_norm: kind is not an operator norm");
  }
}

// The three algebra norms. SupFunction is only defined on function algebras
// and L1Convolution only on semigroup algebras; RegRepOp* works on any
// algebra by measuring the regular representation.
inline double algebra_norm(const AlgebraElement& a, NormKind kind,
                           double power_tol = RunConfig{}.power_tol) {
  switch (kind) {
    case NormKind::SupFunction:
      if (a.algebra()->kind() != AlgebraKind::Function)
        throw DomainError("algebra_norm: sup norm is only defined on function algebras");
      return vector_norm(a.coords(), NormKind::Linf);
    case NormKind::L1Convolution:
      if (a.algebra()->kind() != AlgebraKind::Semigroup)
        throw DomainError("algebra_norm: conv-l1 norm is only defined on semigroup algebras");
      return vector_norm(a.coords(), NormKind::L1);
    case NormKind::RegRepOpL1:
      return operator_norm(regular_rep(a), NormKind::OpL1, power_tol);
    case NormKind::RegRepOpL2:
      return operator_norm(regular_rep(a), NormKind::OpL2, power_tol);
    case NormKind::RegRepOpLinf:
      return operator_norm(regular_rep(a), NormKind::OpLinf, power_tol);
    default:
      throw DomainError("algebra_norm: kind is not an algebra norm");
  }
}

// Randomized check of the norm axioms and the normed-algebra axioms on
// seeded element pairs: definiteness at 0, absolute homogeneity, the
// triangle inequality, submultiplicativity, and unit norm of the identity.
// Margins are relative violations, clamped at 0 when the axiom holds.
struct NormAxiomReport {
  struct Axiom {
    double max_margin = 0.0;
    std::size_t violations = 0;
    Vector witness_x, witness_y;  // coordinates at the worst margin
  };

  Axiom definiteness;
  Axiom homogeneity;
  Axiom triangle;
  Axiom submultiplicativity;
  Axiom identity_norm;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;

  double max_margin() const {
    double m = definiteness.max_margin;
    m = std::max(m, homogeneity.max_margin);
    m = std::max(m, triangle.max_margin);
    m = std::max(m, submultiplicativity.max_margin);
    m = std::max(m, identity_norm.max_margin);
    return m;
  }

  bool pass() const { return max_margin() <= tolerance; }
};

inline NormAxiomReport check_norm_axioms(const AlgebraPtr& alg, NormKind kind, std::size_t trials,
                                         std::uint64_t seed, double tolerance = 1e-10) {
  if (!is_algebra_kind(kind)) throw DomainError("check_norm_axioms: kind is not an algebra norm");
  NormAxiomReport report;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = tolerance;

  const auto norm_of = [&](const AlgebraElement& x) { return algebra_norm(x, kind); };
  const auto record = [&](NormAxiomReport::Axiom& axiom, double margin, const AlgebraElement& x,
                          const AlgebraElement* y) {
    if (margin > tolerance) ++axiom.violations;
    if (margin > axiom.max_margin) {
      axiom.max_margin = margin;
      axiom.witness_x = x.coords();
      axiom.witness_y = y ? y->coords() : Vector();
    }
  };

  const AlgebraElement zero = zero_element(alg);
  record(report.definiteness, norm_of(zero), zero, nullptr);

  const AlgebraElement e = identity_element(alg);
  record(report.identity_norm, std::abs(norm_of(e) - 1.0), e, nullptr);

  Rng rng(seed);
  const auto random_element = [&] {
    Vector coords(alg->dim());
    for (Complex& z : coords) z = rng.complex_symmetric();
    return AlgebraElement(alg, std::move(coords));
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const AlgebraElement x = random_element();
    const AlgebraElement y = random_element();
    const Complex alpha = rng.complex_symmetric();

    const double nx = norm_of(x);
    const double ny = norm_of(y);

    const double tri = (norm_of(x + y) - (nx + ny)) / std::max(1.0, nx + ny);
    record(report.triangle, std::max(0.0, tri), x, &y);

    const double target = std::abs(alpha) * nx;
    const double hom = std::abs(norm_of(scale(alpha, x)) - target) / std::max(1.0, target);
    record(report.homogeneity, hom, x, nullptr);

    const double sub = (norm_of(x * y) - nx * ny) / std::max(1.0, nx * ny);
    record(report.submultiplicativity, std::max(0.0, sub), x, &y);
  }

  return report;
}

}  // namespace finalg
