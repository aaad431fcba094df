#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace finalg {

using Complex = std::complex<double>;
using Vector  = std::vector<Complex>;

// Base for everything thrown by the library. The CLI maps ParseError to
// exit code 2 and every other Error to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class IncompatibleAlgebraError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Thrown when a Neumann resolvent is requested outside |lambda| > ||x||.
class OutOfDiskError : public Error {
 public:
  OutOfDiskError(double lambda_modulus, double element_norm)
      : Error("resolvent: |lambda| = " + std::to_string(lambda_modulus) +
              " does not exceed the element norm " + std::to_string(element_norm)),
        lambda_modulus_(lambda_modulus),
        element_norm_(element_norm) {}

  double lambda_modulus() const { return lambda_modulus_; }
  double element_norm() const { return element_norm_; }

 private:
  double lambda_modulus_;
  double element_norm_;
};

// Numeric knobs and their defaults, centralized so that nothing downstream
// hard-codes a tolerance.
struct RunConfig {
  double root_tol = 1e-9;                 // polynomial root residual acceptance
  double invert_tol = 1e-10;              // scaled determinant threshold
  double cluster_radius = 1e-6;           // spectrum cluster merge radius
  double resolvent_target_error = 1e-10;  // Neumann truncation budget
  double power_tol = 1e-10;               // operator 2-norm power iteration
  std::size_t trials = 500;               // randomized axiom checking
  std::uint64_t seed = 0;

  static constexpr std::size_t kRootIterationCap = 1000;
  static constexpr double kRootStepTol = 1e-12;
  static constexpr std::size_t kPowerIterationCap = 10000;
  static constexpr std::size_t kNeumannTermCap = 1000000;
  static constexpr double kPivotFloor = 1e-12;

  // FINALG_DEFAULT_TOL, when set to a positive number, replaces the whole
  // tolerance bundle (root, invertibility, cluster radius, resolvent target).
  static RunConfig from_env() {
    RunConfig cfg;
    if (const char* v = std::getenv("FINALG_DEFAULT_TOL")) {
      char* end = nullptr;
      const double tol = std::strtod(v, &end);
      if (end != v && tol > 0.0) {
        cfg.root_tol = tol;
        cfg.invert_tol = tol;
        cfg.cluster_radius = tol;
        cfg.resolvent_target_error = tol;
      }
    }
    return cfg;
  }
};

// Seeded generator with hand-rolled uniforms, so the same seed reproduces
// the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1)
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // uniform in [-1, 1)
  double symmetric() { return 2.0 * unit() - 1.0; }

  // re and im independently uniform in [-1, 1)
  Complex complex_symmetric() {
    const double re = symmetric();
    const double im = symmetric();
    return {re, im};
  }

  // uniform in [0, bound)
  std::uint64_t integer(std::uint64_t bound) { return engine_() % bound; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace finalg
