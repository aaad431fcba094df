// Batch front-end: load Cayley tables and element files, run the library
// operations, print machine-readable results. Exit codes: 0 success,
// 1 domain failure (not invertible, axiom violation, out of the convergence
// disk), 2 input or parse error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "finalg/finalg.hpp"

namespace {

using namespace finalg;

void print_element(const AlgebraElement& a) {
  for (const Complex& z : a.coords()) std::cout << format_coordinate(z) << "\n";
}

Complex parse_lambda(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--lambda expects 're,im'");
  const std::string re_part = text.substr(0, comma);
  const std::string im_part = text.substr(comma + 1);
  char* end = nullptr;
  const double re = std::strtod(re_part.c_str(), &end);
  if (end == re_part.c_str() || *end != '\0') throw ParseError("--lambda: bad real part '" + re_part + "'");
  const double im = std::strtod(im_part.c_str(), &end);
  if (end == im_part.c_str() || *end != '\0') throw ParseError("--lambda: bad imaginary part '" + im_part + "'");
  return {re, im};
}

NormKind require_kind(const std::string& name) {
  const auto kind = parse_norm_kind(name);
  if (!kind) throw DomainError("unknown norm kind '" + name + "'");
  return *kind;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional complex algebras: norms, spectra, inverses, resolvents"};
  app.require_subcommand(1);

  RunConfig cfg = RunConfig::from_env();

  std::string table_path, element_path, f_path, g_path;
  std::string side, lambda_text, kind_name, algebra_spec;
  std::string resolvent_norm = "reg-op-l1";
  double cluster_tol = cfg.cluster_radius;
  double target_error = cfg.resolvent_target_error;
  std::size_t trials = cfg.trials;
  std::uint64_t seed = cfg.seed;

  auto* cmd_validate = app.add_subcommand("validate-semigroup", "check a Cayley table against the semigroup axioms");
  cmd_validate->add_option("table", table_path, "Cayley table file")->required();

  auto* cmd_spectrum = app.add_subcommand("spectrum", "clustered spectrum of an element, one 're im multiplicity' line per cluster");
  cmd_spectrum->add_option("element", element_path, "element file")->required();
  cmd_spectrum->add_option("--tol", cluster_tol, "cluster merge radius");

  auto* cmd_invert = app.add_subcommand("invert", "Cayley-Hamilton inverse of an element");
  cmd_invert->add_option("element", element_path, "element file")->required();

  auto* cmd_onesided = app.add_subcommand("one-sided-inverse", "left or right inverse via a linear solve");
  cmd_onesided->add_option("element", element_path, "element file")->required();
  cmd_onesided->add_option("--side", side, "left | right")->required()->check(CLI::IsMember({"left", "right"}));

  auto* cmd_resolvent = app.add_subcommand("resolvent", "truncated Neumann series for (lambda e - a)^(-1)");
  cmd_resolvent->add_option("element", element_path, "element file")->required();
  cmd_resolvent->add_option("--lambda", lambda_text, "complex number as 're,im'")->required();
  cmd_resolvent->add_option("--error", target_error, "truncation error budget");
  cmd_resolvent->add_option("--norm", resolvent_norm, "algebra norm gating the series");

  auto* cmd_norm = app.add_subcommand("norm", "norm of an element");
  cmd_norm->add_option("element", element_path, "element file")->required();
  cmd_norm->add_option("--kind", kind_name, "l1 | l2 | linf | sup | conv-l1 | reg-op-l1 | reg-op-l2 | reg-op-linf")->required();

  auto* cmd_convolve = app.add_subcommand("convolve", "convolution of two functions over a Cayley table");
  cmd_convolve->add_option("f", f_path, "coordinate file")->required();
  cmd_convolve->add_option("g", g_path, "coordinate file")->required();
  cmd_convolve->add_option("table", table_path, "Cayley table file")->required();

  auto* cmd_axioms = app.add_subcommand("check-axioms", "randomized norm and normed-algebra axiom check");
  cmd_axioms->add_option("--algebra", algebra_spec, "'function n' | 'matrix d' | 'semigroup <table>'")->required();
  cmd_axioms->add_option("--kind", kind_name, "algebra norm kind")->required();
  cmd_axioms->add_option("--trials", trials, "random pairs to draw");
  cmd_axioms->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_validate)) {
      const CayleyTable t = load_cayley_table(table_path);
      const TableValidationReport report = validate_table(t);
      if (report.pass()) {
        std::cout << "OK\n";
        return 0;
      }
      if (!report.assoc_ok && report.assoc_witness) {
        const auto& w = *report.assoc_witness;
        std::cout << "ASSOC-FAIL " << w.x << " " << w.y << " " << w.z << "\n";
      } else if (!report.closure_ok && report.closure_witness) {
        std::cout << "CLOSURE-FAIL " << report.closure_witness->x << " " << report.closure_witness->y << "\n";
      } else {
        std::cout << "IDENT-FAIL " << report.identity_witness.value_or(t.theta()) << "\n";
      }
      return 1;
    }

    if (app.got_subcommand(cmd_spectrum)) {
      const AlgebraElement a = load_element_file(element_path);
      const Spectrum s = spectrum(a, cluster_tol, cfg.root_tol);
      for (const SpectralCluster& c : s.clusters)
        std::cout << format_real(c.value.real()) << " " << format_real(c.value.imag()) << " "
                  << c.multiplicity << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_invert)) {
      const AlgebraElement a = load_element_file(element_path);
      const InvertibilityCertificate cert = is_invertible(a, cfg.invert_tol);
      if (!cert.invertible) {
        std::cerr << "not invertible: |det| = " << format_real(cert.det_modulus)
                  << " threshold = " << format_real(cert.threshold) << "\n";
        return 1;
      }
      print_element(*cert.inverse);
      return 0;
    }

    if (app.got_subcommand(cmd_onesided)) {
      const AlgebraElement a = load_element_file(element_path);
      const auto inverse =
          one_sided_inverse(a, side == "left" ? InverseSide::Left : InverseSide::Right);
      if (!inverse) {
        std::cerr << "no " << side << " inverse\n";
        return 1;
      }
      print_element(*inverse);
      return 0;
    }

    if (app.got_subcommand(cmd_resolvent)) {
      const AlgebraElement a = load_element_file(element_path);
      const Complex lambda = parse_lambda(lambda_text);
      const NormKind kind = require_kind(resolvent_norm);
      if (!is_algebra_kind(kind)) throw DomainError("--norm must name an algebra norm kind");
      try {
        const ResolventResult r = resolvent_neumann(a, lambda, target_error, kind);
        print_element(r.value);
      } catch (const OutOfDiskError& e) {
        std::cout << "OUT-OF-DISK |lambda|=" << format_real(e.lambda_modulus())
                  << " norm=" << format_real(e.element_norm()) << "\n";
        return 1;
      }
      return 0;
    }

    if (app.got_subcommand(cmd_norm)) {
      const AlgebraElement a = load_element_file(element_path);
      const NormKind kind = require_kind(kind_name);
      double value = 0.0;
      if (is_vector_kind(kind))
        value = vector_norm(a.coords(), kind);
      else if (is_algebra_kind(kind))
        value = algebra_norm(a, kind, cfg.power_tol);
      else
        throw DomainError("operator norm kinds apply to matrices; use reg-op-* for elements");
      std::cout << format_real(value) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_convolve)) {
      const CayleyTable t = load_cayley_table(table_path);
      const Vector f = load_vector_file(f_path);
      const Vector g = load_vector_file(g_path);
      if (f.size() != t.size() || g.size() != t.size())
        throw ParseError("convolve operands must have exactly " + std::to_string(t.size()) +
                         " coordinates");
      for (const Complex& z : convolve(f, g, t)) std::cout << format_coordinate(z) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_axioms)) {
      const AlgebraPtr alg = parse_algebra_spec(algebra_spec, std::filesystem::current_path());
      const NormKind kind = require_kind(kind_name);
      if (!is_algebra_kind(kind)) throw DomainError("--kind must name an algebra norm");
      const NormAxiomReport r = check_norm_axioms(alg, kind, trials, seed);
      std::cout << "definiteness " << format_real(r.definiteness.max_margin) << "\n";
      std::cout << "homogeneity " << format_real(r.homogeneity.max_margin) << "\n";
      std::cout << "triangle " << format_real(r.triangle.max_margin) << "\n";
      std::cout << "submultiplicativity " << format_real(r.submultiplicativity.max_margin) << "\n";
      std::cout << "identity-norm " << format_real(r.identity_norm.max_margin) << "\n";
      if (r.pass()) {
        std::cout << "OK\n";
        return 0;
      }
      const std::size_t total = r.definiteness.violations + r.homogeneity.violations +
                                r.triangle.violations + r.submultiplicativity.violations +
                                r.identity_norm.violations;
      std::cout << "VIOLATIONS " << total << "\n";
      return 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
