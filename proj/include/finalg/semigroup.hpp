#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "finalg/core.hpp"

namespace finalg {

// Multiplication table of a finite semigroup with identity element theta.
// Entries are 0-based element indices; entry (x, y) holds the product x*y.
// The table stores whatever it is given; validate_table checks the axioms.
class CayleyTable {
 public:
  CayleyTable(std::size_t n, std::size_t theta, std::vector<std::size_t> entries)
      : n_(n), theta_(theta), entries_(std::move(entries)) {
    if (n_ == 0) throw DomainError("CayleyTable: need at least one element");
    if (entries_.size() != n_ * n_) throw DimensionError("CayleyTable: entry count must be n*n");
  }

  std::size_t size() const { return n_; }
  std::size_t theta() const { return theta_; }
  std::size_t product(std::size_t x, std::size_t y) const { return entries_[x * n_ + y]; }

 private:
  std::size_t n_;
  std::size_t theta_;
  std::vector<std::size_t> entries_;
};

// Per-axiom outcome with the first violation found for each axiom. The
// uniqueness scan lists every candidate that acts as a two-sided identity.
// Associativity and identity are only meaningful on a closed table, so they
// are reported as found only when closure holds and theta is in range.
struct TableValidationReport {
  struct ClosureWitness {
    std::size_t x, y, value;
  };
  struct AssocWitness {
    std::size_t x, y, z;
  };

  bool closure_ok = true;
  std::optional<ClosureWitness> closure_witness;
  bool assoc_ok = true;
  std::optional<AssocWitness> assoc_witness;
  bool identity_ok = true;
  std::optional<std::size_t> identity_witness;
  bool identity_unique = true;
  std::vector<std::size_t> identities;

  bool pass() const { return closure_ok && assoc_ok && identity_ok && identity_unique; }
};

inline TableValidationReport validate_table(const CayleyTable& t) {
  TableValidationReport report;
  const std::size_t n = t.size();

  for (std::size_t x = 0; x < n && report.closure_ok; ++x)
    for (std::size_t y = 0; y < n && report.closure_ok; ++y)
      if (t.product(x, y) >= n) {
        report.closure_ok = false;
        report.closure_witness = {x, y, t.product(x, y)};
      }

  if (t.theta() >= n) {
    report.identity_ok = false;
    report.identity_unique = false;
  }
  if (!report.closure_ok || t.theta() >= n) return report;

  // exhaustive scan over all n^3 triples, first witness kept
  for (std::size_t x = 0; x < n && report.assoc_ok; ++x)
    for (std::size_t y = 0; y < n && report.assoc_ok; ++y)
      for (std::size_t z = 0; z < n && report.assoc_ok; ++z)
        if (t.product(t.product(x, y), z) != t.product(x, t.product(y, z))) {
          report.assoc_ok = false;
          report.assoc_witness = {x, y, z};
        }

  for (std::size_t x = 0; x < n; ++x)
    if (t.product(t.theta(), x) != x || t.product(x, t.theta()) != x) {
      report.identity_ok = false;
      report.identity_witness = x;
      break;
    }

  for (std::size_t cand = 0; cand < n; ++cand) {
    bool works = true;
    for (std::size_t x = 0; x < n && works; ++x)
      works = t.product(cand, x) == x && t.product(x, cand) == x;
    if (works) report.identities.push_back(cand);
  }
  report.identity_unique = report.identities.size() == 1 && report.identities[0] == t.theta();

  return report;
}

class TableValidationError : public Error {
 public:
  explicit TableValidationError(TableValidationReport report)
      : Error(describe(report)), report_(std::move(report)) {}

  const TableValidationReport& report() const { return report_; }

 private:
  static std::string describe(const TableValidationReport& r) {
    std::string msg = "cayley table failed validation:";
    if (!r.closure_ok && r.closure_witness)
      msg += " entry (" + std::to_string(r.closure_witness->x) + ", " +
             std::to_string(r.closure_witness->y) + ") = " +
             std::to_string(r.closure_witness->value) + " is out of range;";
    if (!r.assoc_ok && r.assoc_witness)
      msg += " associativity fails at (" + std::to_string(r.assoc_witness->x) + ", " +
             std::to_string(r.assoc_witness->y) + ", " + std::to_string(r.assoc_witness->z) + ");";
    if (!r.identity_ok)
      msg += " theta is not a two-sided identity" +
             (r.identity_witness ? " (witness " + std::to_string(*r.identity_witness) + ")" : std::string()) + ";";
    return msg;
  }

  TableValidationReport report_;
};

// Complex-valued function on the semigroup, values[x] = f(x).
using SemigroupFunction = Vector;

inline SemigroupFunction delta(std::size_t x, const CayleyTable& t) {
  if (x >= t.size()) throw DomainError("delta: index out of range");
  SemigroupFunction f(t.size(), Complex(0.0));
  f[x] = 1.0;
  return f;
}

// (f*g)(z) = sum over all pairs with x y = z of f(x) g(y), accumulated by a
// double loop into index product(x, y). Bilinear in f and g.
inline SemigroupFunction convolve(const SemigroupFunction& f, const SemigroupFunction& g,
                                  const CayleyTable& t) {
  const std::size_t n = t.size();
  if (f.size() != n || g.size() != n)
    throw DimensionError("convolve: function length must match the table");
  SemigroupFunction out(n, Complex(0.0));
  for (std::size_t x = 0; x < n; ++x) {
    if (f[x] == 0.0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t z = t.product(x, y);
      if (z >= n) throw DomainError("convolve: table entry out of range");
      out[z] += f[x] * g[y];
    }
  }
  return out;
}

namespace detail {

// strips a '#' comment; true when anything non-blank remains
inline bool significant_line(std::string& line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace detail

// Text format: first significant line "n theta", then n rows of n 0-based
// indices; row x, column y holds x*y. '#' starts a comment. Parse failures
// carry the 1-based line number.
inline CayleyTable parse_cayley_table(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  const auto next_line = [&](std::string& out) {
    while (std::getline(in, raw)) {
      ++lineno;
      std::string s = raw;
      if (detail::significant_line(s)) {
        out = s;
        return true;
      }
    }
    return false;
  };
  const auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + what);
  };

  std::string text;
  if (!next_line(text)) throw ParseError("cayley table: missing 'n theta' header");
  std::istringstream head(text);
  long long n = 0, theta = 0;
  std::string junk;
  if (!(head >> n >> theta) || (head >> junk)) throw fail("expected header 'n theta'");
  if (n < 1) throw fail("need at least one element");
  if (theta < 0 || theta >= n) throw fail("theta index out of range");

  const auto count = static_cast<std::size_t>(n);
  std::vector<std::size_t> entries;
  entries.reserve(count * count);
  for (std::size_t row = 0; row < count; ++row) {
    if (!next_line(text)) throw ParseError("cayley table: expected " + std::to_string(count) +
                                           " rows, got " + std::to_string(row));
    std::istringstream cells(text);
    long long v = 0;
    for (std::size_t col = 0; col < count; ++col) {
      if (!(cells >> v)) throw fail("expected " + std::to_string(count) + " indices in the row");
      if (v < 0 || v >= n) throw fail("index " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(n) + ")");
      entries.push_back(static_cast<std::size_t>(v));
    }
    if (cells >> junk) throw fail("trailing token '" + junk + "' after " +
                                  std::to_string(count) + " indices");
  }
  return CayleyTable(count, static_cast<std::size_t>(theta), std::move(entries));
}

inline CayleyTable load_cayley_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  try {
    return parse_cayley_table(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace finalg
