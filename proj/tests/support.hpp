#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "finalg/finalg.hpp"

// Shared test helpers: random inputs, the cofactor-expansion characteristic
// polynomial oracle, and a generator of valid random monoid tables.

namespace testsupport {

using namespace finalg;

inline Matrix random_matrix(std::size_t n, Rng& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_symmetric();
  return m;
}

inline AlgebraElement random_element(const AlgebraPtr& alg, Rng& rng) {
  Vector coords(alg->dim());
  for (Complex& z : coords) z = rng.complex_symmetric();
  return AlgebraElement(alg, std::move(coords));
}

inline double max_coord_diff(const AlgebraElement& a, const AlgebraElement& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    worst = std::max(worst, std::abs(a.coords()[i] - b.coords()[i]));
  return worst;
}

// max distance after pairing two complex multisets sorted by (re, im)
inline double sorted_pairing_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const auto less = [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial oracle: det(lambda I - m) expanded by recursive
// first-row cofactors over polynomial-valued entries. Exponential cost, fine
// for n <= 6, and fully independent of the trace-recursion implementation.

using PolyVec = std::vector<Complex>;  // PolyVec[j] multiplies lambda^j

inline PolyVec poly_add(const PolyVec& a, const PolyVec& b) {
  PolyVec out(std::max(a.size(), b.size()), Complex(0.0));
  for (std::size_t j = 0; j < a.size(); ++j) out[j] += a[j];
  for (std::size_t j = 0; j < b.size(); ++j) out[j] += b[j];
  return out;
}

inline PolyVec poly_mul(const PolyVec& a, const PolyVec& b) {
  if (a.empty() || b.empty()) return {};
  PolyVec out(a.size() + b.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline PolyVec poly_negate(const PolyVec& a) {
  PolyVec out = a;
  for (Complex& c : out) c = -c;
  return out;
}

inline PolyVec det_poly(const std::vector<std::vector<PolyVec>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  PolyVec acc;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<PolyVec>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) minor[r - 1].push_back(m[r][c]);
    PolyVec term = poly_mul(m[0][col], det_poly(minor));
    if (col % 2 == 1) term = poly_negate(term);
    acc = poly_add(acc, term);
  }
  return acc;
}

inline Polynomial char_poly_cofactor(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<PolyVec>> entries(n, std::vector<PolyVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        entries[i][j] = {-m(i, j), Complex(1.0)};
      else
        entries[i][j] = {-m(i, j)};
    }
  return Polynomial(det_poly(entries));
}

// ---------------------------------------------------------------------------
// Random valid monoid tables. Random entries are essentially never
// associative, so tables are drawn from associative families and then
// relabeled by a random permutation (which moves theta away from 0).

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng.integer(i + 1)]);
  return perm;
}

inline CayleyTable relabel(const CayleyTable& t, const std::vector<std::size_t>& perm) {
  const std::size_t n = t.size();
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = i;
  std::vector<std::size_t> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      entries[x * n + y] = perm[t.product(inverse[x], inverse[y])];
  return CayleyTable(n, perm[t.theta()], std::move(entries));
}

inline CayleyTable cyclic_table(std::size_t n) {
  std::vector<std::size_t> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = (x + y) % n;
  return CayleyTable(n, 0, std::move(entries));
}

inline CayleyTable max_semilattice_table(std::size_t n) {
  std::vector<std::size_t> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = std::max(x, y);
  return CayleyTable(n, 0, std::move(entries));
}

inline CayleyTable mod_multiplication_table(std::size_t n) {
  std::vector<std::size_t> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = (x * y) % n;
  return CayleyTable(n, 1, std::move(entries));
}

// cyclic group on {0 .. n-2} plus an absorbing element n-1
inline CayleyTable absorbing_table(std::size_t n) {
  const std::size_t z = n - 1;
  std::vector<std::size_t> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      entries[x * n + y] = (x == z || y == z) ? z : (x + y) % (n - 1);
  return CayleyTable(n, 0, std::move(entries));
}

inline CayleyTable product_of_cyclics_table(std::size_t a, std::size_t b) {
  const std::size_t n = a * b;
  std::vector<std::size_t> entries(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t u = (x / b + y / b) % a;
      const std::size_t v = (x % b + y % b) % b;
      entries[x * n + y] = u * b + v;
    }
  return CayleyTable(n, 0, std::move(entries));
}

inline CayleyTable random_monoid_table(std::size_t n, Rng& rng) {
  CayleyTable base = cyclic_table(n);
  switch (rng.integer(5)) {
    case 0: break;
    case 1: base = max_semilattice_table(n); break;
    case 2:
      if (n >= 2) base = mod_multiplication_table(n);
      break;
    case 3:
      if (n >= 2) base = absorbing_table(n);
      break;
    case 4: {
      std::size_t a = 0;
      for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
          a = d;
          break;
        }
      if (a != 0) base = product_of_cyclics_table(a, n / a);
      break;
    }
  }
  return relabel(base, random_permutation(n, rng));
}

}  // namespace testsupport
