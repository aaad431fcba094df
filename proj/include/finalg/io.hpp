#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "finalg/algebra.hpp"
#include "finalg/semigroup.hpp"

namespace finalg {

// 17 significant digits round-trip a double exactly; signed zero prints as 0
inline std::string format_real(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string format_coordinate(Complex z) {
  return format_real(z.real()) + " " + format_real(z.imag());
}

// "function <n>" | "matrix <d>" | "semigroup <table-path>"; a relative table
// path resolves against base_dir.
inline AlgebraPtr parse_algebra_spec(const std::string& spec,
                                     const std::filesystem::path& base_dir) {
  std::istringstream in(spec);
  std::string family;
  in >> family;
  if (family == "function" || family == "matrix") {
    long long size = -1;
    std::string junk;
    if (!(in >> size) || (in >> junk) || size < 1)
      throw ParseError("algebra spec '" + spec + "': expected a positive size");
    return family == "function" ? make_function_algebra(static_cast<std::size_t>(size))
                                : make_matrix_algebra(static_cast<std::size_t>(size));
  }
  if (family == "semigroup") {
    std::string path;
    std::string junk;
    if (!(in >> path) || (in >> junk))
      throw ParseError("algebra spec '" + spec + "': expected a table path");
    std::filesystem::path table(path);
    if (table.is_relative()) table = base_dir / table;
    return make_semigroup_algebra(load_cayley_table(table));
  }
  throw ParseError("algebra spec '" + spec + "': unknown family '" + family + "'");
}

namespace detail {

// one "re im" pair per significant line
inline Vector parse_coordinates(std::istream& in, std::size_t& lineno) {
  Vector coords;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = raw;
    if (!significant_line(s)) continue;
    std::istringstream cells(s);
    double re = 0.0, im = 0.0;
    std::string junk;
    if (!(cells >> re >> im) || (cells >> junk))
      throw ParseError("line " + std::to_string(lineno) + ": expected 're im'");
    coords.emplace_back(re, im);
  }
  return coords;
}

}  // namespace detail

// Element file: header "algebra <spec>", then one coordinate line per basis
// vector. The coordinate count must equal the declared algebra's dimension.
inline AlgebraElement load_element_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  try {
    std::string raw;
    std::size_t lineno = 0;
    std::string header;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string s = raw;
      if (detail::significant_line(s)) {
        header = s;
        break;
      }
    }
    std::istringstream head(header);
    std::string keyword;
    head >> keyword;
    if (keyword != "algebra")
      throw ParseError("line " + std::to_string(lineno) + ": expected an 'algebra ...' header");
    std::string spec;
    std::getline(head, spec);
    const AlgebraPtr alg = parse_algebra_spec(spec, path.parent_path());

    Vector coords = detail::parse_coordinates(in, lineno);
    if (coords.size() != alg->dim())
      throw ParseError("got " + std::to_string(coords.size()) + " coordinates for an algebra of dimension " +
                       std::to_string(alg->dim()));
    return AlgebraElement(alg, std::move(coords));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// Plain list of "re im" lines, no header; used by convolve operands.
inline Vector load_vector_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  try {
    std::size_t lineno = 0;
    return detail::parse_coordinates(in, lineno);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace finalg
