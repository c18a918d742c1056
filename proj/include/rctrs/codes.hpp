#pragma once

// Reed-Solomon family evaluation codes: GRS, TRS, CTRS and RCTRS, each with
// an optional extension column carrying the x^(k-1) coefficient.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rctrs/field.hpp"
#include "rctrs/linalg.hpp"

namespace rctrs {

enum class Family { GRS, TRS, CTRS, RCTRS };

std::string_view to_string(Family f) noexcept;
Family family_from_string(std::string_view s);

/// Little-endian coefficient list.
using Polynomial = std::vector<Element>;

/// Parameters of one code. `n` is the length before the optional extension
/// column: GRS/TRS evaluate at n points, CTRS/RCTRS at n-1 points plus the
/// column f(b) - lambda f(c).
struct CodeSpec {
  Family family = Family::RCTRS;
  Field field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t h = 0;
  std::size_t t = 1;
  std::vector<Element> alphas;
  std::vector<Element> v;  // GRS column multipliers; empty means all ones
  Element b, c, lambda, eta;
  bool extended = false;

  /// Total number of coordinates.
  std::size_t length() const noexcept { return n + (extended ? 1 : 0); }
  bool has_twist_column() const noexcept { return family == Family::CTRS || family == Family::RCTRS; }
  bool has_row_twist() const noexcept { return family == Family::TRS || family == Family::RCTRS; }

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// Throws InvalidSpec naming the first violated invariant.
void validate(const CodeSpec& spec);

/// Warnings that do not invalidate the spec (b among the points, b == c).
std::vector<std::string> spec_warnings(const CodeSpec& spec);

struct GeneratorMatrix {
  Matrix matrix;
  CodeSpec spec;

  Eigen::Index k() const noexcept { return matrix.rows(); }
  Eigen::Index length() const noexcept { return matrix.cols(); }
};

/// Basis 1, x, ..., x^h + eta x^(k-1+t), ..., x^(k-1) of the twisted polynomial space.
std::vector<Polynomial> twist_space_basis(std::size_t k, std::size_t t, std::size_t h, const Element& eta);

/// Basis of the polynomial space underlying `spec` (plain monomials for GRS/CTRS).
std::vector<Polynomial> code_basis(const CodeSpec& spec);

Element eval_poly(std::span<const Element> f, const Element& x);

/// Codeword of f: evaluations, twist column and extension coordinate as the
/// family prescribes.
RowVector evaluate_codeword(const CodeSpec& spec, std::span<const Element> f);

GeneratorMatrix generator_matrix(const CodeSpec& spec);

/// message * G
RowVector encode(const GeneratorMatrix& g, const RowVector& message);

// Convenience builders. All return validated specs.
CodeSpec make_grs(const Field& f, std::vector<Element> alphas, std::size_t k,
                  std::vector<Element> v = {}, bool extended = false);
CodeSpec make_trs(const Field& f, std::vector<Element> alphas, std::size_t k, std::size_t h,
                  std::size_t t, Element eta, bool extended = false);
CodeSpec make_ctrs(const Field& f, std::vector<Element> alphas, std::size_t k, Element b, Element c,
                   Element lambda, bool extended = false);
CodeSpec make_rctrs(const Field& f, std::vector<Element> alphas, std::size_t k, std::size_t h,
                    std::size_t t, Element b, Element c, Element lambda, Element eta,
                    bool extended = false);

}  // namespace rctrs
