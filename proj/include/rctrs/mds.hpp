#pragma once

// MDS decisions for generator matrices and RCTRS specs.
//
// A k x N generator matrix is MDS iff every k columns are independent. For
// RCTRS codes with twist t = 1 the k x k minors factor into closed forms in
// the evaluation points, so the decision reduces to finitely many polynomial
// non-vanishing conditions. Each closed-form condition corresponds to one
// family of column subsets, and a failing condition reports that subset as
// its witness.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rctrs/codes.hpp"

namespace rctrs {

enum class MdsMethod { Minors, ClosedFormH0, ClosedFormHk1, ClosedFormGeneral, Both };

std::string_view to_string(MdsMethod m) noexcept;

struct MdsVerdict {
  bool is_mds = true;
  /// Column indices (ascending) of a vanishing k x k minor; set iff !is_mds.
  std::optional<std::vector<std::size_t>> witness;
  MdsMethod method = MdsMethod::Minors;
  /// For closed forms: which condition failed.
  std::string failed_condition;
};

/// "mds=true method=both" or "mds=false witness=[i1,...,ik]"
std::string render(const MdsVerdict& v);

/// Calls `visit(indices)` for each size-k subset of {0..n-1} in colexicographic
/// order; stops early when `visit` returns false.
template <typename Visit>
void for_each_subset_colex(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!visit(std::span<const std::size_t>(c))) return;
    std::size_t i = 0;
    while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : n)) ++i;
    if (i == k) return;
    ++c[i];
    for (std::size_t j = 0; j < i; ++j) c[j] = j;
  }
}

/// k x k submatrix on the given columns.
Matrix column_submatrix(const Matrix& g, std::span<const std::size_t> cols);

MdsVerdict mds_by_minors(const Matrix& g);
inline MdsVerdict mds_by_minors(const GeneratorMatrix& g) { return mds_by_minors(g.matrix); }

// Closed-form factors. `pts` are the evaluation points indexed by the subset.

/// prod (x - a) * (1 + (-1)^|A| eta x prod a)
Element phi(const Element& x, std::span<const Element> pts, const Element& eta);
/// prod (x - a) * (1 + (-1)^|L| eta x prod a * (x + sum a)); governs the minor
/// on L, the twist column and the extension column of an extended hook-0 code.
Element phi_extended(const Element& x, std::span<const Element> pts, const Element& eta);
/// prod (x - a) * (1 + eta x + eta sum a)
Element psi(const Element& x, std::span<const Element> pts, const Element& eta);
/// prod (x - a)
Element omega(const Element& x, std::span<const Element> pts);
/// prod (x - a) * (1 + (-1)^(k-1-h) eta sigma_{k-h}(pts, x))
Element phi_general(const Element& x, std::span<const Element> pts, const Element& eta, std::size_t h,
                    std::size_t k);

/// Hook 0, twist 1; plain or extended.
MdsVerdict mds_closed_form_h0(const CodeSpec& spec);
/// Hook k-1, twist 1; plain or extended.
MdsVerdict mds_closed_form_hk1(const CodeSpec& spec);
/// Any hook, twist 1, non-extended.
MdsVerdict mds_closed_form_general(const CodeSpec& spec);

enum class MdsCheck { Minors, Closed, Both };

struct MdsReport {
  MdsVerdict verdict;
  /// Both methods ran and disagreed.
  bool disagreement = false;
  std::optional<MdsVerdict> closed;
  std::optional<MdsVerdict> minors;
};

/// Picks the applicable closed form (h0, hk1, general); falls back to minors
/// when none applies (non-RCTRS, t > 1, extended general hook).
std::optional<MdsVerdict> mds_closed_form(const CodeSpec& spec);
MdsReport check_mds(const GeneratorMatrix& g, MdsCheck how);

// --- Minimum distance ------------------------------------------------------

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 24;

enum class DistanceMethod { Enumeration, SingletonMinors, BudgetExceeded };

struct DistanceResult {
  std::optional<std::size_t> d;
  DistanceMethod method = DistanceMethod::BudgetExceeded;
  /// Nonzero codewords visited by enumeration.
  std::uint64_t enumerated = 0;
};

std::string_view to_string(DistanceMethod m) noexcept;

/// Enumerates all q^k - 1 nonzero codewords when q^k <= budget; otherwise an
/// MDS matrix has d = N - k + 1; otherwise BudgetExceeded.
DistanceResult min_distance(const Matrix& g, const Field& f, std::uint64_t budget = kDefaultDistanceBudget);
inline DistanceResult min_distance(const GeneratorMatrix& g, std::uint64_t budget = kDefaultDistanceBudget) {
  return min_distance(g.matrix, g.spec.field, budget);
}

}  // namespace rctrs
