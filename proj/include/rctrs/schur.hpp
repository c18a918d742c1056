#pragma once

// Schur (componentwise) products, Schur-square dimension and the
// distinguishers built on it.

#include <string>
#include <vector>

#include "rctrs/codes.hpp"
#include "rctrs/mds.hpp"

namespace rctrs {

/// Three-valued answer; Undetermined when a precondition is not met.
enum class Tristate { False, True, Undetermined };

std::string_view to_string(Tristate t) noexcept;

/// Column j of the image is scale[j] times column perm[j] of the source.
struct Isometry {
  std::vector<std::size_t> perm;
  std::vector<Element> scale;

  static Isometry identity(const Field& f, std::size_t n);
};

struct SchurReport {
  Eigen::Index dim = 0;
  Tristate non_rs = Tristate::Undetermined;
  Tristate ctrs_incompatible = Tristate::Undetermined;
};

/// "schur_dim=D non_rs=... ctrs_incompatible=..."
std::string render(const SchurReport& r);

RowVector schur_vec(const RowVector& x, const RowVector& y);

/// Rows g_i * g_j for i <= j, in row-major pair order.
Matrix schur_square(const Matrix& g);

Eigen::Index schur_square_dim(const Matrix& g);
inline Eigen::Index schur_square_dim(const GeneratorMatrix& g) { return schur_square_dim(g.matrix); }

/// dim != 2k-1; needs 2k <= N and an MDS verdict.
Tristate is_non_rs(const Matrix& g, const MdsVerdict& mds);
/// dim == 2k+1; needs 2k <= N-1 and an MDS verdict.
Tristate ctrs_distinguisher(const Matrix& g, const MdsVerdict& mds);

SchurReport schur_report(const Matrix& g, const MdsVerdict& mds);

Matrix apply_isometry(const Matrix& g, const Isometry& iso);
GeneratorMatrix apply_isometry(const GeneratorMatrix& g, const Isometry& iso);

}  // namespace rctrs
