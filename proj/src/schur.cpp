#include "rctrs/schur.hpp"

#include <algorithm>
#include <sstream>

namespace rctrs {

std::string_view to_string(Tristate t) noexcept {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Undetermined: return "undetermined";
  }
  return "?";
}

Isometry Isometry::identity(const Field& f, std::size_t n) {
  Isometry iso;
  iso.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) iso.perm[i] = i;
  iso.scale.assign(n, f.one());
  return iso;
}

std::string render(const SchurReport& r) {
  std::ostringstream os;
  os << "schur_dim=" << r.dim << " non_rs=" << to_string(r.non_rs)
     << " ctrs_incompatible=" << to_string(r.ctrs_incompatible);
  return os.str();
}

RowVector schur_vec(const RowVector& x, const RowVector& y) {
  if (x.size() != y.size())
    throw Error(Errc::LengthMismatch,
                "schur product of lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  RowVector out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) out(j) = x(j) * y(j);
  return out;
}

Matrix schur_square(const Matrix& g) {
  const Eigen::Index k = g.rows();
  Matrix out(k * (k + 1) / 2, g.cols());
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) out.row(r++) = schur_vec(g.row(i), g.row(j));
  return out;
}

Eigen::Index schur_square_dim(const Matrix& g) { return rank(schur_square(g)); }

Tristate is_non_rs(const Matrix& g, const MdsVerdict& mds) {
  const Eigen::Index k = g.rows();
  if (2 * k > g.cols() || !mds.is_mds) return Tristate::Undetermined;
  return schur_square_dim(g) != 2 * k - 1 ? Tristate::True : Tristate::False;
}

Tristate ctrs_distinguisher(const Matrix& g, const MdsVerdict& mds) {
  const Eigen::Index k = g.rows();
  if (2 * k > g.cols() - 1 || !mds.is_mds) return Tristate::Undetermined;
  return schur_square_dim(g) == 2 * k + 1 ? Tristate::True : Tristate::False;
}

SchurReport schur_report(const Matrix& g, const MdsVerdict& mds) {
  SchurReport r;
  r.dim = schur_square_dim(g);
  const Eigen::Index k = g.rows();
  if (mds.is_mds && 2 * k <= g.cols())
    r.non_rs = r.dim != 2 * k - 1 ? Tristate::True : Tristate::False;
  if (mds.is_mds && 2 * k <= g.cols() - 1)
    r.ctrs_incompatible = r.dim == 2 * k + 1 ? Tristate::True : Tristate::False;
  return r;
}

Matrix apply_isometry(const Matrix& g, const Isometry& iso) {
  const auto n = static_cast<std::size_t>(g.cols());
  if (iso.perm.size() != n || iso.scale.size() != n)
    throw Error(Errc::SizeMismatch, "isometry of size " + std::to_string(iso.perm.size()) +
                                        " applied to length " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (iso.perm[j] >= n || seen[iso.perm[j]]) throw Error(Errc::InvalidArgument, "perm is not a bijection");
    seen[iso.perm[j]] = true;
    if (iso.scale[j].is_zero()) throw Error(Errc::InvalidArgument, "isometry scale entries must be nonzero");
  }
  Matrix out(g.rows(), g.cols());
  for (std::size_t j = 0; j < n; ++j) {
    const auto dst = static_cast<Eigen::Index>(j);
    const auto src = static_cast<Eigen::Index>(iso.perm[j]);
    for (Eigen::Index i = 0; i < g.rows(); ++i) out(i, dst) = iso.scale[j] * g(i, src);
  }
  return out;
}

GeneratorMatrix apply_isometry(const GeneratorMatrix& g, const Isometry& iso) {
  return {apply_isometry(g.matrix, iso), g.spec};
}

}  // namespace rctrs
