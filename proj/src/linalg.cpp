#include "rctrs/linalg.hpp"

#include <sstream>
#include <string>

namespace rctrs {

Element sigma_r(std::span<const Element> vals, std::size_t r) {
  // e[j] holds sigma_j of the prefix processed so far.
  std::vector<Element> e(r + 1, Element(0));
  e[0] = Element(1);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const std::size_t top = std::min(r, i + 1);
    for (std::size_t j = top; j >= 1; --j) e[j] += vals[i] * e[j - 1];
  }
  if (!vals.empty()) return e[r] + vals[0].field().zero();
  return e[r];
}

Matrix vandermonde_matrix(std::span<const Element> alphas, std::size_t rows) {
  Matrix v(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(alphas.size()));
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    Element x = alphas[j].field().one();
    for (std::size_t i = 0; i < rows; ++i) {
      v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x;
      x *= alphas[j];
    }
  }
  return v;
}

Element vandermonde_det(std::span<const Element> alphas) {
  Element d(1);
  for (std::size_t j = 0; j < alphas.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) d *= alphas[j] - alphas[i];
  return d;
}

Matrix deleted_row_vandermonde_matrix(std::span<const Element> alphas, std::size_t h) {
  const std::size_t n = alphas.size();
  if (h < 1 || h + 1 > n)
    throw Error(Errc::HookOutOfRange, "deleted row " + std::to_string(h) + " outside [1, n-1]");
  Matrix full = vandermonde_matrix(alphas, n + 1);
  Matrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i <= static_cast<Eigen::Index>(n); ++i)
    if (i != static_cast<Eigen::Index>(h)) out.row(r++) = full.row(i);
  return out;
}

Element deleted_row_vandermonde_det(std::span<const Element> alphas, std::size_t h) {
  const std::size_t n = alphas.size();
  if (h < 1 || h + 1 > n)
    throw Error(Errc::HookOutOfRange, "deleted row " + std::to_string(h) + " outside [1, n-1]");
  return sigma_r(alphas, n - h) * vandermonde_det(alphas);
}

void write_matrix(std::ostream& os, const Matrix& m, const Field& field) {
  os << field.characteristic() << ' ' << field.degree() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).index();
    }
    os << '\n';
  }
}

namespace {

struct Header {
  std::uint64_t p = 0;
  unsigned m = 0;
  Eigen::Index rows = 0, cols = 0;
};

Header read_header(std::istream& is) {
  Header h;
  std::string line;
  if (!std::getline(is, line)) throw Error(Errc::ParseError, "line 1: missing matrix header");
  std::istringstream ls(line);
  if (!(ls >> h.p >> h.m >> h.rows >> h.cols) || h.rows < 0 || h.cols < 0)
    throw Error(Errc::ParseError, "line 1: expected 'p m rows cols'");
  return h;
}

Matrix read_body(std::istream& is, const Header& h, const Field& field) {
  Matrix m(h.rows, h.cols);
  std::string line;
  for (Eigen::Index i = 0; i < h.rows; ++i) {
    if (!std::getline(is, line))
      throw Error(Errc::ParseError, "line " + std::to_string(i + 2) + ": missing row");
    std::istringstream ls(line);
    for (Eigen::Index j = 0; j < h.cols; ++j) {
      std::uint64_t idx = 0;
      if (!(ls >> idx))
        throw Error(Errc::ParseError, "line " + std::to_string(i + 2) + ": expected " +
                                          std::to_string(h.cols) + " entries");
      m(i, j) = field.from_index(idx);
    }
  }
  return m;
}

}  // namespace

Matrix read_matrix(std::istream& is, const Field& field) {
  Header h = read_header(is);
  if (h.p != field.characteristic() || h.m != field.degree())
    throw Error(Errc::FieldMismatch, "matrix header does not match the field");
  return read_body(is, h, field);
}

std::pair<Field, Matrix> read_matrix(std::istream& is) {
  Header h = read_header(is);
  Field f = Field::create(h.p, h.m);
  return {f, read_body(is, h, f)};
}

}  // namespace rctrs
