#include "rctrs/codes.hpp"

#include <algorithm>

namespace rctrs {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::GRS: return "GRS";
    case Family::TRS: return "TRS";
    case Family::CTRS: return "CTRS";
    case Family::RCTRS: return "RCTRS";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  if (s == "GRS") return Family::GRS;
  if (s == "TRS") return Family::TRS;
  if (s == "CTRS") return Family::CTRS;
  if (s == "RCTRS") return Family::RCTRS;
  throw Error(Errc::ParseError, "unknown family '" + std::string(s) + "'");
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidSpec, what); }

void check_in_field(const CodeSpec& s, const Element& x, const char* name) {
  if (x.bound() && x.field() != s.field) invalid(std::string(name) + " lies outside the code's field");
}

Element bind(const Field& f, const Element& x) { return x + f.zero(); }

}  // namespace

void validate(const CodeSpec& s) {
  if (!s.field.valid()) invalid("no field");
  const std::uint64_t q = s.field.order();
  if (s.n < 1) invalid("n must be at least 1");
  if (s.k < 1) invalid("k must be at least 1");
  if (s.k > s.n) invalid("k exceeds n");
  const std::size_t points = s.has_twist_column() ? s.n - 1 : s.n;
  if (s.alphas.size() != points)
    invalid("expected " + std::to_string(points) + " evaluation points, got " +
            std::to_string(s.alphas.size()));
  if (s.has_twist_column() ? s.n > q + 1 : s.n > q) invalid("length exceeds the field bound");
  for (std::size_t i = 0; i < s.alphas.size(); ++i) {
    check_in_field(s, s.alphas[i], "alpha");
    for (std::size_t j = 0; j < i; ++j)
      if (s.alphas[i] == s.alphas[j]) invalid("duplicate evaluation point at positions " +
                                              std::to_string(j) + " and " + std::to_string(i));
  }
  if (s.has_row_twist()) {
    if (s.h >= s.k) invalid("hook h must satisfy h < k");
    if (s.t < 1) invalid("twist t must be at least 1");
  }
  if (s.family == Family::GRS) {
    if (!s.v.empty() && s.v.size() != s.n) invalid("v must have n entries");
    for (const auto& x : s.v) {
      check_in_field(s, x, "v");
      if (x.is_zero()) invalid("v entries must be nonzero");
    }
  } else if (!s.v.empty()) {
    invalid("column multipliers are only defined for GRS");
  }
  check_in_field(s, s.b, "b");
  check_in_field(s, s.c, "c");
  check_in_field(s, s.lambda, "lambda");
  check_in_field(s, s.eta, "eta");
}

std::vector<std::string> spec_warnings(const CodeSpec& s) {
  std::vector<std::string> w;
  if (!s.has_twist_column()) return w;
  if (std::find(s.alphas.begin(), s.alphas.end(), s.b) != s.alphas.end())
    w.emplace_back("b is one of the evaluation points");
  if (s.b == s.c) w.emplace_back("b equals c");
  return w;
}

std::vector<Polynomial> twist_space_basis(std::size_t k, std::size_t t, std::size_t h, const Element& eta) {
  if (h >= k) throw Error(Errc::HookOutOfRange, "hook h must satisfy h < k");
  if (t < 1) throw Error(Errc::InvalidArgument, "twist t must be at least 1");
  const Field f = eta.field();
  const Element zero = f.valid() ? f.zero() : Element(0);
  const Element one = f.valid() ? f.one() : Element(1);
  std::vector<Polynomial> basis;
  basis.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial p(i == h ? k + t : i + 1, zero);
    p[i] = one;
    if (i == h) p[k - 1 + t] = eta;
    basis.push_back(std::move(p));
  }
  return basis;
}

std::vector<Polynomial> code_basis(const CodeSpec& s) {
  const Element eta = s.has_row_twist() ? bind(s.field, s.eta) : s.field.zero();
  if (!s.has_row_twist()) {
    std::vector<Polynomial> basis;
    for (std::size_t i = 0; i < s.k; ++i) {
      Polynomial p(i + 1, s.field.zero());
      p[i] = s.field.one();
      basis.push_back(std::move(p));
    }
    return basis;
  }
  return twist_space_basis(s.k, s.t, s.h, eta);
}

Element eval_poly(std::span<const Element> f, const Element& x) {
  Element acc = x * Element(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

RowVector evaluate_codeword(const CodeSpec& s, std::span<const Element> f) {
  RowVector w(static_cast<Eigen::Index>(s.length()));
  Eigen::Index j = 0;
  for (std::size_t i = 0; i < s.alphas.size(); ++i) {
    Element y = eval_poly(f, s.alphas[i]);
    if (s.family == Family::GRS && !s.v.empty()) y *= s.v[i];
    w(j++) = bind(s.field, y);
  }
  if (s.has_twist_column())
    w(j++) = bind(s.field, eval_poly(f, bind(s.field, s.b)) -
                               bind(s.field, s.lambda) * eval_poly(f, bind(s.field, s.c)));
  if (s.extended) w(j++) = s.k - 1 < f.size() ? bind(s.field, f[s.k - 1]) : s.field.zero();
  return w;
}

GeneratorMatrix generator_matrix(const CodeSpec& spec) {
  validate(spec);
  const auto basis = code_basis(spec);
  GeneratorMatrix g{Matrix(static_cast<Eigen::Index>(spec.k), static_cast<Eigen::Index>(spec.length())),
                    spec};
  for (std::size_t i = 0; i < basis.size(); ++i)
    g.matrix.row(static_cast<Eigen::Index>(i)) = evaluate_codeword(spec, basis[i]);
  return g;
}

RowVector encode(const GeneratorMatrix& g, const RowVector& message) {
  if (message.size() != g.matrix.rows())
    throw Error(Errc::LengthMismatch, "message length " + std::to_string(message.size()) +
                                          " != k = " + std::to_string(g.matrix.rows()));
  RowVector out(g.matrix.cols());
  const Element zero = g.spec.field.zero();
  for (Eigen::Index j = 0; j < g.matrix.cols(); ++j) {
    Element acc = zero;
    for (Eigen::Index i = 0; i < g.matrix.rows(); ++i) acc += message(i) * g.matrix(i, j);
    out(j) = acc;
  }
  return out;
}

CodeSpec make_grs(const Field& f, std::vector<Element> alphas, std::size_t k, std::vector<Element> v,
                  bool extended) {
  CodeSpec s;
  s.family = Family::GRS;
  s.field = f;
  s.n = alphas.size();
  s.k = k;
  s.alphas = std::move(alphas);
  s.v = std::move(v);
  s.b = s.c = s.lambda = s.eta = f.zero();
  s.extended = extended;
  validate(s);
  return s;
}

CodeSpec make_trs(const Field& f, std::vector<Element> alphas, std::size_t k, std::size_t h, std::size_t t,
                  Element eta, bool extended) {
  CodeSpec s;
  s.family = Family::TRS;
  s.field = f;
  s.n = alphas.size();
  s.k = k;
  s.h = h;
  s.t = t;
  s.alphas = std::move(alphas);
  s.b = s.c = s.lambda = f.zero();
  s.eta = eta;
  s.extended = extended;
  validate(s);
  return s;
}

CodeSpec make_ctrs(const Field& f, std::vector<Element> alphas, std::size_t k, Element b, Element c,
                   Element lambda, bool extended) {
  CodeSpec s;
  s.family = Family::CTRS;
  s.field = f;
  s.n = alphas.size() + 1;
  s.k = k;
  s.alphas = std::move(alphas);
  s.b = b;
  s.c = c;
  s.lambda = lambda;
  s.eta = f.zero();
  s.extended = extended;
  validate(s);
  return s;
}

CodeSpec make_rctrs(const Field& f, std::vector<Element> alphas, std::size_t k, std::size_t h, std::size_t t,
                    Element b, Element c, Element lambda, Element eta, bool extended) {
  CodeSpec s;
  s.family = Family::RCTRS;
  s.field = f;
  s.n = alphas.size() + 1;
  s.k = k;
  s.h = h;
  s.t = t;
  s.alphas = std::move(alphas);
  s.b = b;
  s.c = c;
  s.lambda = lambda;
  s.eta = eta;
  s.extended = extended;
  validate(s);
  return s;
}

}  // namespace rctrs
