#include "rctrs/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace rctrs {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::Reducible: return "Reducible";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::UnboundElement: return "UnboundElement";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotSquare: return "NotSquare";
    case Errc::HookOutOfRange: return "HookOutOfRange";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::WrongHookTwist: return "WrongHookTwist";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::DegenerateBC: return "DegenerateBC";
    case Errc::MembershipViolation: return "MembershipViolation";
    case Errc::UnsupportedExtendedGeneralH: return "UnsupportedExtendedGeneralH";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

using Poly = std::vector<std::uint64_t>;  // little-endian over GF(p)

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        std::uint64_t t = mulmod(lead, g[i], p);
        std::uint64_t& c = f[shift + i];
        c = c >= t ? c - t : c + p - t;
      }
    }
    f.pop_back();
    trim(f);
  }
  return f;
}

bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return true;
  // Trial division by every monic polynomial of degree 1 .. m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t j = 0; j < count; ++j) {
      std::uint64_t r = j;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = r % p;
        r /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint64_t, Poly>, std::unique_ptr<detail::FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

void build_tables(detail::FieldData& d) {
  d.qm1_primes = prime_factors(d.q - 1);
  auto is_generator = [&](std::uint64_t g) {
    for (std::uint64_t r : d.qm1_primes)
      if (d.pow(g, (d.q - 1) / r) == 1) return false;
    return true;
  };
  for (std::uint64_t g = 1; g < d.q; ++g) {
    if (is_generator(g)) {
      d.primitive = g;
      break;
    }
  }
  if (d.q > kTableLimit) return;
  const std::uint64_t n = d.q - 1;
  std::vector<std::uint32_t> exp(2 * n);
  std::vector<std::uint32_t> log(d.q, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp[i] = static_cast<std::uint32_t>(x);
    exp[i + n] = static_cast<std::uint32_t>(x);
    log[x] = static_cast<std::uint32_t>(i);
    x = d.mul_slow(x, d.primitive);
  }
  d.exp = std::move(exp);
  d.log = std::move(log);
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace detail {

void throw_field_mismatch() { throw Error(Errc::FieldMismatch, "operands belong to different fields"); }

std::uint64_t FieldData::mul_slow(std::uint64_t a, std::uint64_t b) const {
  if (m == 1) return mulmod(a, b, p);
  Poly fa(m), fb(m);
  for (unsigned i = 0; i < m; ++i) {
    fa[i] = a % p;
    a /= p;
    fb[i] = b % p;
    b /= p;
  }
  Poly prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      prod[i + j] = (prod[i + j] + mulmod(fa[i], fb[j], p)) % p;
  Poly r = poly_mod(std::move(prod), modulus, p);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i) idx += r[i] * p_pow[i];
  return idx;
}

std::uint64_t FieldData::pow(std::uint64_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (tabulated()) {
    const std::uint64_t n = q - 1;
    const auto l = static_cast<std::uint64_t>(static_cast<unsigned __int128>(log[a]) * (e % n) % n);
    return exp[l];
  }
  if (m == 1) return powmod(a, e, p);
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FieldData::inv(std::uint64_t a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (tabulated()) return exp[(q - 1) - log[a]];
  return pow(a, q - 2);
}

}  // namespace detail

Field Field::create(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 32))
    throw Error(Errc::NotPrime, std::to_string(p) + " is not a supported prime");
  if (m < 1) throw Error(Errc::DegreeMismatch, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > (std::uint64_t{1} << 62) / p)
      throw Error(Errc::InvalidArgument, "field order exceeds 2^62");
    q *= p;
  }

  Poly f;
  if (modulus) {
    f = *modulus;
    if (f.size() != m + 1 || f.back() != 1)
      throw Error(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(m));
    for (auto c : f)
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    if (!irreducible(f, p)) throw Error(Errc::Reducible, "supplied modulus factors over GF(p)");
  } else {
    f.assign(m + 1, 0);
    f[m] = 1;
    for (std::uint64_t j = 0;; ++j) {
      std::uint64_t r = j;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = r % p;
        r /= p;
      }
      if (irreducible(f, p)) break;
    }
  }

  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = std::make_pair(p, f);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return Field(it->second.get());

  auto d = std::make_unique<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->q = q;
  d->modulus = f;
  d->p_pow.resize(m + 1);
  d->p_pow[0] = 1;
  for (unsigned i = 1; i <= m; ++i) d->p_pow[i] = d->p_pow[i - 1] * p;
  build_tables(*d);
  const detail::FieldData* raw = d.get();
  reg.fields.emplace(std::move(key), std::move(d));
  return Field(raw);
}

Field Field::parse(std::string_view s) {
  std::string_view head = s;
  std::optional<Poly> modulus;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    head = s.substr(0, slash);
    Poly big_endian;
    std::string_view rest = s.substr(slash + 1);
    while (true) {
      auto comma = rest.find(',');
      big_endian.push_back(parse_u64(rest.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    modulus = Poly(big_endian.rbegin(), big_endian.rend());
  }
  std::uint64_t p = 0;
  unsigned m = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_u64(head.substr(0, caret), "characteristic");
    m = static_cast<unsigned>(parse_u64(head.substr(caret + 1), "degree"));
  } else {
    p = parse_u64(head, "characteristic");
  }
  return create(p, m, std::move(modulus));
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << d_->p << '^' << d_->m << '/';
  for (std::size_t i = d_->modulus.size(); i-- > 0;) {
    os << d_->modulus[i];
    if (i) os << ',';
  }
  return os.str();
}

Element Field::zero() const { return Element(std::uint64_t{0}, d_); }
Element Field::one() const { return Element(std::uint64_t{1}, d_); }

Element Field::from_index(std::uint64_t index) const {
  if (index >= d_->q)
    throw Error(Errc::IndexOutOfRange, std::to_string(index) + " not below " + std::to_string(d_->q));
  return Element(index, d_);
}

Element Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(d_->p);
  if (r < 0) r += static_cast<std::int64_t>(d_->p);
  return Element(static_cast<std::uint64_t>(r), d_);
}

Element Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > d_->m) throw Error(Errc::LengthMismatch, "too many coefficients");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= d_->p) throw Error(Errc::InvalidArgument, "coefficient out of range");
    idx += coeffs[i] * d_->p_pow[i];
  }
  return Element(idx, d_);
}

Element Field::primitive_element() const { return Element(d_->primitive, d_); }

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(d_->q);
  for (std::uint64_t i = 0; i < d_->q; ++i) out.push_back(Element(i, d_));
  return out;
}

SubfieldView Field::subfield(unsigned d) const {
  if (d == 0 || d_->m % d != 0)
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(d_->m));
  SubfieldView v;
  v.ambient = *this;
  v.degree = d;
  v.order = d_->p_pow[d];
  v.primitive = primitive_element().pow((d_->q - 1) / (v.order - 1));
  return v;
}

std::uint64_t Element::index() const {
  if (f_) return v_;
  if (literal() == 0 || literal() == 1) return v_;
  throw Error(Errc::UnboundElement, "integer literal has no field");
}

std::vector<std::uint64_t> Element::coeffs() const {
  if (!f_) throw Error(Errc::UnboundElement, "integer literal has no field");
  std::vector<std::uint64_t> c(f_->m);
  std::uint64_t v = v_;
  for (unsigned i = 0; i < f_->m; ++i) {
    c[i] = v % f_->p;
    v /= f_->p;
  }
  return c;
}

Element Element::inv() const {
  if (!f_) {
    if (literal() == 1 || literal() == -1) return *this;
    if (literal() == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    throw Error(Errc::UnboundElement, "integer literal has no field");
  }
  return Element(f_->inv(v_), f_);
}

Element Element::pow(std::uint64_t e) const {
  if (!f_) {
    if (literal() == 0) return e == 0 ? Element(1) : Element(0);
    if (literal() == 1) return *this;
    throw Error(Errc::UnboundElement, "integer literal has no field");
  }
  return Element(f_->pow(v_, e), f_);
}

Element Element::frobenius() const {
  if (!f_) return *this;
  return pow(f_->p);
}

std::uint64_t Element::multiplicative_order() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "zero has no multiplicative order");
  if (!f_) {
    if (literal() == 1) return 1;
    throw Error(Errc::UnboundElement, "integer literal has no field");
  }
  std::uint64_t ord = f_->q - 1;
  for (std::uint64_t r : f_->qm1_primes) {
    while (ord % r == 0 && f_->pow(v_, ord / r) == 1) ord /= r;
  }
  return ord;
}

Element operator/(const Element& a, const Element& b) { return a * b.inv(); }

std::ostream& operator<<(std::ostream& os, const Element& x) {
  if (x.f_) return os << x.v_;
  return os << x.literal();
}

bool SubfieldView::contains(const Element& x) const {
  if (!x.bound()) return x.is_zero() || x.is_one();
  if (x.field() != ambient) throw Error(Errc::FieldMismatch, "element outside the ambient field");
  return x.pow(order) == x;
}

std::vector<Element> SubfieldView::elements() const {
  std::vector<Element> out;
  out.reserve(order);
  out.push_back(ambient.zero());
  Element x = ambient.one();
  for (std::uint64_t i = 0; i + 1 < order; ++i) {
    out.push_back(x);
    x *= primitive;
  }
  return out;
}

bool MultiplicativeSubgroup::contains(const Element& x) const {
  return std::find(elements.begin(), elements.end(), x) != elements.end();
}

MultiplicativeSubgroup subgroup_of_order(const SubfieldView& view, std::uint64_t n) {
  if (n == 0 || (view.order - 1) % n != 0)
    throw Error(Errc::OrderDoesNotDivide,
                std::to_string(n) + " does not divide " + std::to_string(view.order - 1));
  const Element s = view.primitive.pow((view.order - 1) / n);
  MultiplicativeSubgroup g;
  g.elements.reserve(n);
  Element x = view.ambient.one();
  for (std::uint64_t i = 0; i < n; ++i) {
    g.elements.push_back(x);
    x *= s;
  }
  return g;
}

}  // namespace rctrs
