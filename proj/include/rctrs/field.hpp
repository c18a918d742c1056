#pragma once

// Exact arithmetic in GF(p^m).
//
// A field is described by its characteristic p and a monic irreducible
// modulus of degree m over GF(p). Elements are residue classes of
// GF(p)[x]/(modulus); each one is identified by its base-p index
//   index = c_0 + c_1 p + ... + c_{m-1} p^{m-1},
// so index 0 is zero and index 1 is one in every field.
//
// Field descriptors are interned: creating the same (p, modulus) twice yields
// the same handle, and elements compare their field by pointer.

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rctrs/error.hpp"

namespace rctrs {

class Element;
class Field;
struct SubfieldView;

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // c_0 .. c_m, c_m == 1
  std::vector<std::uint64_t> p_pow;    // p^0 .. p^m
  std::vector<std::uint64_t> qm1_primes;
  std::uint64_t primitive = 0;
  // Zech-free log/exp tables; exp has length 2(q-1). Empty for large q.
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;

  bool tabulated() const noexcept { return !exp.empty(); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    if (m == 1) {
      std::uint64_t s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < m && (a | b); ++i) {
      std::uint64_t s = a % p + b % p;
      if (s >= p) s -= p;
      r += s * p_pow[i];
      a /= p;
      b /= p;
    }
    return r;
  }

  std::uint64_t neg(std::uint64_t a) const noexcept {
    if (m == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < m && a; ++i) {
      std::uint64_t d = a % p;
      if (d) r += (p - d) * p_pow[i];
      a /= p;
    }
    return r;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return add(a, neg(b)); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tabulated()) return exp[log[a] + log[b]];
    return mul_slow(a, b);
  }

  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;
};

}  // namespace detail

/// Handle to an interned field descriptor. Cheap to copy.
class Field {
 public:
  Field() = default;

  /// Builds GF(p^m). `modulus` is little-endian (c_0 .. c_m) and must be monic
  /// of degree m; when omitted the smallest monic irreducible in index order
  /// is used.
  static Field create(std::uint64_t p, unsigned m,
                      std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  /// Parses "p", "p^m" or "p^m/c_m,...,c_0".
  static Field parse(std::string_view descriptor);

  /// "p^m/c_m,...,c_0"
  std::string descriptor() const;

  bool valid() const noexcept { return d_ != nullptr; }
  std::uint64_t characteristic() const noexcept { return d_->p; }
  unsigned degree() const noexcept { return d_->m; }
  std::uint64_t order() const noexcept { return d_->q; }
  std::span<const std::uint64_t> modulus() const noexcept { return d_->modulus; }

  Element zero() const;
  Element one() const;
  Element from_index(std::uint64_t index) const;
  /// Image of the integer n under Z -> GF(p) -> GF(p^m).
  Element from_int(std::int64_t n) const;
  /// Little-endian coefficients, each in [0, p); at most m of them.
  Element from_coeffs(std::span<const std::uint64_t> coeffs) const;

  /// First element in index order whose multiplicative order is q - 1.
  Element primitive_element() const;
  SubfieldView subfield(unsigned d) const;
  std::vector<Element> elements() const;

  const detail::FieldData* data() const noexcept { return d_; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  friend class Element;
  const detail::FieldData* d_ = nullptr;
};

/// A field element. The integer constructor produces an unbound literal
/// (used by Eigen for Scalar(0) / Scalar(1)); it takes on the field of the
/// first bound operand it meets.
class Element {
 public:
  Element() = default;
  template <std::same_as<int> Int>
  Element(Int literal) : v_(static_cast<std::uint64_t>(static_cast<std::int64_t>(literal))) {}  // NOLINT

  bool bound() const noexcept { return f_ != nullptr; }
  Field field() const noexcept { return Field(f_); }

  std::uint64_t index() const;
  std::vector<std::uint64_t> coeffs() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Element inv() const;
  Element pow(std::uint64_t e) const;
  /// x -> x^p
  Element frobenius() const;
  std::uint64_t multiplicative_order() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element& operator/=(const Element& o) { return *this = *this / o; }

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Element& x);

 private:
  Element(std::uint64_t v, const detail::FieldData* f) : v_(v), f_(f) {}
  std::int64_t literal() const noexcept { return static_cast<std::int64_t>(v_); }
  std::uint64_t index_in(const detail::FieldData* f) const;

  friend class Field;
  friend struct SubfieldView;

  std::uint64_t v_ = 0;
  const detail::FieldData* f_ = nullptr;
};

inline Element inverse(const Element& x) { return x.inv(); }

/// Elements of GF(p^d) inside GF(p^m), identified as fixed points of x -> x^(p^d).
struct SubfieldView {
  Field ambient;
  unsigned degree = 0;
  std::uint64_t order = 0;
  /// g^((p^m-1)/(p^d-1)) for the ambient primitive element g.
  Element primitive;

  bool contains(const Element& x) const;
  /// True for nonzero members.
  bool contains_nonzero(const Element& x) const { return !x.is_zero() && contains(x); }
  /// 0 followed by successive powers of `primitive`.
  std::vector<Element> elements() const;
};

/// Order-n subgroup of a subfield's multiplicative group, listed as 1, s, s^2, ...
struct MultiplicativeSubgroup {
  std::vector<Element> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const Element& x) const;
};

MultiplicativeSubgroup subgroup_of_order(const SubfieldView& view, std::uint64_t n);

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// ---------------------------------------------------------------------------

inline std::uint64_t Element::index_in(const detail::FieldData* f) const {
  if (f_) return v_;
  std::int64_t r = literal() % static_cast<std::int64_t>(f->p);
  if (r < 0) r += static_cast<std::int64_t>(f->p);
  return static_cast<std::uint64_t>(r);
}

namespace detail {
[[noreturn]] void throw_field_mismatch();
inline const FieldData* common_field(const FieldData* a, const FieldData* b) {
  if (a == b || !b) return a;
  if (!a) return b;
  throw_field_mismatch();
}
}  // namespace detail

inline Element operator+(const Element& a, const Element& b) {
  const auto* f = detail::common_field(a.f_, b.f_);
  if (!f) return Element(static_cast<int>(a.literal() + b.literal()));
  return Element(f->add(a.index_in(f), b.index_in(f)), f);
}

inline Element operator-(const Element& a, const Element& b) {
  const auto* f = detail::common_field(a.f_, b.f_);
  if (!f) return Element(static_cast<int>(a.literal() - b.literal()));
  return Element(f->sub(a.index_in(f), b.index_in(f)), f);
}

inline Element operator*(const Element& a, const Element& b) {
  const auto* f = detail::common_field(a.f_, b.f_);
  if (!f) return Element(static_cast<int>(a.literal() * b.literal()));
  return Element(f->mul(a.index_in(f), b.index_in(f)), f);
}

inline Element operator-(const Element& a) {
  if (!a.f_) return Element(static_cast<int>(-a.literal()));
  return Element(a.f_->neg(a.v_), a.f_);
}

inline bool operator==(const Element& a, const Element& b) {
  const auto* f = detail::common_field(a.f_, b.f_);
  if (!f) return a.v_ == b.v_;
  return a.index_in(f) == b.index_in(f);
}

inline bool Element::is_zero() const noexcept { return f_ ? v_ == 0 : literal() == 0; }
inline bool Element::is_one() const noexcept {
  if (f_) return v_ == 1;
  return literal() == 1;
}

}  // namespace rctrs

namespace Eigen {

template <>
struct NumTraits<rctrs::Element> : GenericNumTraits<rctrs::Element> {
  using Real = rctrs::Element;
  using NonInteger = rctrs::Element;
  using Literal = rctrs::Element;
  using Nested = rctrs::Element;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
