#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rctrs/field.hpp"

using namespace rctrs;

TEST_CASE("field creation") {
  const Field f7 = Field::create(7, 1);
  CHECK(f7.order() == 7);
  CHECK(f7.degree() == 1);
  CHECK(Field::create(23, 2).order() == 529);
  CHECK(Field::create(7, 4).order() == 2401);
  CHECK(Field::create(7, 4) == Field::create(7, 4));
  CHECK(Field::parse("7^4") == Field::create(7, 4));
  CHECK(Field::parse(Field::create(7, 4).descriptor()) == Field::create(7, 4));
  CHECK(Field::parse("13") == Field::create(13, 1));
}

TEST_CASE("field creation errors") {
  CHECK_THROWS_AS(Field::create(6, 1), Error);
  try {
    Field::create(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
  // x^2 + 1 = (x+1)^2 over GF(2)
  try {
    Field::create(2, 2, std::vector<std::uint64_t>{1, 0, 1});
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Reducible);
  }
  try {
    Field::create(3, 2, std::vector<std::uint64_t>{1, 1});
    FAIL("wrong degree accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeMismatch);
  }
}

TEST_CASE("custom modulus is honoured") {
  // x^2 + 1 is irreducible over GF(3)
  const Field f = Field::create(3, 2, std::vector<std::uint64_t>{1, 0, 1});
  const Element x = f.from_index(3);
  CHECK(x * x == -f.one());
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::create(7, 1);
  CHECK(f.from_int(3) + f.from_int(5) == f.from_int(1));
  CHECK(f.from_int(3).inv() == f.from_int(5));
  CHECK(f.from_int(3) - f.from_int(5) == f.from_int(5));
  CHECK(-f.from_int(2) == f.from_int(5));
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.from_int(6) / f.from_int(3) == f.from_int(2));
  CHECK_THROWS_AS(f.zero().inv(), Error);
}

TEST_CASE("field mismatch is rejected") {
  const Field a = Field::create(7, 1), b = Field::create(5, 1);
  try {
    (void)(a.one() + b.one());
    FAIL("mixed fields accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
}

TEST_CASE("unbound literals adopt the other operand's field") {
  const Field f = Field::create(5, 2);
  const Element x = f.from_index(7);
  CHECK(x + Element(0) == x);
  CHECK(x * Element(1) == x);
  CHECK(Element(1) - Element(1) == Element(0));
  CHECK((x * Element(0)).is_zero());
}

TEST_CASE("Lagrange: a^(q-1) = 1") {
  for (const Field f : {Field::create(2, 1), Field::create(2, 4), Field::create(3, 3), Field::create(13, 1),
                        Field::create(7, 2)}) {
    for (std::uint64_t i = 1; i < f.order(); ++i) CHECK(f.from_index(i).pow(f.order() - 1).is_one());
  }
}

TEST_CASE("field axioms in GF(3^3) exhaustively") {
  const Field f = Field::create(3, 3);
  const auto all = f.elements();
  for (const auto& a : all) {
    CHECK(a + (-a) == f.zero());
    if (!a.is_zero()) CHECK(a * a.inv() == f.one());
    for (const auto& b : all) {
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
    }
  }
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 0; j < all.size(); j += 3)
      for (std::size_t l = 0; l < all.size(); l += 7)
        CHECK(all[i] * (all[j] + all[l]) == all[i] * all[j] + all[i] * all[l]);
}

TEST_CASE("table and slow multiplication agree") {
  const Field f = Field::create(7, 2);
  const auto* d = f.data();
  REQUIRE(d->tabulated());
  for (std::uint64_t a = 0; a < f.order(); a += 3)
    for (std::uint64_t b = 0; b < f.order(); b += 5) CHECK(d->mul(a, b) == d->mul_slow(a, b));
}

TEST_CASE("primitive elements") {
  CHECK(Field::create(7, 1).primitive_element().index() == 3);
  CHECK(Field::create(2, 1).primitive_element().index() == 1);
  const Element g17 = Field::create(17, 1).primitive_element();
  CHECK(oracle::brute_order(g17) == 16);
  CHECK(!g17.pow(8).is_one());
  for (const Field f : {Field::create(23, 2), Field::create(7, 4), Field::create(2, 8)})
    CHECK(oracle::brute_order(f.primitive_element()) == f.order() - 1);
}

TEST_CASE("multiplicative order matches brute force") {
  const Field f = Field::create(5, 2);
  for (std::uint64_t i = 1; i < f.order(); ++i)
    CHECK(f.from_index(i).multiplicative_order() == oracle::brute_order(f.from_index(i)));
}

TEST_CASE("subfield views") {
  const Field f = Field::create(7, 4);
  const SubfieldView v2 = f.subfield(2);
  CHECK(v2.order == 49);
  std::size_t members = 0;
  for (const auto& x : f.elements()) members += x.pow(49) == x;
  CHECK(members == 49);
  std::size_t flagged = 0;
  for (const auto& x : f.elements()) flagged += v2.contains(x);
  CHECK(flagged == 49);
  CHECK(oracle::brute_order(v2.primitive) == 48);
  CHECK(f.subfield(4).order == 2401);
  CHECK(Field::create(23, 2).subfield(1).order == 23);
  CHECK_THROWS_AS(f.subfield(3), Error);
  const auto elems = v2.elements();
  CHECK(elems.size() == 49);
  std::set<std::uint64_t> distinct;
  for (const auto& x : elems) {
    CHECK(v2.contains(x));
    distinct.insert(x.index());
  }
  CHECK(distinct.size() == 49);
}

TEST_CASE("prime subfield of GF(p^2) is the low indices") {
  const Field f = Field::create(23, 2);
  const SubfieldView v = f.subfield(1);
  for (std::uint64_t i = 0; i < f.order(); ++i) CHECK(v.contains(f.from_index(i)) == (i < 23));
}

namespace {
std::set<std::uint64_t> indices(const MultiplicativeSubgroup& g) {
  std::set<std::uint64_t> s;
  for (const auto& x : g.elements) s.insert(x.index());
  return s;
}
}  // namespace

TEST_CASE("subgroups of the prime subfield") {
  CHECK(indices(subgroup_of_order(Field::create(23, 2).subfield(1), 11)) ==
        std::set<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18});
  CHECK(indices(subgroup_of_order(Field::create(17, 1).subfield(1), 8)) ==
        std::set<std::uint64_t>{1, 2, 4, 8, 9, 13, 15, 16});
  CHECK(indices(subgroup_of_order(Field::create(29, 2).subfield(1), 1)) == std::set<std::uint64_t>{1});
  const auto g = subgroup_of_order(Field::create(17, 1).subfield(1), 8);
  CHECK(g.elements.front().is_one());
  CHECK(g.contains(Field::create(17, 1).from_index(9)));
  CHECK(!g.contains(Field::create(17, 1).from_index(3)));
  try {
    subgroup_of_order(Field::create(17, 1).subfield(1), 5);
    FAIL("non-divisor accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderDoesNotDivide);
  }
}

TEST_CASE("index round trip") {
  const Field f = Field::create(7, 2);
  const std::uint64_t c[] = {3, 2};
  CHECK(f.from_coeffs(c).index() == 17);
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const Element x = f.from_index(i);
    CHECK(x.index() == i);
    CHECK(f.from_coeffs(x.coeffs()) == x);
  }
  try {
    f.from_index(49);
    FAIL("index out of range accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOutOfRange);
  }
}

TEST_CASE("frobenius is additive and fixes the prime field") {
  const Field f = Field::create(3, 4);
  for (std::uint64_t i = 0; i < f.order(); i += 7) {
    const Element a = f.from_index(i), b = f.from_index((i * 13 + 5) % f.order());
    CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    CHECK(a.frobenius() == a.pow(3));
  }
  for (std::uint64_t i = 0; i < 3; ++i) CHECK(f.from_index(i).frobenius() == f.from_index(i));
}

TEST_CASE("large untabulated field") {
  const Field f = Field::create(1031, 2);
  CHECK(!f.data()->tabulated());
  const Element g = f.primitive_element();
  CHECK(g.pow(f.order() - 1).is_one());
  const Element x = f.from_index(123456);
  CHECK(x * x.inv() == f.one());
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(29));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  CHECK(prime_factors(28) == std::vector<std::uint64_t>{2, 7});
  CHECK(prime_factors(22) == std::vector<std::uint64_t>{2, 11});
}
