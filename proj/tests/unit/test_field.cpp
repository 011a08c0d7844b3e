#include <doctest.h>

#include <numeric>

#include "cdiff/errors.hpp"
#include "cdiff/field.hpp"
#include "naive.hpp"

using namespace cdiff;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {3, 1}, {5, 1}, {7, 1}, {11, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {11, 2}};

}  // namespace

TEST_CASE("make_field picks the canonical modulus") {
  const Field f5 = make_field(5, 1);
  CHECK(f5.spec().modulus == std::vector<std::uint32_t>{0, 1});
  CHECK(f5.q() == 5);

  const Field f9 = make_field(3, 2);
  CHECK(f9.spec().modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f9.q() == 9);

  for (const auto& [p, n] : kSmallFields) {
    if (n == 1) continue;
    CAPTURE(p);
    CAPTURE(n);
    CHECK(make_field(p, n).spec().modulus == naive::make(p, n).modulus);
  }
  CHECK(make_field(3, 2).spec() == make_field(3, 2).spec());
}

TEST_CASE("make_field rejects bad parameters") {
  CHECK_THROWS_AS((void)make_field(2, 1), InvalidInput);
  CHECK_THROWS_AS((void)make_field(9, 1), InvalidInput);
  CHECK_THROWS_AS((void)make_field(1, 1), InvalidInput);
  CHECK_THROWS_AS((void)make_field(3, 0), InvalidInput);
  CHECK_THROWS_WITH_AS((void)make_field(7, 6, 1000), doctest::Contains("enumeration limit"), InvalidInput);
  CHECK_NOTHROW((void)make_field(7, 3, 343));
}

TEST_CASE("basic arithmetic examples") {
  const Field f5 = make_field(5, 1);
  CHECK(f5.inv(Element{2}) == Element{3});
  CHECK_THROWS_AS((void)f5.inv(Element{0}), DivisionByZero);

  const Field f9 = make_field(3, 2);
  const std::int64_t one_plus_i[] = {1, 1};
  const std::int64_t two_i[] = {0, 2};
  const Element a = f9.from_coeffs(one_plus_i);
  CHECK(f9.mul(a, a) == f9.from_coeffs(two_i));
  CHECK_THROWS_AS((void)f9.element(9), InvalidInput);
  CHECK(f9.coeffs(Element{7}) == std::vector<std::uint32_t>{1, 2});
}

TEST_CASE("enumerate lists every element in index order") {
  const Field f3 = make_field(3, 1);
  const auto e3 = f3.enumerate();
  REQUIRE(e3.size() == 3);
  CHECK(e3[0] == Element{0});
  CHECK(e3[2] == Element{2});
  const Field f9 = make_field(3, 2);
  const auto e9 = f9.enumerate();
  REQUIRE(e9.size() == 9);
  for (std::uint32_t k = 0; k < 9; ++k) CHECK(f9.coeffs(e9[k]) == std::vector<std::uint32_t>{k % 3, k / 3});
}

TEST_CASE("eta examples") {
  const Field f5 = make_field(5, 1);
  CHECK(f5.eta(Element{4}) == 1);
  CHECK(f5.eta(Element{2}) == -1);
  CHECK(f5.eta(Element{0}) == 0);
  const Field f7 = make_field(7, 1);
  CHECK(f7.eta(f7.neg(Field::one())) == -1);
  const Field f9 = make_field(3, 2);
  CHECK(f9.eta(Element{3}) == 1);  // i
}

TEST_CASE("subfield degree") {
  const Field f9 = make_field(3, 2);
  CHECK(f9.subfield_degree(Element{2}) == 1);
  CHECK(f9.subfield_degree(Element{3}) == 2);
  const Field f81 = make_field(3, 4);
  for (const Element a : f81.enumerate()) {
    const unsigned r = f81.subfield_degree(a);
    CHECK(4 % r == 0);
  }
}

TEST_CASE("table arithmetic agrees with table-free arithmetic") {
  for (const auto& [p, n] : kSmallFields) {
    const Field f = make_field(p, n);
    const naive::Field g = naive::make(p, n);
    CAPTURE(f.q());
    bool ok = true;
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        ok = ok && f.add(Element{a}, Element{b}).index() == g.add(a, b);
        ok = ok && f.mul(Element{a}, Element{b}).index() == g.mul(a, b);
        ok = ok && f.mul_schoolbook(Element{a}, Element{b}).index() == g.mul(a, b);
      }
      ok = ok && f.neg(Element{a}).index() == g.neg(a);
      ok = ok && f.eta(Element{a}) == g.eta(a);
    }
    CHECK(ok);
  }
}

TEST_CASE("field axioms and character properties, q <= 121") {
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {11, 2}}) {
    const Field f = make_field(p, n);
    CAPTURE(f.q());
    const auto all = f.enumerate();
    bool axioms = true, multiplicative = true;
    std::int64_t eta_sum = 0, squares = 0;
    for (const Element a : all) {
      eta_sum += f.eta(a);
      squares += f.eta(a) == 1;
      if (a != Field::zero()) {
        axioms = axioms && f.mul(a, f.inv(a)) == Field::one();
        axioms = axioms && f.pow(a, f.q() - 1) == Field::one();
        axioms = axioms && f.exp(f.log(a)) == a;
      }
      axioms = axioms && f.add(a, f.neg(a)) == Field::zero();
      for (const Element b : all) {
        multiplicative = multiplicative && f.eta(f.mul(a, b)) == f.eta(a) * f.eta(b);
        for (const Element c : {Element{1}, f.generator()}) {
          axioms = axioms && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK(axioms);
    CHECK(multiplicative);
    CHECK(eta_sum == 0);
    CHECK(squares == (f.q() - 1) / 2);
    CHECK((f.eta(f.neg(Field::one())) == 1) == (f.q() % 4 == 1));
  }
}

TEST_CASE("QuadraticCharacter matches eta") {
  const Field f = make_field(5, 3);
  const QuadraticCharacter chi(f);
  for (const Element a : f.enumerate()) CHECK(chi(a) == f.eta(a));
}
