#include <doctest.h>

#include "cdiff/curve.hpp"
#include "cdiff/errors.hpp"
#include "naive.hpp"

using namespace cdiff;

namespace {

// Affine solutions of y^2 = x^3 - x over F_p plus the point at infinity, by trying every (x, y).
std::int64_t count_x3_minus_x(std::uint32_t p) {
  std::int64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      if ((y * y) % p == (x * x % p * x % p + p - x) % p) ++count;
  return count;
}

}  // namespace

TEST_CASE("point counts") {
  const Field f5 = make_field(5, 1);
  const CurveTrace t5 = count_points(f5, f5.from_int(2));
  CHECK(t5.count == 8);
  CHECK(t5.t == -2);
  CHECK(t5.s == 2);
  CHECK(t5.c2 == Element{4});

  const Field f7 = make_field(7, 1);
  const CurveTrace t7 = count_points(f7, f7.from_int(3));
  CHECK(t7.count == 8);
  CHECK(t7.t == 0);
  CHECK(t7.s == 0);

  CHECK_THROWS_AS((void)count_points(f7, Field::zero()), InvalidInput);
  CHECK_THROWS_AS((void)count_points(f7, f7.from_int(-1)), InvalidInput);
  CHECK_THROWS_AS((void)count_points(f7, Field::one()), InvalidInput);
}

TEST_CASE("point count agrees with a pairwise (x, y) search") {
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {5, 2}}) {
    const Field f = make_field(p, n);
    const naive::Field g = naive::make(p, n);
    for (std::uint32_t c = 2; c < f.q(); ++c) {
      const std::uint32_t c2 = g.mul(c, c);
      if (c2 == 1) continue;
      std::int64_t count = 1;
      for (std::uint32_t x = 0; x < g.q; ++x) {
        const std::uint32_t rhs = g.mul(g.mul(x, g.sub(x, 1)), g.sub(x, c2));
        for (std::uint32_t y = 0; y < g.q; ++y) count += g.mul(y, y) == rhs;
      }
      CHECK(count_points(f, Element{c}).count == count);
    }
  }
}

TEST_CASE("trace lifting") {
  CHECK(trace_lift(0, 3, 2) == -6);
  CHECK(trace_lift(-2, 5, 2) == -6);
  CHECK(trace_lift(7, 13, 1) == 7);
  CHECK_THROWS_AS((void)trace_lift(5, 5, 2), InvalidInput);
  CHECK_THROWS_AS((void)trace_lift(0, 5, 0), InvalidInput);
  CHECK(lucas_v(2, 5, 0) == 2);
  CHECK(lucas_v(2, 5, 1) == 2);
  CHECK_THROWS_AS((void)lucas_v(3, 1000003, 200), InvalidInput);

  // Hasse at every level for every admissible base trace.
  for (const std::int64_t q : {3, 5, 7, 9, 11, 25}) {
    for (std::int64_t t = -2 * q; t <= 2 * q; ++t) {
      if (t * t > 4 * q) continue;
      std::int64_t qm = 1;
      for (std::uint64_t m = 1; m <= 6; ++m) {
        qm *= q;
        const std::int64_t tm = trace_lift(t, q, m);
        CHECK(tm * tm <= 4 * qm);
      }
    }
  }

  const Field f9 = make_field(3, 2);
  const CurveTrace direct = count_points(f9, Element{3});
  CHECK(direct.count == 16);
  CHECK(direct.t == -6);
}

TEST_CASE("trace via the field generated by c^2") {
  const Field f9 = make_field(3, 2);
  const CurveTrace t = trace_via_subfield(f9, Element{3});
  CHECK(t.base_field == 3);
  CHECK(t.lifted);
  CHECK(t.t == -6);
  CHECK(t.count == 16);

  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {11, 2}, {5, 3}}) {
    const Field f = make_field(p, n);
    CAPTURE(f.q());
    bool agree = true;
    for (const Element c : f.enumerate()) {
      if (c == Field::zero() || c == Field::one() || c == f.neg(Field::one())) continue;
      const CurveTrace sub = trace_via_subfield(f, c);
      const CurveTrace full = count_points(f, c);
      agree = agree && sub.t == full.t && sub.count == full.count && sub.s == full.s && sub.c2 == full.c2;
    }
    CHECK(agree);
  }
}

TEST_CASE("two squares") {
  CHECK(cornacchia(5) == TwoSquares{-1, 2, 5});
  CHECK(cornacchia(13) == TwoSquares{3, 2, 13});
  CHECK(cornacchia(17) == TwoSquares{1, 4, 17});
  CHECK_THROWS_AS((void)cornacchia(7), InvalidInput);
  CHECK_THROWS_AS((void)cornacchia(21), InvalidInput);
  for (std::uint64_t p = 5; p < 500; p += 4) {
    if (!is_prime(p)) continue;
    const TwoSquares t = cornacchia(p);
    CHECK(t.a * t.a + t.b * t.b == static_cast<std::int64_t>(p));
    CHECK(t.b > 0);
    CHECK(t.b % 2 == 0);
    CHECK(((t.a + t.b) % 4 + 4) % 4 == 1);
  }
}

TEST_CASE("trace of y^2 = x^3 - x") {
  CHECK(trace_x3_minus_x(7) == 0);
  CHECK(trace_x3_minus_x(5) == -2);
  CHECK(trace_x3_minus_x(13) == 6);
  CHECK(trace_x3_minus_x(17) == 2);
  CHECK_THROWS_AS((void)trace_x3_minus_x(9), InvalidInput);
  for (std::uint32_t p = 3; p < 500; p += 2) {
    if (!is_prime(p)) continue;
    CAPTURE(p);
    CHECK(trace_x3_minus_x(p) == static_cast<std::int64_t>(p) + 1 - count_x3_minus_x(p));
  }
}
