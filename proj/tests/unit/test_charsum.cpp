#include <doctest.h>

#include "cdiff/charsum.hpp"
#include "cdiff/errors.hpp"

using namespace cdiff;

namespace {

Element el(const Field& f, std::int64_t k) { return f.from_int(k); }

bool has_eta_one(const Field& f) { return f.eta(f.neg(Field::one())) == 1; }

}  // namespace

TEST_CASE("Jacobsthal sums") {
  const Field f7 = make_field(7, 1);
  CHECK(jacobsthal_quadratic(f7, el(f7, 1), el(f7, 0), el(f7, -1)) == -1);
  CHECK(jacobsthal_brute(f7, el(f7, 1), el(f7, 0), el(f7, -1)) == -1);

  const Field f5 = make_field(5, 1);
  CHECK(jacobsthal_quadratic(f5, el(f5, 1), el(f5, 0), el(f5, 0)) == 4);

  const Field f9 = make_field(3, 2);
  for (std::uint32_t c = 1; c < 9; ++c) {
    const Element c2 = f9.mul(Element{c}, Element{c});
    CHECK(jacobsthal_quadratic(f9, Field::one(), Field::zero(), f9.neg(c2)) == -1);
  }
  CHECK_THROWS_AS((void)jacobsthal_quadratic(f9, Field::zero(), Field::one(), Field::one()), InvalidInput);
  CHECK_THROWS_AS((void)jacobsthal_brute(f9, Field::zero(), Field::one(), Field::one()), InvalidInput);
}

TEST_CASE("Jacobsthal closed form equals enumeration for every quadratic on small fields") {
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}, {7, 1}}) {
    const Field f = make_field(p, n);
    bool ok = true;
    for (const Element a2 : f.enumerate()) {
      if (a2 == Field::zero()) continue;
      for (const Element a1 : f.enumerate())
        for (const Element a0 : f.enumerate())
          ok = ok && jacobsthal_quadratic(f, a2, a1, a0) == jacobsthal_brute(f, a2, a1, a0);
    }
    CHECK(ok);
  }
}

TEST_CASE("pair counts S") {
  const PairCounts s7 = pair_counts_S(make_field(7, 1));
  CHECK(s7.at(1, 1) == 1);
  CHECK(s7.at(-1, 1) == 2);
  CHECK(s7.at(1, -1) == 1);
  CHECK(s7.at(-1, -1) == 1);
  const PairCounts s5 = pair_counts_S(make_field(5, 1));
  CHECK(s5.at(1, 1) == 0);
  CHECK(s5.at(-1, 1) == 1);
  CHECK(s5.at(1, -1) == 1);
  CHECK(s5.at(-1, -1) == 1);

  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {3, 3}, {5, 2}, {7, 2}, {23, 1}}) {
    const Field f = make_field(p, n);
    CAPTURE(f.q());
    const PairCounts s = pair_counts_S(f);
    CHECK(s.total() == f.q() - 2);
    // The c = -1 argument's orientation is the one enumeration supports.
    CHECK(s == pair_counts_S_predicted(f, SConvention::kLargeMinusOne));
    if (has_eta_one(f)) {
      CHECK(s == pair_counts_S_predicted(f, SConvention::kLargeOneMinus));
    } else {
      CHECK_FALSE(s == pair_counts_S_predicted(f, SConvention::kLargeOneMinus));
    }
  }
}

TEST_CASE("pair counts T") {
  const Field f7 = make_field(7, 1);
  CHECK(pair_counts_T_closed(f7).at(1, -1) == 2);
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {3, 3}, {5, 2}, {7, 2}, {3, 4}, {5, 3}}) {
    const Field f = make_field(p, n);
    CAPTURE(f.q());
    const PairCounts t = pair_counts_T(f);
    CHECK(t.total() == f.q() - 2);
    CHECK(t == pair_counts_T_closed(f));
  }
}

TEST_CASE("quad counts") {
  const Field f7 = make_field(7, 1);
  CHECK(quad_counts(f7, el(f7, 2)).total() == 3);
  CHECK_THROWS_AS((void)quad_counts(f7, el(f7, 1)), InvalidInput);
  CHECK_THROWS_AS((void)quad_counts(f7, el(f7, -1)), InvalidInput);
  CHECK_THROWS_AS((void)quad_counts(f7, el(f7, 0)), InvalidInput);
  CHECK(QuadCounts::key(QuadCounts::slot(1, -1, 1, -1)) == "+1,-1,+1,-1");
  for (std::uint32_t c = 2; c < 6; ++c) CHECK(quad_counts(f7, Element{c}).total() == 3);
}

TEST_CASE("quad closed forms need eta(-1) = 1") {
  const Field f7 = make_field(7, 1);
  CHECK_THROWS_AS((void)quad_counts_closed(f7, el(f7, 3), abc_sums(f7, el(f7, 3))), UnsupportedCase);
}

TEST_CASE("sixteen closed forms against enumeration, q <= 169 with eta(-1) = 1") {
  std::uint64_t printed_rows_wrong = 0;
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {5, 1}, {3, 2}, {13, 1}, {17, 1}, {5, 2}, {29, 1}, {37, 1}, {41, 1}, {7, 2}, {53, 1}, {61, 1},
           {73, 1}, {3, 4}, {89, 1}, {97, 1}, {101, 1}, {109, 1}, {113, 1}, {11, 2}, {5, 3}, {13, 2}}) {
    const Field f = make_field(p, n);
    CAPTURE(f.q());
    bool sound = true, symmetric = true, partition = true, expansion = true, twin = true;
    for (const Element c : f.enumerate()) {
      if (c == Field::zero() || c == Field::one() || c == f.neg(Field::one())) continue;
      const ABCSums s = abc_sums(f, c);
      const QuadCounts counts = quad_counts(f, c);
      const QuadPrediction closed = quad_counts_closed(f, c, s);
      sound = sound && closed.matches(counts);
      expansion = expansion && quad_counts_expansion(f, c, s).matches(counts);
      partition = partition && closed.total() == Rational(f.q() - 4);
      twin = twin && closed.at(1, -1, 1, -1) == closed.at(-1, 1, -1, 1);
      for (std::size_t k = 0; k < 16; ++k) {
        const auto [i, j, u, v] = QuadCounts::pattern(k);
        symmetric = symmetric && counts.at(i, j, u, v) == counts.at(j, i, v, u);
      }
      const QuadPrediction printed = quad_counts_closed(f, c, s, QuadFormulaSet::kAsPrinted);
      if (!printed.matches(counts)) ++printed_rows_wrong;
    }
    CHECK(sound);
    CHECK(expansion);
    CHECK(partition);
    CHECK(symmetric);
    CHECK(twin);
  }
  // The verbatim pair of rows that repeats eta(1-c) is wrong somewhere in this range.
  CHECK(printed_rows_wrong > 0);
}

TEST_CASE("inclusion-exclusion expansion holds when eta(-1) = -1") {
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {11, 1}, {3, 3}, {23, 1}}) {
    const Field f = make_field(p, n);
    for (const Element c : f.enumerate()) {
      if (c == Field::zero() || c == Field::one() || c == f.neg(Field::one())) continue;
      CHECK(quad_counts_expansion(f, c, abc_sums(f, c)).matches(quad_counts(f, c)));
    }
  }
}

TEST_CASE("A, B, C sums") {
  const Field f5 = make_field(5, 1);
  CHECK(abc_sums(f5, el(f5, 2)).C == 1);
  const Field f7 = make_field(7, 1);
  CHECK(abc_sums(f7, el(f7, 3)).C == -1);
  const Field f9 = make_field(3, 2);
  const ABCSums s9 = abc_sums(f9, Element{3});
  CHECK(s9.A == 2);
  CHECK(s9.B == 2);
  CHECK(s9.C == 5);
  const ABCSums s5 = abc_sums(f5, el(f5, 2));
  CHECK(s5.A == -2);
  CHECK(s5.B == 2);
  const ABCSums s7 = abc_sums(f7, el(f7, 3));
  CHECK(s7.A == 0);
  CHECK(s7.B == 4);
  CHECK_THROWS_AS((void)abc_sums(f7, el(f7, 1)), InvalidInput);

  // With eta(-1) = -1, replacing c by -c flips the sign of A.
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {11, 1}, {3, 3}, {19, 1}}) {
    const Field g = make_field(p, n);
    for (const Element c : g.enumerate()) {
      if (c == Field::zero() || c == Field::one() || c == g.neg(Field::one())) continue;
      CHECK(abc_sums(g, c).A == -abc_sums(g, g.neg(c)).A);
    }
  }
}

TEST_CASE("quartic reduction") {
  const Field f5 = make_field(5, 1);
  CHECK(quartic_reduction_check(f5, el(f5, 2)) == 2);
  const Field f9 = make_field(3, 2);
  CHECK(quartic_reduction_check(f9, Element{3}) == 6);
  const Field f7 = make_field(7, 1);
  CHECK(quartic_reduction_check(f7, el(f7, 3)) == 0);
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{11, 1}, {5, 2}, {3, 3}, {7, 2}}) {
    const Field f = make_field(p, n);
    for (const Element c : f.enumerate()) {
      if (c == Field::zero() || c == Field::one() || c == f.neg(Field::one())) continue;
      CHECK_NOTHROW((void)quartic_reduction_check(f, c));
    }
  }
}
