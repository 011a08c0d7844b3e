#include "cdiff/charsum.hpp"

#include "cdiff/errors.hpp"

namespace cdiff {
namespace {

void require_generic_c(const Field& f, Element c) {
  if (c == Field::zero() || c == Field::one() || c == f.neg(Field::one())) {
    throw InvalidInput("c must avoid {0, 1, -1}");
  }
}

constexpr int sgn(std::size_t slot, int bit) { return (slot >> bit) & 1 ? -1 : 1; }

}  // namespace

std::uint64_t PairCounts::total() const {
  std::uint64_t s = 0;
  for (auto v : counts) s += v;
  return s;
}

std::array<int, 4> QuadCounts::pattern(std::size_t slot) {
  return {sgn(slot, 3), sgn(slot, 2), sgn(slot, 1), sgn(slot, 0)};
}

std::string QuadCounts::key(std::size_t slot) {
  std::string out;
  for (int s : pattern(slot)) {
    if (!out.empty()) out += ',';
    out += s > 0 ? "+1" : "-1";
  }
  return out;
}

std::uint64_t QuadCounts::total() const {
  std::uint64_t s = 0;
  for (auto v : counts) s += v;
  return s;
}

Rational QuadPrediction::total() const {
  Rational s;
  for (const auto& v : values) s += v;
  return s;
}

bool QuadPrediction::matches(const QuadCounts& counts) const {
  for (std::size_t k = 0; k < 16; ++k) {
    if (values[k] != Rational(static_cast<std::int64_t>(counts.counts[k]))) return false;
  }
  return true;
}

std::int64_t jacobsthal_quadratic(const Field& f, Element a2, Element a1, Element a0) {
  if (a2 == Field::zero()) throw InvalidInput("leading coefficient a2 must be nonzero");
  const Element four = f.from_int(4);
  const Element disc = f.sub(f.mul(a1, a1), f.mul(four, f.mul(a0, a2)));
  const int e = f.eta(a2);
  return disc == Field::zero() ? static_cast<std::int64_t>(f.q() - 1) * e : -e;
}

std::int64_t jacobsthal_brute(const Field& f, Element a2, Element a1, Element a0) {
  if (a2 == Field::zero()) throw InvalidInput("leading coefficient a2 must be nonzero");
  const QuadraticCharacter chi(f);
  std::int64_t s = 0;
  for (const Element x : f.enumerate()) s += chi(f.add(f.mul(f.add(f.mul(a2, x), a1), x), a0));
  return s;
}

PairCounts pair_counts_S(const Field& f) {
  const QuadraticCharacter chi(f);
  const Element minus_one = f.neg(Field::one());
  PairCounts out;
  for (const Element x : f.enumerate()) {
    if (x == Field::zero() || x == minus_one) continue;
    ++out.at(chi(f.add(x, Field::one())), chi(x));
  }
  return out;
}

PairCounts pair_counts_S_predicted(const Field& f, SConvention convention) {
  const std::uint64_t q = f.q();
  PairCounts out;
  if (f.eta(f.neg(Field::one())) == 1) {
    out.at(1, 1) = (q - 5) / 4;
    out.at(-1, 1) = out.at(1, -1) = out.at(-1, -1) = (q - 1) / 4;
    return out;
  }
  out.at(1, 1) = out.at(-1, -1) = (q - 3) / 4;
  if (convention == SConvention::kLargeOneMinus) {
    out.at(1, -1) = (q + 1) / 4;
    out.at(-1, 1) = (q - 3) / 4;
  } else {
    out.at(1, -1) = (q - 3) / 4;
    out.at(-1, 1) = (q + 1) / 4;
  }
  return out;
}

PairCounts pair_counts_T(const Field& f) {
  const QuadraticCharacter chi(f);
  const Element minus_one = f.neg(Field::one());
  PairCounts out;
  for (const Element b : f.enumerate()) {
    if (b == Field::one() || b == minus_one) continue;
    ++out.at(chi(f.sub(b, Field::one())), chi(f.add(b, Field::one())));
  }
  return out;
}

PairCounts pair_counts_T_closed(const Field& f) {
  const std::int64_t q = f.q();
  const int eta2 = f.eta(f.from_int(2));
  const int eta_m2 = f.eta(f.from_int(-2));
  PairCounts out;
  for (int i : {1, -1}) {
    for (int j : {1, -1}) {
      const std::int64_t num = q - i * j - 2 - j * eta2 - i * eta_m2;
      if (num % 4 != 0 || num < 0) throw InternalInconsistency("T count closed form is not integral");
      out.at(i, j) = static_cast<std::uint64_t>(num / 4);
    }
  }
  return out;
}

QuadCounts quad_counts(const Field& f, Element c) {
  require_generic_c(f, c);
  const QuadraticCharacter chi(f);
  const Element one = Field::one(), minus_one = f.neg(one), minus_c = f.neg(c);
  QuadCounts out{c, {}};
  for (const Element b : f.enumerate()) {
    if (b == one || b == minus_one || b == c || b == minus_c) continue;
    const std::size_t k = QuadCounts::slot(chi(f.sub(b, one)), chi(f.add(b, one)), chi(f.sub(b, c)),
                                           chi(f.add(b, c)));
    ++out.counts[k];
  }
  return out;
}

QuadPrediction quad_counts_closed(const Field& f, Element c, const ABCSums& sums,
                                  QuadFormulaSet set) {
  require_generic_c(f, c);
  if (f.eta(f.neg(Field::one())) != 1) {
    throw UnsupportedCase("the sixteen closed forms assume eta(-1) = 1");
  }
  const std::int64_t q = f.q(), A = sums.A, B = sums.B, C = sums.C;
  const Element one = Field::one();
  const std::int64_t h2 = f.eta(f.from_int(2));
  const std::int64_t h2c = f.eta(f.mul(f.from_int(2), c));
  const std::int64_t m = f.eta(f.sub(one, c));  // eta(1-c)
  const std::int64_t pl = f.eta(f.add(one, c));  // eta(1+c)
  const std::int64_t g = f.eta(f.sub(one, f.mul(c, c)));  // eta(1-c^2)
  const std::int64_t hcm1 = f.eta(f.sub(c, one));
  const std::int64_t hcp1 = f.eta(f.add(c, one));

  std::array<std::int64_t, 16> num{};
  auto put = [&](int i, int j, int u, int v, std::int64_t value) {
    num[QuadCounts::slot(i, j, u, v)] = value;
  };
  put(1, 1, 1, 1, q - 6 + 2 * A + 2 * B + C - 2 * (2 + h2 + h2c) * (1 + m) * (1 + pl));
  const std::int64_t s111m = q - 2 * B - C - 2 * (1 + h2) * (1 - g) - 2 * (1 + m) * (1 + pl);
  put(1, 1, 1, -1, s111m);
  put(1, 1, -1, 1, s111m);
  put(1, 1, -1, -1,
      q + 2 - 2 * A + 2 * B + C - 2 * (1 + h2) * (1 - m) * (1 - pl) -
          2 * (1 + m) * (1 + pl) * (1 - h2c));
  put(1, -1, 1, 1, q - 2 * A - C - 2 * (1 + m) * (1 + pl) - 2 * (1 + h2c) * (1 - g));
  put(1, -1, 1, -1,
      q + 2 + C - (2 - h2 - h2c) * (1 + m) * (1 - pl) - (2 + h2 + h2c) * (1 - m) * (1 + pl));
  put(1, -1, -1, 1,
      q + 2 + C - (2 - h2 - h2c) * (1 - m) * (1 + pl) - (2 + h2 + h2c) * (1 + m) * (1 - pl));
  put(1, -1, -1, -1, q + 2 * A - C - 2 * (1 - m) * (1 - pl) - 2 * (1 - h2c) * (1 - g));
  put(-1, 1, 1, 1, q - 2 * A - C - 2 * (1 + m) * (1 + pl) - 2 * (1 + h2c) * (1 - g));
  if (set == QuadFormulaSet::kAsPrinted) {
    // Both products below contain (1 + eta(1-c))(1 - eta(1-c)) = 0.
    put(-1, 1, 1, -1,
        q + 2 + C - (2 + h2 + h2c) * (1 + m) * (1 - m) - (2 - h2 - h2c) * (1 - m) * (1 + m));
    put(-1, 1, -1, 1,
        q + 2 + C - (2 + h2 + h2c) * (1 - m) * (1 + m) - (2 - h2 - h2c) * (1 + m) * (1 - m));
  } else {
    put(-1, 1, 1, -1,
        q + 2 + C - (2 + h2 + h2c) * (1 + m) * (1 - pl) - (2 - h2 - h2c) * (1 - m) * (1 + pl));
    put(-1, 1, -1, 1,
        q + 2 + C - (2 + h2 + h2c) * (1 - m) * (1 + pl) - (2 - h2 - h2c) * (1 + m) * (1 - pl));
  }
  put(-1, 1, -1, -1, q + 2 * A - C - 2 * (1 - m) * (1 - pl) - 2 * (1 - h2c) * (1 - g));
  put(-1, -1, 1, 1,
      q + 2 + 2 * A - 2 * B + C - 2 * (1 - h2) * (1 + m) * (1 + pl) -
          2 * (1 - hcm1) * (1 - hcp1) * (1 + h2c));
  const std::int64_t sm1m1 = q + 2 * B - C - 2 * (1 - h2) * (1 - g) - 2 * (1 - m) * (1 - pl);
  put(-1, -1, 1, -1, sm1m1);
  put(-1, -1, -1, 1, sm1m1);
  put(-1, -1, -1, -1, q - 6 - 2 * A - 2 * B + C - 2 * (2 - h2 - h2c) * (1 - m) * (1 - pl));

  QuadPrediction out{c, {}};
  for (std::size_t k = 0; k < 16; ++k) out.values[k] = Rational(num[k], 16);
  return out;
}

QuadPrediction quad_counts_expansion(const Field& f, Element c, const ABCSums& sums) {
  require_generic_c(f, c);
  const std::int64_t q = f.q();
  const Element one = Field::one(), minus_one = f.neg(one), two = f.from_int(2);
  const std::int64_t em1 = f.eta(minus_one);
  // A and B with c replaced by -c in the linear factor; b -> -b relates them by eta(-1).
  const std::int64_t A = sums.A, A2 = em1 * sums.A, B = sums.B, B2 = em1 * sums.B, C = sums.C;
  auto eta = [&](Element x) -> std::int64_t { return f.eta(x); };

  QuadPrediction out{c, {}};
  for (std::size_t k = 0; k < 16; ++k) {
    const auto [i, j, u, v] = QuadCounts::pattern(k);
    const std::int64_t pairs = i * j + i * u + i * v + j * u + j * v + u * v;
    const std::int64_t full = q - pairs + i * j * u * A + i * j * v * A2 + i * u * v * B +
                              j * u * v * B2 + std::int64_t{i} * j * u * v * C;
    // Terms contributed by the four excluded points, where one factor collapses to 1.
    const std::int64_t at_one =
        (1 + j * eta(two)) * (1 + u * eta(f.sub(one, c))) * (1 + v * eta(f.add(one, c)));
    const std::int64_t at_minus_one = (1 + i * eta(f.neg(two))) * (1 + u * eta(f.sub(minus_one, c))) *
                                      (1 + v * eta(f.add(minus_one, c)));
    const std::int64_t at_c = (1 + i * eta(f.sub(c, one))) * (1 + j * eta(f.add(c, one))) *
                              (1 + v * eta(f.mul(two, c)));
    const std::int64_t at_minus_c = (1 + i * eta(f.sub(f.neg(c), one))) *
                                    (1 + j * eta(f.sub(one, c))) *
                                    (1 + u * eta(f.neg(f.mul(two, c))));
    out.values[k] = Rational(full - at_one - at_minus_one - at_c - at_minus_c, 16);
  }
  return out;
}

ABCSums abc_sums(const Field& f, Element c) {
  require_generic_c(f, c);
  const QuadraticCharacter chi(f);
  const Element one = Field::one(), c2 = f.mul(c, c);
  ABCSums out{c, 0, 0, 0};
  for (const Element b : f.enumerate()) {
    const Element b2m1 = f.sub(f.mul(b, b), one);
    const Element b2mc2 = f.sub(f.mul(b, b), c2);
    out.A += chi(f.mul(b2m1, f.sub(b, c)));
    out.B += chi(f.mul(f.sub(b, one), b2mc2));
    out.C += chi(f.mul(b2m1, b2mc2));
  }
  return out;
}

std::int64_t quartic_reduction_check(const Field& f, Element c) {
  require_generic_c(f, c);
  const QuadraticCharacter chi(f);
  const Element one = Field::one(), c2 = f.mul(c, c);
  std::int64_t cubic = 0;
  for (const Element a : f.enumerate()) cubic += chi(f.mul(f.mul(a, f.sub(a, one)), f.sub(a, c2)));
  if (abc_sums(f, c).C != cubic - 1) {
    throw InternalInconsistency("quartic sum C differs from the cubic sum minus one");
  }
  return cubic;
}

}  // namespace cdiff
