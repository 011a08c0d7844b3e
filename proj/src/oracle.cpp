#include "cdiff/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cdiff/errors.hpp"

namespace cdiff {

std::uint64_t default_exponent(const Field& f) { return (static_cast<std::uint64_t>(f.q()) + 1) / 2; }

PowerMap::PowerMap(const Field& f, std::uint64_t d) : d_(d), table_(f.q()) {
  for (std::uint32_t k = 0; k < f.q(); ++k) table_[k] = f.pow(Element{k}, d).index();
}

std::uint64_t DdtRow::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

std::uint64_t DdtRow::max() const { return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end()); }

DdtRow ddt_row(const Field& f, const PowerMap& power, Element c, Element a) {
  DdtRow row{a, c, power.exponent(), std::vector<std::uint64_t>(f.q(), 0)};
  for (const Element x : f.enumerate()) ++row.counts[f.sub(power(f.add(x, a)), f.mul(c, power(x))).index()];
  return row;
}

DdtRow ddt_row(const Field& f, std::uint64_t d, Element c, Element a) {
  if (d >= f.q()) throw InvalidInput("exponent d = " + std::to_string(d) + " must be below q");
  return ddt_row(f, PowerMap(f, d), c, a);
}

DdtRow a0_row(const Field& f, std::uint64_t d, Element c) {
  if (c == Field::one()) throw InvalidInput("row a = 0 is degenerate for c = 1");
  if (d == 0) throw InvalidInput("row a = 0 needs d >= 1");
  const std::uint64_t order = f.q() - 1;
  const std::uint64_t k = std::gcd(d, order);
  const Element scale = f.inv(f.sub(Field::one(), c));
  DdtRow row{Field::zero(), c, d, std::vector<std::uint64_t>(f.q(), 0)};
  row.counts[0] = 1;
  for (std::uint32_t b = 1; b < f.q(); ++b) {
    if (f.log(f.mul(Element{b}, scale)) % k == 0) row.counts[b] = k;
  }
  return row;
}

Spectrum spectrum_brute(const Field& f, std::uint64_t d, Element c) {
  const DdtRow row = ddt_row(f, d, c, Field::one());
  Spectrum s(f.q());
  for (auto v : row.counts) s.add(v, 1);
  return s;
}

std::uint64_t c_uniformity(const Field& f, std::uint64_t d, Element c) {
  if (d >= f.q()) throw InvalidInput("exponent d = " + std::to_string(d) + " must be below q");
  const PowerMap power(f, d);
  std::uint64_t best = 0;
  for (const Element a : f.enumerate()) {
    if (a == Field::zero() && c == Field::one()) continue;
    best = std::max(best, ddt_row(f, power, c, a).max());
  }
  return best;
}

BigInt n4(const Field& f, std::uint64_t d, Element c) {
  const PowerMap power(f, d);
  const std::uint32_t q = f.q();
  std::vector<Element> diff(q);
  std::vector<std::uint64_t> hist(q);
  unsigned __int128 total = 0;
  for (const Element a : f.enumerate()) {
    std::fill(hist.begin(), hist.end(), 0);
    for (const Element y : f.enumerate()) {
      diff[y.index()] = f.sub(power(f.add(y, a)), power(y));
      ++hist[diff[y.index()].index()];
    }
    // S_a(v) counts y with c * D_a(y) = v, so sum_v R_a(v) S_a(v) = sum_y R_a(c * D_a(y)).
    for (std::uint32_t y = 0; y < q; ++y) total += hist[f.mul(c, diff[y]).index()];
  }
  BigInt out = static_cast<std::uint64_t>(total >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(total);
  return out;
}

BigInt n4_direct(const Field& f, std::uint64_t d, Element c) {
  const PowerMap power(f, d);
  std::uint64_t total = 0;
  for (const Element x1 : f.enumerate()) {
    for (const Element x2 : f.enumerate()) {
      const Element lhs = f.sub(power(x1), f.mul(c, power(x2)));
      const Element d12 = f.sub(x1, x2);
      for (const Element x3 : f.enumerate()) {
        const Element x4 = f.add(d12, x3);
        if (f.sub(f.add(lhs, f.mul(c, power(x3))), power(x4)) == Field::zero()) ++total;
      }
    }
  }
  return BigInt(total);
}

BigInt n4_closed_cminus1(const Field& f) {
  const BigInt q = f.q();
  const BigInt num = f.eta(f.neg(Field::one())) == 1 ? q * q * q + 9 * q * q - 5 * q + 3
                                                      : q * q * q + 13 * q * q - 9 * q + 3;
  if (num % 8 != 0) throw InternalInconsistency("N4 closed form is not integral");
  return num / 8;
}

MomentReport moment_check(const Spectrum& s, const BigInt& n4_value, std::uint64_t d, const Field& f) {
  MomentReport r;
  r.sum0 = s.total();
  r.sum1 = s.first_moment();
  r.sum2 = s.second_moment();
  r.n4 = n4_value;
  const std::uint64_t q = f.q();
  r.gcd_d = std::gcd(d, q - 1);
  const BigInt num = n4_value - 1;
  r.consistent = r.sum0 == q && r.sum1 == q && num % (q - 1) == 0 &&
                 num / (q - 1) - r.gcd_d == BigInt(r.sum2);
  return r;
}

}  // namespace cdiff
