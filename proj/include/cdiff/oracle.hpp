#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cdiff/field.hpp"
#include "cdiff/spectrum.hpp"

namespace cdiff {

using BigInt = boost::multiprecision::cpp_int;

/// (q + 1) / 2.
[[nodiscard]] std::uint64_t default_exponent(const Field& f);

/// x -> x^d tabulated over the field (0^0 = 1).
class PowerMap {
 public:
  PowerMap(const Field& f, std::uint64_t d);

  [[nodiscard]] std::uint64_t exponent() const { return d_; }
  [[nodiscard]] Element operator()(Element x) const { return Element{table_[x.index()]}; }

 private:
  std::uint64_t d_;
  std::vector<std::uint32_t> table_;
};

/// counts[b] = #{x : (x+a)^d - c x^d = b}, indexed by canonical b.
struct DdtRow {
  Element a;
  Element c;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> counts;

  [[nodiscard]] std::uint64_t total() const;
  [[nodiscard]] std::uint64_t max() const;
};

/// Exhaustive row. Throws InvalidInput unless d < q.
[[nodiscard]] DdtRow ddt_row(const Field& f, std::uint64_t d, Element c, Element a);
[[nodiscard]] DdtRow ddt_row(const Field& f, const PowerMap& power, Element c, Element a);

/// Row a = 0 from the structure of (1-c) x^d = b. Throws InvalidInput for c = 1 or d = 0.
[[nodiscard]] DdtRow a0_row(const Field& f, std::uint64_t d, Element c);

/// Histogram of the a = 1 row, including omega_0.
[[nodiscard]] Spectrum spectrum_brute(const Field& f, std::uint64_t d, Element c);

/// Largest entry over every row a (a != 0 only when c = 1).
[[nodiscard]] std::uint64_t c_uniformity(const Field& f, std::uint64_t d, Element c);

/// Number of (x1, x2, x3, x4) with x1 - x2 + x3 - x4 = 0 and x1^d - c x2^d + c x3^d - x4^d = 0,
/// via sum_a sum_v R_a(v) S_a(v). O(q^2).
[[nodiscard]] BigInt n4(const Field& f, std::uint64_t d, Element c);
/// Same count by enumerating (x1, x2, x3). O(q^3).
[[nodiscard]] BigInt n4_direct(const Field& f, std::uint64_t d, Element c);
/// Closed form at c = -1, d = (q+1)/2: (q^3 + 9q^2 - 5q + 3)/8 or (q^3 + 13q^2 - 9q + 3)/8.
[[nodiscard]] BigInt n4_closed_cminus1(const Field& f);

struct MomentReport {
  std::uint64_t sum0 = 0;
  std::uint64_t sum1 = 0;
  std::uint64_t sum2 = 0;
  BigInt n4;
  std::uint64_t gcd_d = 0;
  bool consistent = false;
};

/// Checks sum0 = sum1 = q and sum2 = (n4 - 1)/(q - 1) - gcd(d, q - 1).
[[nodiscard]] MomentReport moment_check(const Spectrum& s, const BigInt& n4, std::uint64_t d, const Field& f);

}  // namespace cdiff
