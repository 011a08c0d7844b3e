#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cdiff/field.hpp"
#include "cdiff/rational.hpp"

namespace cdiff {

/// Counts indexed by a sign pair (i, j) in {+1, -1}^2.
struct PairCounts {
  std::array<std::uint64_t, 4> counts{};

  static constexpr std::size_t slot(int i, int j) { return 2 * (i < 0) + (j < 0); }
  [[nodiscard]] std::uint64_t at(int i, int j) const { return counts[slot(i, j)]; }
  std::uint64_t& at(int i, int j) { return counts[slot(i, j)]; }
  [[nodiscard]] std::uint64_t total() const;

  bool operator==(const PairCounts&) const = default;
};

/// Counts of b outside {1, -1, c, -c} by the sign pattern (eta(b-1), eta(b+1), eta(b-c), eta(b+c)).
/// Slots follow lexicographic order with +1 before -1: slot 0 is (+,+,+,+), slot 15 is (-,-,-,-).
struct QuadCounts {
  Element c;
  std::array<std::uint64_t, 16> counts{};

  static constexpr std::size_t slot(int i, int j, int u, int v) {
    return 8 * (i < 0) + 4 * (j < 0) + 2 * (u < 0) + (v < 0);
  }
  /// Sign pattern of a slot.
  static std::array<int, 4> pattern(std::size_t slot);
  /// "+1,-1,+1,-1" style key.
  static std::string key(std::size_t slot);

  [[nodiscard]] std::uint64_t at(int i, int j, int u, int v) const { return counts[slot(i, j, u, v)]; }
  [[nodiscard]] std::uint64_t total() const;
};

/// Sixteen predicted set sizes; a sound formula gives nonnegative integers.
struct QuadPrediction {
  Element c;
  std::array<Rational, 16> values{};

  [[nodiscard]] const Rational& at(int i, int j, int u, int v) const {
    return values[QuadCounts::slot(i, j, u, v)];
  }
  [[nodiscard]] Rational total() const;
  [[nodiscard]] bool matches(const QuadCounts& counts) const;
};

/// A = sum eta((b^2-1)(b-c)), B = sum eta((b-1)(b^2-c^2)), C = sum eta((b^2-1)(b^2-c^2)).
struct ABCSums {
  Element c;
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::int64_t C = 0;
};

/// Jacobsthal closed form for sum_x eta(a2 x^2 + a1 x + a0): -eta(a2) when the discriminant is
/// nonzero, (q-1) eta(a2) otherwise. Throws InvalidInput when a2 = 0.
[[nodiscard]] std::int64_t jacobsthal_quadratic(const Field& f, Element a2, Element a1, Element a0);
/// Same sum by enumeration.
[[nodiscard]] std::int64_t jacobsthal_brute(const Field& f, Element a2, Element a1, Element a0);

/// |S_{i,j}| = #{x != 0, -1 : eta(x+1) = i, eta(x) = j}, by enumeration.
[[nodiscard]] PairCounts pair_counts_S(const Field& f);

/// Which of S_{1,-1}, S_{-1,1} gets (q+1)/4 when eta(-1) = -1; the other gets (q-3)/4.
/// Irrelevant when eta(-1) = 1.
enum class SConvention { kLargeOneMinus, kLargeMinusOne };
[[nodiscard]] PairCounts pair_counts_S_predicted(const Field& f, SConvention convention);

/// |T_{i,j}| = #{b != +-1 : eta(b-1) = i, eta(b+1) = j}, by enumeration.
[[nodiscard]] PairCounts pair_counts_T(const Field& f);
/// (q - ij - 2 - j eta(2) - i eta(-2)) / 4 for every (i, j).
[[nodiscard]] PairCounts pair_counts_T_closed(const Field& f);

/// Throws InvalidInput for c in {0, 1, -1}.
[[nodiscard]] QuadCounts quad_counts(const Field& f, Element c);

enum class QuadFormulaSet {
  kCorrected,  // printed forms with the eta(1+c) slip fixed in the (-1,1,1,-1) and (-1,1,-1,1) rows
  kAsPrinted,  // verbatim
};

/// The sixteen closed forms for eta(-1) = 1. Throws UnsupportedCase when eta(-1) = -1.
[[nodiscard]] QuadPrediction quad_counts_closed(const Field& f, Element c, const ABCSums& sums,
                                                QuadFormulaSet set = QuadFormulaSet::kCorrected);

/// Unsimplified inclusion-exclusion expansion; valid for either sign of eta(-1).
[[nodiscard]] QuadPrediction quad_counts_expansion(const Field& f, Element c, const ABCSums& sums);

/// Throws InvalidInput for c in {0, 1, -1}.
[[nodiscard]] ABCSums abc_sums(const Field& f, Element c);

/// Returns sum_a eta(a(a-1)(a-c^2)); throws InternalInconsistency unless it equals C + 1.
[[nodiscard]] std::int64_t quartic_reduction_check(const Field& f, Element c);

}  // namespace cdiff
