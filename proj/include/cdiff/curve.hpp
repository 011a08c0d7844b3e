#pragma once

#include <cstdint>

#include "cdiff/field.hpp"

namespace cdiff {

/// Point count of E: y^2 = x(x-1)(x-c^2) over F_q.
/// t = q + 1 - count is the standard trace; s = -t = sum_x eta(x(x-1)(x-c^2)).
struct CurveTrace {
  std::uint64_t q = 0;
  Element c2;
  std::int64_t count = 0;
  std::int64_t t = 0;
  std::int64_t s = 0;
  std::uint64_t base_field = 0;  // size of the field the points were actually counted over
  bool lifted = false;

  bool operator==(const CurveTrace&) const = default;
};

/// p = a^2 + b^2 with b > 0 even and a + b = 1 (mod 4).
struct TwoSquares {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::uint64_t p = 0;

  bool operator==(const TwoSquares&) const = default;
};

/// Direct O(q) count. Throws InvalidInput when c^2 is 0 or 1.
[[nodiscard]] CurveTrace count_points(const Field& f, Element c);

/// V_m(P, Q): V_0 = 2, V_1 = P, V_k = P V_{k-1} - Q V_{k-2}. Throws InvalidInput on int64 overflow.
[[nodiscard]] std::int64_t lucas_v(std::int64_t P, std::int64_t Q, std::uint64_t m);

/// Trace over F_{q^m} from the trace over F_q. Throws InvalidInput when t^2 > 4q or m = 0.
[[nodiscard]] std::int64_t trace_lift(std::int64_t t_base, std::uint64_t q_base, std::uint64_t m);

/// Counts over F_p(c^2) and lifts; agrees with count_points.
[[nodiscard]] CurveTrace trace_via_subfield(const Field& f, Element c);

/// Throws InvalidInput unless p is a prime = 1 (mod 4).
[[nodiscard]] TwoSquares cornacchia(std::uint64_t p);

/// Standard trace of y^2 = x^3 - x over F_p: 0 for p = 3 (mod 4), else 2a from cornacchia(p).
[[nodiscard]] std::int64_t trace_x3_minus_x(std::uint64_t p);

}  // namespace cdiff
