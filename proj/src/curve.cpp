#include "cdiff/curve.hpp"

#include <string>

#include "cdiff/errors.hpp"

namespace cdiff {
namespace {

void require_nonsingular(const Field& f, Element c) {
  const Element c2 = f.mul(c, c);
  if (c2 == Field::zero() || c2 == Field::one()) {
    throw InvalidInput("curve y^2 = x(x-1)(x-c^2) is singular when c^2 is 0 or 1");
  }
}

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw InvalidInput("trace exceeds the 64-bit range");
  return static_cast<std::int64_t>(v);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

CurveTrace count_points(const Field& f, Element c) {
  require_nonsingular(f, c);
  const QuadraticCharacter chi(f);
  const Element c2 = f.mul(c, c);
  std::int64_t s = 0;
  for (const Element x : f.enumerate()) s += chi(f.mul(f.mul(x, f.sub(x, Field::one())), f.sub(x, c2)));
  const std::int64_t q = f.q();
  CurveTrace out;
  out.q = f.q();
  out.c2 = c2;
  out.count = q + 1 + s;
  out.t = -s;
  out.s = s;
  out.base_field = f.q();
  return out;
}

std::int64_t lucas_v(std::int64_t P, std::int64_t Q, std::uint64_t m) {
  if (m == 0) return 2;
  std::int64_t prev = 2, cur = P;
  for (std::uint64_t k = 1; k < m; ++k) {
    const std::int64_t next = checked(static_cast<__int128>(P) * cur - static_cast<__int128>(Q) * prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t trace_lift(std::int64_t t_base, std::uint64_t q_base, std::uint64_t m) {
  if (m == 0) throw InvalidInput("lift degree must be >= 1");
  if (static_cast<__int128>(t_base) * t_base > static_cast<__int128>(4) * q_base) {
    throw InvalidInput("trace " + std::to_string(t_base) + " violates the Hasse bound for q = " +
                       std::to_string(q_base));
  }
  return lucas_v(t_base, static_cast<std::int64_t>(q_base), m);
}

CurveTrace trace_via_subfield(const Field& f, Element c) {
  require_nonsingular(f, c);
  const Element c2 = f.mul(c, c);
  const unsigned r = f.subfield_degree(c2);
  std::uint64_t qr = 1;
  for (unsigned i = 0; i < r; ++i) qr *= f.p();

  // F_{p^r} inside F_q: zero together with the powers of g^((q-1)/(p^r-1)).
  const std::uint64_t step = (f.q() - 1) / (qr - 1);
  const Element one = Field::one();
  auto term = [&](Element x) {
    const Element v = f.mul(f.mul(x, f.sub(x, one)), f.sub(x, c2));
    if (v == Field::zero()) return 0;
    return f.pow(v, (qr - 1) / 2) == one ? 1 : -1;
  };
  std::int64_t s_base = term(Field::zero());
  for (std::uint64_t k = 0; k < qr - 1; ++k) s_base += term(f.exp(k * step));

  const std::int64_t t_base = -s_base;
  const std::int64_t t = trace_lift(t_base, qr, f.n() / r);
  CurveTrace out;
  out.q = f.q();
  out.c2 = c2;
  out.t = t;
  out.s = -t;
  out.count = static_cast<std::int64_t>(f.q()) + 1 - t;
  out.base_field = qr;
  out.lifted = r < f.n();
  return out;
}

TwoSquares cornacchia(std::uint64_t p) {
  if (!is_prime(p) || p % 4 != 1) {
    throw InvalidInput("two-square decomposition needs a prime p = 1 (mod 4), got " + std::to_string(p));
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t r0 = p, r1 = powmod(z, (p - 1) / 4, p);
  if (2 * r1 > p) r1 = p - r1;
  while (r1 * r1 > p) {
    const std::uint64_t r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  std::uint64_t x = r1, y = isqrt(p - x * x);
  if (x * x + y * y != p) throw InternalInconsistency("descent did not reach a two-square form");
  if (x % 2 == 0) std::swap(x, y);
  TwoSquares out{static_cast<std::int64_t>(x), static_cast<std::int64_t>(y), p};
  if (((out.a + out.b) % 4 + 4) % 4 != 1) out.a = -out.a;
  return out;
}

std::int64_t trace_x3_minus_x(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
  if (p % 4 == 3) return 0;
  return 2 * cornacchia(p).a;
}

}  // namespace cdiff
