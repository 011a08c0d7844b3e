#include "cdiff/field.hpp"

#include <string>

#include "cdiff/errors.hpp"

namespace cdiff {
namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of `a` modulo the monic polynomial `m` over F_p. Both constant term first.
Poly poly_rem(Poly a, std::span<const std::uint32_t> m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t k = a.size(); k-- > dm;) {
    const std::uint32_t lead = a[k];
    if (lead == 0) continue;
    for (std::size_t t = 0; t <= dm; ++t) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[t] % p;
      a[k - dm + t] = static_cast<std::uint32_t>((a[k - dm + t] + p - sub) % p);
    }
  }
  a.resize(dm);
  return a;
}

Poly digits_of(std::uint64_t k, std::uint32_t p, std::uint32_t n) {
  Poly d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  return d;
}

std::uint32_t index_of(const Poly& d, std::uint32_t p) {
  std::uint64_t k = 0;
  for (std::size_t i = d.size(); i-- > 0;) k = k * p + d[i];
  return static_cast<std::uint32_t>(k);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= m; ++r) {
    if (m % r == 0) {
      out.push_back(r);
      while (m % r == 0) m /= r;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const std::size_t n = monic.size() - 1;
  if (n == 0) return false;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly divisor = digits_of(k, p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      const Poly r = poly_rem(Poly(monic.begin(), monic.end()), divisor, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field make_field(std::uint32_t p, std::uint32_t n, std::uint64_t limit) {
  if (p < 3 || p % 2 == 0) {
    throw InvalidInput("characteristic must be an odd prime (got p = " + std::to_string(p) + ")");
  }
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidInput("extension degree must satisfy n >= 1");
  constexpr std::uint64_t kHardCap = 1ull << 31;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > limit || q > kHardCap) {
      throw InvalidInput("field size p^n exceeds the enumeration limit " +
                         std::to_string(std::min(limit, kHardCap)));
    }
  }

  Field f;
  f.spec_.p = p;
  f.spec_.n = n;
  f.spec_.q = q;
  for (std::uint64_t k = 0; k < q; ++k) {
    Poly m = digits_of(k, p, n);
    m.push_back(1);
    if (is_irreducible(m, p)) {
      f.spec_.modulus = std::move(m);
      break;
    }
  }
  if (f.spec_.modulus.empty()) throw InternalInconsistency("no irreducible modulus found");

  // Least-index generator of the multiplicative group, tested with the schoolbook product.
  const auto factors = prime_factors(q - 1);
  auto slow_pow = [&](Element a, std::uint64_t e) {
    Element r = Field::one();
    while (e) {
      if (e & 1) r = f.mul_schoolbook(r, a);
      a = f.mul_schoolbook(a, a);
      e >>= 1;
    }
    return r;
  };
  Element g{1};
  for (std::uint32_t cand = 1; cand < q; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(Element{cand}, (q - 1) / r) == Field::one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = Element{cand};
      break;
    }
  }

  f.exp_.resize(2 * (q - 1));
  f.log_.assign(q, 0);
  Element x = Field::one();
  for (std::uint64_t k = 0; k < q - 1; ++k) {
    f.exp_[k] = x.index();
    f.log_[x.index()] = static_cast<std::uint32_t>(k);
    x = f.mul_schoolbook(x, g);
  }
  if (x != Field::one()) throw InternalInconsistency("generator order is not q - 1");
  for (std::uint64_t k = q - 1; k < 2 * (q - 1); ++k) f.exp_[k] = f.exp_[k - (q - 1)];
  return f;
}

Element Field::element(std::uint64_t index) const {
  if (index >= spec_.q) {
    throw InvalidInput("element index " + std::to_string(index) + " out of range [0, " +
                       std::to_string(spec_.q) + ")");
  }
  return Element{static_cast<std::uint32_t>(index)};
}

Element Field::from_int(std::int64_t k) const {
  const std::int64_t p = spec_.p;
  return Element{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

Element Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > spec_.n) {
    throw InvalidInput("element has more than n = " + std::to_string(spec_.n) + " coefficients");
  }
  const std::int64_t p = spec_.p;
  Poly d(spec_.n, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    d[i] = static_cast<std::uint32_t>(((coeffs[i] % p) + p) % p);
  return Element{index_of(d, spec_.p)};
}

std::vector<std::uint32_t> Field::coeffs(Element a) const {
  return digits_of(a.index(), spec_.p, spec_.n);
}

Element Field::add(Element a, Element b) const {
  const std::uint32_t p = spec_.p;
  if (spec_.n == 1) {
    const std::uint32_t s = a.index() + b.index();
    return Element{s >= p ? s - p : s};
  }
  std::uint32_t x = a.index(), y = b.index(), r = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.n; ++i) {
    std::uint32_t d = x % p + y % p;
    if (d >= p) d -= p;
    r += d * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return Element{r};
}

Element Field::neg(Element a) const {
  const std::uint32_t p = spec_.p;
  if (spec_.n == 1) return Element{a.index() == 0 ? 0 : p - a.index()};
  std::uint32_t x = a.index(), r = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.n; ++i) {
    const std::uint32_t d = x % p;
    r += (d == 0 ? 0 : p - d) * place;
    x /= p;
    place *= p;
  }
  return Element{r};
}

Element Field::mul(Element a, Element b) const {
  if (a.index() == 0 || b.index() == 0) return zero();
  return Element{exp_[log_[a.index()] + log_[b.index()]]};
}

Element Field::inv(Element a) const {
  if (a.index() == 0) throw DivisionByZero();
  const std::uint32_t order = q() - 1;
  return Element{exp_[(order - log_[a.index()]) % order]};
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (a.index() == 0) return e == 0 ? one() : zero();
  const std::uint64_t order = spec_.q - 1;
  return Element{exp_[(log_[a.index()] * (e % order)) % order]};
}

int Field::eta(Element a) const {
  if (a.index() == 0) return 0;
  return pow(a, (spec_.q - 1) / 2) == one() ? 1 : -1;
}

unsigned Field::subfield_degree(Element a) const {
  Element x = a;
  for (unsigned r = 1; r <= spec_.n; ++r) {
    x = frobenius(x);
    if (x == a) return r;
  }
  throw InternalInconsistency("Frobenius orbit longer than n");
}

std::vector<Element> Field::enumerate() const {
  std::vector<Element> out;
  out.reserve(spec_.q);
  for (std::uint32_t k = 0; k < spec_.q; ++k) out.emplace_back(k);
  return out;
}

std::uint32_t Field::log(Element a) const {
  if (a.index() == 0) throw DivisionByZero();
  return log_[a.index()];
}

Element Field::mul_schoolbook(Element a, Element b) const {
  const std::uint32_t p = spec_.p, n = spec_.n;
  const Poly x = digits_of(a.index(), p, n), y = digits_of(b.index(), p, n);
  Poly prod(2 * n - 1, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
  if (n == 1) return Element{prod[0]};
  return Element{index_of(poly_rem(std::move(prod), spec_.modulus, p), p)};
}

QuadraticCharacter::QuadraticCharacter(const Field& field) : table_(field.q()) {
  for (std::uint32_t k = 0; k < field.q(); ++k)
    table_[k] = static_cast<std::int8_t>(field.eta(Element{k}));
}

}  // namespace cdiff
