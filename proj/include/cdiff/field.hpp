#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cdiff {

/// Largest field size accepted unless the caller raises it (CLI: CDIFF_QMAX).
inline constexpr std::uint64_t kDefaultEnumerationLimit = 50'000;

/// A concrete F_{p^n}. `modulus` is monic of degree n, constant term first; for n = 1 it is x.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> modulus;
  std::uint64_t q = 0;

  bool operator==(const FieldSpec&) const = default;
};

/// A field element, identified by its canonical index sum(coeffs[i] * p^i).
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t index) : index_(index) {}

  [[nodiscard]] constexpr std::uint32_t index() const { return index_; }

  constexpr auto operator<=>(const Element&) const = default;

 private:
  std::uint32_t index_ = 0;
};

/// Arithmetic in F_{p^n} with exp/log tables over a fixed generator.
///
/// Immutable after construction; share freely across threads. Multiplication goes through the
/// tables, and `mul_schoolbook` keeps an independent polynomial-product route for cross-checks.
class Field {
 public:
  [[nodiscard]] const FieldSpec& spec() const { return spec_; }
  [[nodiscard]] std::uint32_t p() const { return spec_.p; }
  [[nodiscard]] std::uint32_t n() const { return spec_.n; }
  [[nodiscard]] std::uint32_t q() const { return static_cast<std::uint32_t>(spec_.q); }

  [[nodiscard]] static constexpr Element zero() { return Element{0}; }
  [[nodiscard]] static constexpr Element one() { return Element{1}; }

  /// Element with the given canonical index; throws InvalidInput when index >= q.
  [[nodiscard]] Element element(std::uint64_t index) const;
  /// Image of an integer in the prime subfield (k mod p).
  [[nodiscard]] Element from_int(std::int64_t k) const;
  /// Element from up to n coefficients (constant term first), each reduced mod p.
  [[nodiscard]] Element from_coeffs(std::span<const std::int64_t> coeffs) const;
  [[nodiscard]] std::vector<std::uint32_t> coeffs(Element a) const;

  [[nodiscard]] Element add(Element a, Element b) const;
  [[nodiscard]] Element sub(Element a, Element b) const { return add(a, neg(b)); }
  [[nodiscard]] Element neg(Element a) const;
  [[nodiscard]] Element mul(Element a, Element b) const;
  /// Throws DivisionByZero for a = 0.
  [[nodiscard]] Element inv(Element a) const;
  [[nodiscard]] Element div(Element a, Element b) const { return mul(a, inv(b)); }
  [[nodiscard]] Element pow(Element a, std::uint64_t e) const;

  /// Quadratic character a^((q-1)/2) mapped to {-1, 0, 1}.
  [[nodiscard]] int eta(Element a) const;
  /// Least r >= 1 with a^(p^r) = a; always divides n.
  [[nodiscard]] unsigned subfield_degree(Element a) const;
  [[nodiscard]] Element frobenius(Element a) const { return pow(a, spec_.p); }

  /// All q elements in ascending index order.
  [[nodiscard]] std::vector<Element> enumerate() const;

  [[nodiscard]] Element generator() const { return Element{exp_[1]}; }
  /// Discrete log base generator(); a must be nonzero.
  [[nodiscard]] std::uint32_t log(Element a) const;
  [[nodiscard]] Element exp(std::uint64_t k) const { return Element{exp_[k % (spec_.q - 1)]}; }

  /// Polynomial product reduced by the modulus, bypassing the tables.
  [[nodiscard]] Element mul_schoolbook(Element a, Element b) const;

  friend Field make_field(std::uint32_t p, std::uint32_t n, std::uint64_t limit);

 private:
  Field() = default;

  FieldSpec spec_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = g^k for 0 <= k < 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// Builds F_{p^n} with the canonical modulus: the monic irreducible of degree n whose
/// non-leading coefficients have the least canonical encoding.
/// Throws InvalidInput for non-prime or even p, n < 1, or p^n > limit.
[[nodiscard]] Field make_field(std::uint32_t p, std::uint32_t n,
                               std::uint64_t limit = kDefaultEnumerationLimit);

/// eta for every element, tabulated once by exponentiation. Use for O(q) sweeps.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(const Field& field);

  [[nodiscard]] int operator()(Element a) const { return table_[a.index()]; }

 private:
  std::vector<std::int8_t> table_;
};

[[nodiscard]] bool is_prime(std::uint64_t n);

/// Trial-division irreducibility test for a monic polynomial over F_p (constant term first).
[[nodiscard]] bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace cdiff
