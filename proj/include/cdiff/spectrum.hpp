#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>

namespace cdiff {

/// Multiplicity histogram {i -> omega_i} of the a = 1 row of a c-DDT. Zero counts are never stored.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::uint64_t q) : q_(q) {}

  [[nodiscard]] std::uint64_t q() const { return q_; }
  [[nodiscard]] const std::map<std::uint64_t, std::uint64_t>& entries() const { return entries_; }
  [[nodiscard]] std::uint64_t omega(std::uint64_t i) const;

  /// Adds `count` to omega_index; colliding indices merge additively.
  void add(std::uint64_t index, std::uint64_t count);

  [[nodiscard]] std::uint64_t total() const;          // sum omega_i
  [[nodiscard]] std::uint64_t first_moment() const;   // sum i * omega_i
  [[nodiscard]] std::uint64_t second_moment() const;  // sum i^2 * omega_i
  [[nodiscard]] std::uint64_t max_index() const;

  bool operator==(const Spectrum&) const = default;

 private:
  std::uint64_t q_ = 0;
  std::map<std::uint64_t, std::uint64_t> entries_;
};

/// Additive merge of (index, count) pairs, e.g. [(2,1), (2,1)] -> {2: 2}.
[[nodiscard]] Spectrum merge_spectrum_indices(std::uint64_t q,
                                              std::span<const std::pair<std::uint64_t, std::uint64_t>> raw);

/// Puts q - total() into omega_0. Returns false (and leaves s untouched) when total() > q.
bool backfill_zero(Spectrum& s);

}  // namespace cdiff
