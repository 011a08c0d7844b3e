#include "cdiff/spectrum.hpp"

namespace cdiff {

std::uint64_t Spectrum::omega(std::uint64_t i) const {
  const auto it = entries_.find(i);
  return it == entries_.end() ? 0 : it->second;
}

void Spectrum::add(std::uint64_t index, std::uint64_t count) {
  if (count != 0) entries_[index] += count;
}

std::uint64_t Spectrum::total() const {
  std::uint64_t s = 0;
  for (const auto& [i, w] : entries_) s += w;
  return s;
}

std::uint64_t Spectrum::first_moment() const {
  std::uint64_t s = 0;
  for (const auto& [i, w] : entries_) s += i * w;
  return s;
}

std::uint64_t Spectrum::second_moment() const {
  std::uint64_t s = 0;
  for (const auto& [i, w] : entries_) s += i * i * w;
  return s;
}

std::uint64_t Spectrum::max_index() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

Spectrum merge_spectrum_indices(std::uint64_t q,
                                std::span<const std::pair<std::uint64_t, std::uint64_t>> raw) {
  Spectrum s(q);
  for (const auto& [index, count] : raw) s.add(index, count);
  return s;
}

bool backfill_zero(Spectrum& s) {
  const std::uint64_t t = s.total();
  if (t > s.q()) return false;
  s.add(0, s.q() - t);
  return true;
}

}  // namespace cdiff
