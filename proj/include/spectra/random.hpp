#pragma once

#include "spectra/group.hpp"
#include "spectra/matrix.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace spectra {

/// SplitMix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix64(std::uint64_t x);

/// Sub-seed for case `index` of the check named `label` under `seed`.
/// The same triple always yields the same value, whatever order cases run in.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index);

/// Deterministic generator: identical seeds give identical streams on every
/// platform (no std:: distributions are involved).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
  bool coin() { return (next() >> 63) != 0; }
  template <class T> const T &pick(const std::vector<T> &v) { return v[index(v.size())]; }

private:
  std::mt19937_64 engine_;
};

IntMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols, long lo, long hi);

/// Product of random elementary operations; determinant +-1.
IntMatrix random_unimodular(Rng &rng, std::size_t n, std::size_t steps = 0);

/// Random f.g. group with at most `max_gens` cyclic summands of order at
/// most `max_order` (free summands included when `allow_free`).
FgAbGroup random_group(Rng &rng, std::size_t max_gens, long max_order, bool allow_free = true);

} // namespace spectra
