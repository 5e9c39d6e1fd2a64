#include "spectra/random.hpp"

namespace spectra {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  // FNV-1a over the label keeps sub-streams of different checks apart
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(seed ^ h) + index);
}

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  // rejection sampling for an unbiased draw
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<long>(x % span);
}

IntMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(lo, hi);
  return m;
}

IntMatrix random_unimodular(Rng &rng, std::size_t n, std::size_t steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng.coin()) u(0, 0) = -1;
    return u;
  }
  if (steps == 0) steps = 2 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = rng.index(n), j = rng.index(n - 1);
    if (j >= i) ++j;
    u.combine_rows(i, Integer(1), j, Integer(rng.uniform(-2, 2)));
    if (rng.uniform(0, 3) == 0) u.swap_rows(i, j);
  }
  return u;
}

FgAbGroup random_group(Rng &rng, std::size_t max_gens, long max_order, bool allow_free) {
  std::size_t k = rng.index(max_gens + 1);
  IntVector orders;
  for (std::size_t i = 0; i < k; ++i) {
    if (allow_free && rng.uniform(0, 3) == 0) orders.push_back(0);
    else orders.push_back(rng.uniform(2, max_order));
  }
  return FgAbGroup::from_cyclic_orders(0, orders);
}

} // namespace spectra
