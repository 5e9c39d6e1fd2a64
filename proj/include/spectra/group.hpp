#pragma once

#include "spectra/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace spectra {

/// Finitely generated abelian group (or module over a localization of Z)
/// in invariant-factor form: Z^rank + Z/d_1 + ... + Z/d_k, d_i | d_{i+1},
/// every d_i >= 2. Two groups are isomorphic iff they compare equal.
///
/// Standard generators: the free generators first, then one generator per
/// torsion factor in divisor-chain order.
class FgAbGroup {
public:
  FgAbGroup() = default;
  /// Validates the divisor chain.
  FgAbGroup(std::size_t rank, IntVector torsion);

  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
  static FgAbGroup cyclic(const Integer &n);
  /// Canonical form of Z^rank + (+)_i Z/orders[i]; orders of 1 are dropped,
  /// orders of 0 count as free summands.
  static FgAbGroup from_cyclic_orders(std::size_t rank, const IntVector &orders);

  std::size_t rank() const { return rank_; }
  const IntVector &torsion() const { return torsion_; }
  std::size_t generator_count() const { return rank_ + torsion_.size(); }
  /// Order of each standard generator, 0 for free generators.
  IntVector generator_orders() const;

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  bool is_free() const { return torsion_.empty(); }
  /// Order of a finite group; throws for infinite groups.
  Integer order() const;
  /// Smallest m >= 1 with mA = 0, or 0 when A has a free summand.
  Integer exponent() const;

  std::string to_string() const;

  friend bool operator==(const FgAbGroup &, const FgAbGroup &) = default;

private:
  std::size_t rank_ = 0;
  IntVector torsion_;
};

FgAbGroup direct_sum(const FgAbGroup &a, const FgAbGroup &b);

} // namespace spectra
