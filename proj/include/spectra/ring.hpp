#pragma once

#include "spectra/integer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spectra {

/// A set of primes, either finite or the complement of a finite set.
/// The complement form describes the p-local case (all primes but p).
class PrimeSet {
public:
  PrimeSet() = default;

  static PrimeSet finite(std::vector<std::uint64_t> primes);
  static PrimeSet all_except(std::vector<std::uint64_t> primes);
  static PrimeSet empty() { return PrimeSet{}; }

  bool contains(std::uint64_t q) const;
  bool is_cofinite() const { return cofinite_; }
  bool is_empty() const { return !cofinite_ && listed_.empty(); }
  /// The listed primes: members when finite, non-members when cofinite.
  const std::vector<std::uint64_t> &listed() const { return listed_; }

  /// Largest divisor of |n| supported on primes of this set (n != 0).
  Integer factor_of(const Integer &n) const;
  /// |n| with every prime of this set removed (n != 0).
  Integer strip(const Integer &n) const { return abs(n) / factor_of(n); }
  /// True when every prime divisor of n lies in the set (n != 0).
  bool supports(const Integer &n) const { return factor_of(n) == abs(n); }

  std::string to_string() const;

  friend bool operator==(const PrimeSet &, const PrimeSet &) = default;

private:
  bool cofinite_ = false;
  std::vector<std::uint64_t> listed_;
};

/// Q-factor of n: the product of the Q-primary parts of n.
inline Integer q_factor(const Integer &n, const PrimeSet &q) {
  if (n <= 0) throw SpectraError("q_factor requires n >= 1");
  return q.factor_of(n);
}

/// Base PID of a chain complex or matrix computation.
class BaseRing {
public:
  enum class Kind { integers, inverted, local_at, field_mod };

  BaseRing() = default;
  static BaseRing integers() { return BaseRing{}; }
  static BaseRing inverted(std::vector<std::uint64_t> primes);
  static BaseRing inverted(const PrimeSet &primes);
  static BaseRing local_at(std::uint64_t p);
  static BaseRing field_mod(std::uint64_t p);

  Kind kind() const { return kind_; }
  /// Characteristic prime for field_mod, localizing prime for local_at.
  std::uint64_t prime() const { return p_; }
  /// Primes made invertible (empty for integers and field_mod).
  const PrimeSet &inverted_primes() const { return inverted_; }

  bool is_field() const { return kind_ == Kind::field_mod; }
  bool is_unit(const Integer &n) const;
  bool contains(const Rational &q) const;

  /// Positive associate of a nonzero element: strips units. Over a field
  /// every nonzero element normalizes to 1.
  Integer normalize(const Integer &n) const;
  /// The unit u with n = u * normalize(n).
  Rational unit_part(const Integer &n) const;

  /// True when this ring is a localization (or residue field) of `from`
  /// reachable by base change.
  bool is_base_change_of(const BaseRing &from) const;

  std::string to_string() const;

  friend bool operator==(const BaseRing &, const BaseRing &) = default;

private:
  Kind kind_ = Kind::integers;
  PrimeSet inverted_;
  std::uint64_t p_ = 0;
};

} // namespace spectra
