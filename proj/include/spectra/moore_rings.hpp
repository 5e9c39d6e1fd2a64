#pragma once

#include "spectra/arithmetic.hpp"

#include <string>

namespace spectra {

/// Degree <= N part of the divided-power ring spanned by t_r = t^r / m_r,
/// with t_r t_s = m_{r,s} t_{r+s}. Elements are coefficient vectors on t_0..t_N.
class TruncatedDpRing {
public:
  TruncatedDpRing(const PrimeSet &q, std::size_t n) : constants_(dp_constants(q, n)) {}

  std::size_t truncation() const { return constants_.truncation(); }
  const DpConstants &constants() const { return constants_; }

  /// Product with terms above degree N dropped.
  IntVector multiply(const IntVector &a, const IntVector &b) const;
  /// The ring map t_r -> 1/m_r into Z[Q^-1].
  Rational phi(const IntVector &a) const;
  IntVector basis(std::size_t r) const;

private:
  DpConstants constants_;
};

/// Columns x t_r = t_r - m_{1,r} t_{r+1} for r < N, where x = t_0 - t_1;
/// an (N+1) x N matrix presenting the degree <= N part of the ideal (x).
IntMatrix dp_relation_matrix(const PrimeSet &q, std::size_t n);

/// Result of a truncated quotient computation: the cokernel, its surviving
/// generator as a basis vector, and the image of that generator.
struct QuotientReport {
  IntMatrix relations;
  FgAbGroup cokernel;
  std::size_t generator_degree = 0;
  Rational generator_image;
};

/// coker(dp_relation_matrix) with the map t_r -> 1/m_r. Throws InvariantError
/// with a certificate unless the cokernel is Z generated by t_N with image 1/m_N.
QuotientReport dp_quotient(const PrimeSet &q, std::size_t n);

/// Truncation of t^r -> t^r - p t^{r+1}: cokernel Z generated by t^N, image p^-N
/// under t^r -> p^-r.
QuotientReport s_inv_p_quotient(std::uint64_t p, std::size_t n);

/// Truncated matrix of (truncated division) - p: t^0 -> -p t^0,
/// t^r -> t^{r-1} - p t^r. Its cokernel is Z/p^{N+1}, generated by t^N,
/// embedded in Z/p^inf by t^r -> p^{-1-r}. The image is recorded mod 1.
QuotientReport s_mod_p_inf_quotient(std::uint64_t p, std::size_t n);

/// Polynomial in t with integer coefficients, coefficient k on t^k.
class PolyModule {
public:
  PolyModule() = default;
  explicit PolyModule(IntVector coefficients);

  const IntVector &coefficients() const { return c_; }
  /// Highest index with a nonzero coefficient, or -1 for zero.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::string to_string() const;

  friend bool operator==(const PolyModule &, const PolyModule &) = default;

private:
  IntVector c_;  // trailing zeros trimmed
};

/// (f(t) - f(0)) / t.
PolyModule truncated_division(const PolyModule &f);
/// t f(t).
PolyModule multiply_by_t(const PolyModule &f);
/// Matrix of truncated division from degree <= N to degree <= N - 1.
IntMatrix truncated_division_matrix(std::size_t n);

} // namespace spectra
