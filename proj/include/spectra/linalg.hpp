#pragma once

#include "spectra/group.hpp"
#include "spectra/matrix.hpp"
#include "spectra/ring.hpp"

#include <optional>

namespace spectra {

/// U * A * V = D with U, V invertible over the base ring and D diagonal
/// with d_1 | d_2 | ... | d_r, r = rank. Over Z the transforms are integral
/// and unimodular; over localizations they may carry denominators that are
/// units of the ring. Over F_p every d_i is 1 and entries live in [0, p).
struct SmithForm {
  RatMatrix U;
  RatMatrix V;
  IntMatrix D;
  IntVector invariant_factors;

  std::size_t rank() const { return invariant_factors.size(); }
};

SmithForm smith_normal_form(const IntMatrix &a, const BaseRing &ring = BaseRing::integers());

/// Integral Smith form over Z with both transforms and their inverses.
struct IntegralSmith {
  IntMatrix U, U_inv, V, V_inv, D;
  std::size_t rank = 0;

  Integer diagonal(std::size_t i) const { return i < rank ? D(i, i) : Integer(0); }
};

IntegralSmith integral_smith(const IntMatrix &a);

std::size_t matrix_rank(const IntMatrix &a, const BaseRing &ring = BaseRing::integers());

/// Columns form a basis of ker(A) over the ring (integral representatives).
IntMatrix kernel_basis(const IntMatrix &a, const BaseRing &ring = BaseRing::integers());

/// Columns form a basis of the column span of A over Z.
IntMatrix image_basis(const IntMatrix &a);

/// coker(A) for A viewed as a map into ring^{rows(A)}. Invariant factors are
/// normalized associates; units are dropped.
FgAbGroup cokernel_invariants(const IntMatrix &a, const BaseRing &ring = BaseRing::integers());

/// Some x with A x = b over the ring, or nullopt. Throws on shape mismatch.
std::optional<RatVector> solve(const IntMatrix &a, const RatVector &b,
                               const BaseRing &ring = BaseRing::integers());

/// Integral solve over Z.
std::optional<IntVector> solve_integral(const IntMatrix &a, const IntVector &b);
/// Integral solve against a precomputed Smith form of A.
std::optional<IntVector> solve_integral(const IntegralSmith &s, const IntVector &b);

/// Reduces every entry into [0, p).
IntMatrix reduce_mod(const IntMatrix &a, const Integer &p);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer determinant(const IntMatrix &a);

} // namespace spectra
