#pragma once

// Independent reference computations used to cross-check the main
// algorithms. Each one takes a different route to the same answer: minors
// instead of elimination, enumeration instead of normal forms, resolutions
// instead of atom tables.

#include "spectra/abelian.hpp"

namespace spectra::oracle {

/// Invariant factors from determinantal divisors: d_k / d_{k-1}, where d_k is
/// the gcd of all k x k minors. Only practical for small matrices.
IntVector determinantal_invariant_factors(const IntMatrix &a);

/// |(Z/N)^rows / im(A mod N)| by enumerating every combination of columns.
Integer quotient_order_mod(const IntMatrix &a, unsigned long n);

/// Elements of a finite group, as coordinate vectors on standard generators.
std::vector<IntVector> elements(const FgAbGroup &g);

/// Number of homomorphisms A -> B, counted by testing every assignment of
/// generator images. Finite groups only.
Integer count_homs(const FgAbGroup &a, const FgAbGroup &b);

/// Number of elements of A killed by m.
Integer count_killed(const FgAbGroup &a, const Integer &m);

/// Hom, Ext, Tor and tensor of A = coker(R) (R injective) with B, computed
/// from the resolution 0 -> Z^m -R-> Z^n -> A -> 0 using explicit maps.
FgAbGroup resolution_hom(const IntMatrix &r, const FgAbGroup &b);
FgAbGroup resolution_ext(const IntMatrix &r, const FgAbGroup &b);
FgAbGroup resolution_tor(const IntMatrix &r, const FgAbGroup &b);
FgAbGroup resolution_tensor(const IntMatrix &r, const FgAbGroup &b);

/// Injective relation matrix presenting A on its standard generators.
IntMatrix standard_resolution(const FgAbGroup &a);

} // namespace spectra::oracle
