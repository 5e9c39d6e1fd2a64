#pragma once

#include "spectra/group.hpp"
#include "spectra/linalg.hpp"
#include "spectra/ring.hpp"

#include <optional>

namespace spectra {

/// Z^n / im(R) together with an explicit isomorphism onto its canonical
/// form. Ambient vectors map to canonical coordinates and back.
class Presentation {
public:
  Presentation() = default;
  explicit Presentation(IntMatrix relations);

  const FgAbGroup &group() const { return group_; }
  std::size_t ambient_rank() const { return relations_.rows(); }
  const IntMatrix &relations() const { return relations_; }

  /// Canonical coordinates of an ambient vector, torsion entries reduced.
  IntVector to_canonical(const IntVector &ambient) const;
  /// An ambient representative of the i-th standard generator.
  IntVector generator(std::size_t i) const { return from_canonical_.col(i); }
  /// Ambient representatives of all standard generators, as columns.
  const IntMatrix &generators() const { return from_canonical_; }

private:
  IntMatrix relations_;
  FgAbGroup group_;
  IntMatrix to_canonical_;
  IntMatrix from_canonical_;
};

FgAbGroup from_presentation(const IntMatrix &relations);

/// Reduces a coordinate vector against the orders of a group's standard
/// generators.
IntVector reduce_element(const FgAbGroup &g, IntVector x);

/// Homomorphism between groups in canonical form, acting on standard
/// generators: column j is the image of source generator j.
class GroupMap {
public:
  GroupMap() = default;
  /// Checks that the image of every generator of order d is killed by d,
  /// and reduces entries against the target orders.
  GroupMap(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static GroupMap identity(const FgAbGroup &a);
  static GroupMap zero(const FgAbGroup &source, const FgAbGroup &target);
  static GroupMap multiplication(const FgAbGroup &a, const Integer &m);

  const FgAbGroup &source() const { return source_; }
  const FgAbGroup &target() const { return target_; }
  const IntMatrix &matrix() const { return matrix_; }

  IntVector apply(const IntVector &x) const;
  /// Some x with f(x) = y, or nullopt when y is not in the image.
  std::optional<IntVector> preimage(const IntVector &y) const;

  bool is_zero() const { return matrix_.is_zero(); }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  friend bool operator==(const GroupMap &, const GroupMap &) = default;

private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// The map between canonical groups induced by an ambient matrix that sends
/// relations of `source` into relations of `target`.
GroupMap induced_map(const Presentation &source, const Presentation &target, const IntMatrix &ambient);

/// g o f; throws when target(f) != source(g).
GroupMap compose(const GroupMap &g, const GroupMap &f);

/// Inclusion of ker(f) into source(f).
GroupMap kernel(const GroupMap &f);
/// Projection of target(f) onto coker(f).
GroupMap cokernel(const GroupMap &f);
/// Inclusion of im(f) into target(f).
GroupMap image(const GroupMap &f);

/// Inclusion of the subgroup of `g` generated by the columns of `gens`.
GroupMap subgroup(const FgAbGroup &g, const IntMatrix &gens);

/// Factors f through a monomorphism: returns h with mono o h = f.
/// Throws if im(f) is not contained in im(mono).
GroupMap lift_through(const GroupMap &f, const GroupMap &mono);
/// Factors f through an epimorphism: returns h with h o epi = f.
/// Throws if f does not vanish on ker(epi).
GroupMap descend_through(const GroupMap &f, const GroupMap &epi);

/// ker(g) / im(f) for a composable pair with g o f = 0.
FgAbGroup homology_at(const GroupMap &f, const GroupMap &g);
bool is_exact(const GroupMap &f, const GroupMap &g);

/// Hom, Ext, Tor and tensor, computed additively from cyclic atoms.
FgAbGroup hom(const FgAbGroup &a, const FgAbGroup &b);
FgAbGroup ext(const FgAbGroup &a, const FgAbGroup &b);
FgAbGroup tor(const FgAbGroup &a, const FgAbGroup &b);
FgAbGroup tensor(const FgAbGroup &a, const FgAbGroup &b);

/// A / mA.
FgAbGroup mod_power(const FgAbGroup &a, const Integer &m);
/// A[m] = {a : ma = 0}.
FgAbGroup ann_power(const FgAbGroup &a, const Integer &m);

/// A[Q^-1] as a module over Z[Q^-1]: torsion factors lose their Q-part.
FgAbGroup localize_group(const FgAbGroup &a, const PrimeSet &q);

/// The p-primary part of the torsion subgroup.
IntVector p_primary_torsion(const FgAbGroup &a, std::uint64_t p);

/// Hom(A, B) with explicit generators: an element is a matrix acting on
/// standard generators, encoded by one coordinate per generator pair.
class HomPresentation {
public:
  HomPresentation(FgAbGroup source, FgAbGroup target);

  const FgAbGroup &group() const { return presentation_.group(); }
  /// Canonical coordinates of the homomorphism with the given matrix.
  IntVector coordinates(const IntMatrix &matrix) const;
  /// Matrix of the i-th standard generator of Hom(A, B).
  IntMatrix generator(std::size_t i) const;

private:
  FgAbGroup source_, target_;
  IntMatrix unit_;  // entry (i, j): generator of Hom(<a_j>, <b_i>), 0 if trivial
  Presentation presentation_;
};

} // namespace spectra
