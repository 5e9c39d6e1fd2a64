#pragma once

#include "spectra/arithmetic.hpp"

#include <map>
#include <optional>

namespace spectra {

/// Bounded complex of finitely generated free modules over a base PID.
/// d(n) maps degree n to degree n - 1 and has shape rank(n-1) x rank(n).
/// Over F_p the entries are kept reduced into [0, p).
class ChainComplex {
public:
  /// The zero complex over Z.
  ChainComplex() = default;
  /// ranks[k] is the rank in degree bottom + k; differentials[k] is
  /// d(bottom + k) for k >= 1 (differentials[0] is ignored and may be empty).
  /// Checks shapes and d o d = 0. Zero-rank degrees at either end are trimmed.
  ChainComplex(BaseRing base, int bottom, std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);
  static ChainComplex from_maps(BaseRing base, const std::map<int, std::size_t> &ranks,
                                const std::map<int, IntMatrix> &differentials);

  const BaseRing &base() const { return base_; }
  /// Lowest degree with nonzero rank (0 for the zero complex).
  int bottom() const { return bottom_; }
  /// Highest degree with nonzero rank (bottom - 1 for the zero complex).
  int top() const { return bottom_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  IntMatrix d(int n) const;
  bool is_zero() const { return ranks_.empty(); }
  std::size_t total_rank() const;

  friend bool operator==(const ChainComplex &, const ChainComplex &) = default;

private:
  BaseRing base_;
  int bottom_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> diffs_;  // diffs_[k] = d(bottom_ + k), diffs_[0] unused
};

/// Chain map given by one matrix per degree, shape target.rank(n) x source.rank(n).
class ChainMap {
public:
  ChainMap() = default;
  /// Missing degrees are zero. Checks shapes, bases and d f = f d.
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components);

  static ChainMap identity(const ChainComplex &c);
  static ChainMap zero(const ChainComplex &source, const ChainComplex &target);

  const ChainComplex &source() const { return source_; }
  const ChainComplex &target() const { return target_; }
  IntMatrix component(int n) const;

private:
  ChainComplex source_, target_;
  std::map<int, IntMatrix> components_;
};

ChainMap compose(const ChainMap &g, const ChainMap &f);

/// Homology group H_n over the base ring, in canonical form.
FgAbGroup homology(const ChainComplex &c, int n);
/// All nonzero homology groups.
std::map<int, FgAbGroup> homology(const ChainComplex &c);
bool is_acyclic(const ChainComplex &c);

/// H_n over Z with explicit cycles.
struct HomologyData {
  FgAbGroup group;
  IntMatrix cycles;        // basis of ker d_n, as columns in C_n
  IntMatrix cycle_coords;  // left inverse on cycles: z = cycles * (cycle_coords * z)
  Presentation presentation;
  /// Cycle representing the k-th standard generator of the group.
  IntVector generator(std::size_t k) const { return cycles * presentation.generator(k); }
  /// Canonical coordinates of the class of a cycle; throws if z is not a cycle.
  IntVector class_of(const IntVector &z) const;
};

HomologyData homology_data(const ChainComplex &c, int n);

/// The map induced on H_n (base Z).
GroupMap homology_map(const ChainMap &f, int n);

/// Suspension by k: (S^k C)_n = C_{n-k} with differential (-1)^k d.
ChainComplex shift(const ChainComplex &c, int k);
ChainMap shift(const ChainMap &f, int k);

/// Cone_n = S_{n-1} + T_n with d(a, b) = (-d a, f a + d b).
ChainComplex cone(const ChainMap &f);
/// T -> cone(f).
ChainMap cone_inclusion(const ChainMap &f);
/// The connecting map H_n(cone f) -> H_{n-1}(source), from the first component (base Z).
GroupMap cone_boundary_map(const ChainMap &f, int n);
ChainComplex fiber(const ChainMap &f);

/// Total tensor complex with d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy. The
/// basis of C_i (x) D_j is ordered a * rank(D_j) + b, blocks by increasing i.
ChainComplex tensor(const ChainComplex &c, const ChainComplex &d);

/// Hom complex, Hom_n = prod_i Hom(C_i, D_{i+n}), with d f = d f - (-1)^n f d.
/// Blocks by increasing i; within a block, entry (r, s) of the matrix has index r * rank(C_i) + s.
ChainComplex hom_complex(const ChainComplex &c, const ChainComplex &d);
/// Matrix C_i -> D_{i+n} stored in a degree-n element of hom_complex(c, d).
IntMatrix hom_component(const ChainComplex &c, const ChainComplex &d, int n, const IntVector &element, int i);
/// Degree-n element of hom_complex(c, d) assembled from components keyed by source degree.
IntVector hom_element(const ChainComplex &c, const ChainComplex &d, int n, const std::map<int, IntMatrix> &components);
/// H_0 of the Hom complex: chain homotopy classes of maps.
FgAbGroup homotopy_classes(const ChainComplex &c, const ChainComplex &d);

/// Two-term complex in degrees 1, 0 presenting A on its standard generators.
ChainComplex moore_complex(const FgAbGroup &a);
/// Complex presenting coker(R); a non-injective R is replaced by a basis of
/// its image so that the complex has homology only in degree 0.
ChainComplex moore_complex(const IntMatrix &relations);
/// Free module of the given rank in degree n.
ChainComplex sphere(int n, std::size_t rank = 1, const BaseRing &base = BaseRing::integers());

/// Same matrices over a localization or residue field of the base.
ChainComplex base_change(const ChainComplex &c, const BaseRing &ring);

/// dim H_n(C (x) F_p) for every degree with a nonzero value (base Z).
std::map<int, std::size_t> mod_p_homology(const ChainComplex &c, std::uint64_t p);
/// L0(H_n) for every degree with a nonzero value (base Z).
std::map<int, PadicModule> completed_homology(const ChainComplex &c, std::uint64_t p);

/// h_n : C_n -> C_{n+1} with d h + h d = 1, or nullopt if C is not contractible.
/// Entries lie in the base ring (integral over Z).
std::optional<std::map<int, RatMatrix>> contraction(const ChainComplex &c);
bool is_contraction(const ChainComplex &c, const std::map<int, RatMatrix> &h);

} // namespace spectra
