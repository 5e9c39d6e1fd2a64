#pragma once

#include "spectra/chain.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spectra {

/// Cellular model F : K -> C of a complex over Z. K has |T_i| cells in
/// degree i; the i-skeleton X_i is K truncated to degrees <= i.
struct SkeletalFiltration {
  ChainComplex cells_complex;  // K
  ChainMap map;                // F, a quasi-isomorphism
  std::map<int, std::size_t> cells() const;
  std::size_t total_cells() const { return cells_complex.total_rank(); }
  /// X_i; zero below the first cell.
  ChainComplex skeleton(int i) const;
  /// X_{i-1} -> X_i.
  ChainMap structure_map(int i) const;
  /// cof(X_{i-1} -> X_i) -> free complex of rank |T_i| in degree i.
  ChainMap layer_witness(int i) const;
};

/// Attaches cells degree by degree: at step k the generators of H_k of
/// cone(K -> C) are lifted to cycles (psi, phi), and each becomes a cell e
/// with d e = -psi and F(e) = phi. Cell counts in the bottom degree are the
/// minimal generator count of the bottom homology. Base Z.
SkeletalFiltration cw_structure(const ChainComplex &c);

/// Outcome of checking a filtration against the CW axioms and the
/// consequences for complexes with degreewise f.g. homology.
struct CwCheck {
  bool zero_below = false;     // X_i = 0 below the bottom of C
  bool layers_free = false;    // each cof(X_{i-1} -> X_i) is free in degree i
  bool connectivity = false;   // H_j(C / X_i) = 0 for j <= i
  bool quasi_iso = false;      // K -> C is a quasi-isomorphism
  bool starts_at_connectivity = false;  // no cells below the first nonzero homology
  bool stops_at_free_top = false;       // no cells above a free top homology group
  bool finite = false;                  // finitely many cells in total
  bool minimal_bottom = false;          // bottom cell count = minimal generators of H_b
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

CwCheck check_cw(const ChainComplex &c, const SkeletalFiltration &f);

struct PrimeFiniteness {
  std::uint64_t p = 2;
  std::map<int, std::size_t> mod_p;   // dim H_i(C; F_p)
  std::size_t total_mod_p = 0;
  bool mod_p_finite = true;           // C/p has finite total homology
  /// Smallest p^n with p^n H_* = 0, or nullopt when none exists.
  std::optional<Integer> annihilator;
};

struct FinitenessReport {
  std::map<int, FgAbGroup> homology;
  bool homology_finitely_generated = true;
  /// Finite cell model witnessing finite generation (base Z only).
  std::optional<SkeletalFiltration> model;
  std::vector<PrimeFiniteness> primes;
};

FinitenessReport finiteness_report(const ChainComplex &c, const std::vector<std::uint64_t> &primes);

/// Finite complex C' = (+)_k Moore(Z^{r_k} + T_k) in degree k with a map
/// f : C' -> C inducing isomorphisms on mod-p homology, where r_k is the
/// rank of H_k and T_k its p-primary torsion. Base Z.
struct PFiniteModel {
  ChainComplex model;
  ChainMap map;
};

PFiniteModel p_finite_model(const ChainComplex &c, std::uint64_t p);

/// 0 -> Ext(A, H_{i+1} D) -> H_i Hom(SA, D) -> Hom(A, H_i D) -> 0 with the maps
/// built from cycle representatives. `exact` records the verification.
struct MooreMapsSequence {
  FgAbGroup ext, middle, hom;
  GroupMap into_middle, onto_hom;
  bool injective = false, exact_middle = false, surjective = false;
  bool exact() const { return injective && exact_middle && surjective; }
};

MooreMapsSequence moore_maps_sequence(const FgAbGroup &a, const ChainComplex &d, int i);

} // namespace spectra
