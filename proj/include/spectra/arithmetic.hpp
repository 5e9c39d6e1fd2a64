#pragma once

#include "spectra/abelian.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace spectra {

/// m_r = (r!)_Q and m_{r,s} = (binom(r+s, r))_Q for r + s <= N.
class DpConstants {
public:
  DpConstants(PrimeSet q, std::size_t n);

  const PrimeSet &primes() const { return q_; }
  std::size_t truncation() const { return n_; }
  const Integer &m(std::size_t r) const { return m_.at(r); }
  const Integer &m(std::size_t r, std::size_t s) const;

private:
  PrimeSet q_;
  std::size_t n_;
  IntVector m_;
  std::vector<IntVector> mixed_;  // mixed_[r][s]
};

DpConstants dp_constants(const PrimeSet &q, std::size_t n);

/// One summand of a catalogue group.
struct Atom {
  enum class Kind { integers, cyclic, z_inv_p, prufer, rationals, padic };

  Kind kind = Kind::integers;
  Integer n = 0;        // order, for cyclic
  std::uint64_t p = 0;  // prime, for z_inv_p / prufer / padic

  static Atom Z() { return Atom{}; }
  static Atom cyclic(const Integer &n);
  static Atom z_inv(std::uint64_t p);
  static Atom prufer(std::uint64_t p);
  static Atom Q() { return Atom{Kind::rationals, 0, 0}; }
  static Atom padic(std::uint64_t p);

  bool finitely_generated() const { return kind == Kind::integers || kind == Kind::cyclic; }
  std::string to_string() const;

  friend bool operator==(const Atom &, const Atom &) = default;
};

/// Finite direct sum of atoms Z, Z/n, Z[1/p], Z/p^inf, Q, Z_p.
class CatalogueGroup {
public:
  CatalogueGroup() = default;
  explicit CatalogueGroup(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  static CatalogueGroup from_group(const FgAbGroup &g);

  const std::vector<Atom> &atoms() const { return atoms_; }
  bool finitely_generated() const;
  /// Canonical form; throws unless every atom is Z or Z/n.
  FgAbGroup to_group() const;
  std::string to_string() const;

  friend bool operator==(const CatalogueGroup &, const CatalogueGroup &) = default;

private:
  std::vector<Atom> atoms_;
};

/// Z_p^rank + T with T a finite p-group in invariant-factor form.
class PadicModule {
public:
  PadicModule() = default;
  PadicModule(std::uint64_t p, std::size_t rank, IntVector torsion);
  /// Accepts any p-power orders (1 dropped) and sorts them into a chain.
  static PadicModule from_orders(std::uint64_t p, std::size_t rank, const IntVector &orders);
  static PadicModule zero(std::uint64_t p) { return PadicModule(p, 0, {}); }

  std::uint64_t prime() const { return p_; }
  std::size_t rank() const { return rank_; }
  const IntVector &torsion() const { return torsion_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }

  /// Z^rank + T, whose p-completion is this module; maps between modules are
  /// represented by matrices between integral models.
  FgAbGroup integral_model() const { return FgAbGroup(rank_, torsion_); }
  /// M / p^e M as a finite group.
  FgAbGroup mod_power(unsigned long e) const;
  /// M[p^e] as a finite group.
  FgAbGroup ann_power(unsigned long e) const;

  std::string to_string() const;

  friend bool operator==(const PadicModule &, const PadicModule &) = default;

private:
  std::uint64_t p_ = 2;
  std::size_t rank_ = 0;
  IntVector torsion_;
};

PadicModule direct_sum(const PadicModule &a, const PadicModule &b);

/// Derived p-completion functors, by additivity over the atom table.
PadicModule l0(const CatalogueGroup &a, std::uint64_t p);
PadicModule l1(const CatalogueGroup &a, std::uint64_t p);
PadicModule l0(const FgAbGroup &a, std::uint64_t p);

/// Inverse system G_1 <- G_2 <- ... ; transitions[k] maps levels[k+1] to levels[k].
struct Tower {
  std::vector<FgAbGroup> levels;
  std::vector<GroupMap> transitions;
};

struct TowerLimit {
  bool conclusive = false;
  PadicModule limit;
  std::string note;
};

/// Inverse limit of a tower of finite p-groups, read off from its stable
/// images. Inconclusive when the shape has not settled by the last level.
TowerLimit tower_limit(const Tower &t, std::uint64_t p);

struct CompletionOracle {
  Tower quotients;     // A / p^e with reduction maps
  Tower annihilators;  // A[p^e] with multiplication by p
  TowerLimit l0;       // lim A / p^e  (lim^1 A[p^e] = 0: finite levels)
  TowerLimit l1;       // lim A[p^e]
};

/// Computes both towers to depth e_max (>= 2) directly from the atoms and
/// takes their limits, independently of the l0/l1 table.
CompletionOracle l0_l1_oracle(const CatalogueGroup &a, std::uint64_t p, unsigned e_max);

/// Short exact sequence A >-> B ->> C.
class SesOfGroups {
public:
  /// Explicit maps between f.g. groups; exactness is verified.
  static SesOfGroups finitely_generated(GroupMap i, GroupMap q);
  /// One atom per term with maps given by multiplication by rationals,
  /// e.g. Z >-> Z[1/p] ->> Z/p^inf with i = q = 1.
  static SesOfGroups of_atoms(Atom a, Atom b, Atom c, Rational i, Rational q);
  /// Groups only; six_term can then check consistency but not maps.
  static SesOfGroups groups_only(CatalogueGroup a, CatalogueGroup b, CatalogueGroup c);

  const CatalogueGroup &a() const { return a_; }
  const CatalogueGroup &b() const { return b_; }
  const CatalogueGroup &c() const { return c_; }
  const std::optional<GroupMap> &i() const { return i_; }
  const std::optional<GroupMap> &q() const { return q_; }
  bool atom_maps() const { return scalars_.has_value(); }
  const std::pair<Rational, Rational> &scalars() const { return *scalars_; }

private:
  CatalogueGroup a_, b_, c_;
  std::optional<GroupMap> i_, q_;
  std::optional<std::pair<Rational, Rational>> scalars_;
};

/// Level-e snake sequence 0 -> A[p^e] -> B[p^e] -> C[p^e] -> A/p^e -> B/p^e -> C/p^e -> 0.
struct LevelSequence {
  std::array<FgAbGroup, 6> groups;
  std::array<GroupMap, 5> maps;
  bool exact = false;
};

struct SixTermReport {
  std::uint64_t p = 2;
  /// L1A, L1B, L1C, L0A, L0B, L0C.
  std::array<PadicModule, 6> nodes;
  bool maps_available = false;
  bool exact = false;
  /// Maps between integral models of consecutive nodes, when available.
  std::vector<IntMatrix> maps;
  std::vector<LevelSequence> levels;
  std::vector<std::string> notes;
};

SixTermReport six_term(const SesOfGroups &ses, std::uint64_t p, unsigned levels = 4);

bool is_ext_p_complete(const CatalogueGroup &a, std::uint64_t p);
bool is_q_local(const CatalogueGroup &a, const PrimeSet &q);
bool is_q_torsion(const CatalogueGroup &a, const PrimeSet &q);
/// Some m supported on Q with mA = 0 (the least one), or nullopt.
std::optional<Integer> uniform_q_torsion_witness(const CatalogueGroup &a, const PrimeSet &q);
inline bool is_uniformly_q_torsion(const CatalogueGroup &a, const PrimeSet &q) {
  return uniform_q_torsion_witness(a, q).has_value();
}

struct DetectEpiVerdict {
  bool mod_p_surjective = false;
  bool surjective = false;
  bool implication_holds() const { return !mod_p_surjective || surjective; }
};

/// Map of Z_p-modules given by a matrix between integral models.
DetectEpiVerdict check_detect_epi(const PadicModule &source, const PadicModule &target, const IntMatrix &matrix);

/// True when Z_p (x) A = 0 for a f.g. group A: no free part, no p-torsion.
bool vanishes_after_completion(const FgAbGroup &a, std::uint64_t p);

} // namespace spectra
