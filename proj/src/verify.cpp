#include "spectra/verify.hpp"

#include "spectra/generators.hpp"
#include "spectra/oracles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spectra::verify {

namespace {

using spectra::to_json;
using Outcome = std::optional<std::string>;

#define EXPECT(cond, msg)                                                                                              \
  do {                                                                                                                 \
    if (!(cond)) return std::string(msg);                                                                              \
  } while (0)

const std::vector<std::uint64_t> kPrimes = {2, 3, 5};

Integer big(std::uint64_t p) { return Integer(static_cast<unsigned long>(p)); }
Integer ipow(std::uint64_t p, unsigned long e) { return pow_ui(big(p), e); }

Json ints_json(const IntVector &v) {
  Json j = Json::array();
  for (const auto &x : v) j.push_back(to_json(x));
  return j;
}

template <class T> Json map_json(const std::map<int, T> &m) {
  Json j = Json::object();
  for (const auto &[k, v] : m) j[std::to_string(k)] = to_json(v);
  return j;
}

Json dims_json(const std::map<int, std::size_t> &m) {
  Json j = Json::object();
  for (const auto &[k, v] : m) j[std::to_string(k)] = v;
  return j;
}

std::vector<std::uint64_t> subset_of_primes(std::size_t mask) {
  std::vector<std::uint64_t> q;
  for (std::size_t b = 0; b < kPrimes.size(); ++b)
    if (mask >> b & 1) q.push_back(kPrimes[b]);
  return q;
}

std::vector<std::uint64_t> random_nonempty_primes(Rng &rng) {
  return subset_of_primes(static_cast<std::size_t>(rng.uniform(1, 7)));
}

std::uint64_t random_prime(Rng &rng) { return rng.pick(kPrimes); }

bool is_identity(const IntMatrix &m) { return m.rows() == m.cols() && m == IntMatrix::identity(m.rows()); }

/// Number of torsion factors divisible by p.
std::size_t p_torsion_count(const FgAbGroup &g, std::uint64_t p) {
  std::size_t n = 0;
  for (const auto &d : g.torsion())
    if (divides(big(p), d)) ++n;
  return n;
}

/// Random homomorphism A -> B on standard generators.
GroupMap random_group_map(Rng &rng, const FgAbGroup &a, const FgAbGroup &b) {
  IntVector src = a.generator_orders(), tgt = b.generator_orders();
  IntMatrix m(b.generator_count(), a.generator_count());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (std::size_t k = 0; k < tgt.size(); ++k) {
      Integer x = rng.uniform(-4, 4);
      if (src[j] == 0) {
        m(k, j) = x;
      } else if (tgt[k] != 0) {
        m(k, j) = x * (tgt[k] / gcd(src[j], tgt[k]));
      }
    }
  return GroupMap(a, b, m);
}

std::map<int, FgAbGroup> localize_all(const std::map<int, FgAbGroup> &h, const PrimeSet &q) {
  std::map<int, FgAbGroup> out;
  for (const auto &[n, g] : h) {
    FgAbGroup l = localize_group(g, q);
    if (!l.is_trivial()) out.emplace(n, l);
  }
  return out;
}

std::map<int, std::size_t> mod_p_from_integral(const std::map<int, FgAbGroup> &h, std::uint64_t p) {
  std::map<int, std::size_t> out;
  for (const auto &[n, g] : h) {
    out[n] += g.rank() + p_torsion_count(g, p);
    out[n + 1] += p_torsion_count(g, p);
  }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

bool d_squared_zero(const ChainComplex &c) {
  for (int n = c.bottom(); n < c.top(); ++n) {
    IntMatrix prod = c.d(n) * c.d(n + 1);
    if (c.base().is_field()) prod = reduce_mod(prod, big(c.base().prime()));
    if (!prod.is_zero()) return false;
  }
  return true;
}

/// Redraws until the complex is nonzero.
GeneratedComplex nonzero_complex(Rng &rng, const PieceMix &mix) {
  for (;;) {
    GeneratedComplex g = random_complex(rng, mix);
    if (!g.complex.is_zero()) return g;
  }
}

GeneratedComplex small_complex(Rng &rng, long max_order = 12) {
  return random_complex(rng, PieceMix{-1, 2, 4, max_order});
}

// ---------------------------------------------------------------- linalg

Outcome snf_case(Rng &rng, std::size_t, Json &cert) {
  IntMatrix a = random_matrix(rng, rng.uniform(1, 6), rng.uniform(1, 6), -9, 9);
  cert["matrix"] = to_json(a);
  IntegralSmith s = integral_smith(a);
  EXPECT(s.U * a * s.V == s.D, "U A V != D");
  EXPECT(is_identity(s.U * s.U_inv) && is_identity(s.V * s.V_inv), "transforms are not inverse pairs");
  EXPECT(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "transforms are not unimodular");
  IntVector factors;
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i != j) EXPECT(s.D(i, j) == 0, "D is not diagonal");
      else if (i >= s.rank) EXPECT(s.D(i, j) == 0, "nonzero diagonal entry beyond the rank");
    }
  for (std::size_t i = 0; i < s.rank; ++i) {
    EXPECT(s.D(i, i) > 0, "diagonal entry is not positive");
    if (i > 0) EXPECT(divides(s.D(i - 1, i - 1), s.D(i, i)), "diagonal is not a divisor chain");
    factors.push_back(s.D(i, i));
  }
  cert["factors"] = ints_json(factors);
  EXPECT(factors == oracle::determinantal_invariant_factors(a), "invariant factors differ from determinantal divisors");
  EXPECT(smith_normal_form(a).invariant_factors == factors, "smith_normal_form and integral_smith disagree");
  return std::nullopt;
}

Outcome cokernel_enumeration_case(Rng &rng, std::size_t, Json &cert) {
  std::size_t r = rng.uniform(1, 3), c = rng.uniform(1, 3);
  IntMatrix a = random_matrix(rng, r, c, -4, 4);
  cert["matrix"] = to_json(a);
  FgAbGroup g = cokernel_invariants(a);
  cert["cokernel"] = to_json(g);
  for (unsigned long n = 2; n <= 9; ++n)
    EXPECT(mod_power(g, n).order() == oracle::quotient_order_mod(a, n),
           "|coker / " + std::to_string(n) + "| differs from enumeration");
  if (r == c) {
    Integer det = abs(determinant(a));
    EXPECT(g.is_finite() == (det != 0), "finiteness of the cokernel disagrees with det != 0");
    if (det != 0) EXPECT(g.order() == det, "|coker| != |det|");
  }
  return std::nullopt;
}

Outcome kernel_case(Rng &rng, std::size_t, Json &cert) {
  std::size_t r = rng.uniform(1, 6), c = rng.uniform(1, 6), k = rng.uniform(1, 6);
  IntMatrix a = random_matrix(rng, r, k, -3, 3) * random_matrix(rng, k, c, -3, 3);
  cert["matrix"] = to_json(a);
  IntMatrix ker = kernel_basis(a);
  EXPECT((a * ker).is_zero(), "kernel basis is not in the kernel");
  EXPECT(ker.cols() + matrix_rank(a) == c, "rank + nullity != columns");
  EXPECT(ker.cols() == 0 || cokernel_invariants(ker).is_free(), "kernel basis is not saturated");
  return std::nullopt;
}

Outcome base_change_case(Rng &rng, std::size_t, Json &cert) {
  IntMatrix a = random_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 5), -12, 12);
  std::vector<std::uint64_t> q = random_nonempty_primes(rng);
  std::uint64_t p = random_prime(rng);
  cert["matrix"] = to_json(a);
  cert["Q"] = q;
  cert["p"] = p;
  FgAbGroup g = cokernel_invariants(a);
  EXPECT(cokernel_invariants(a, BaseRing::inverted(q)) == localize_group(g, PrimeSet::finite(q)),
         "cokernel over Z[1/Q] differs from the localized cokernel");
  FgAbGroup local = cokernel_invariants(a, BaseRing::local_at(p));
  EXPECT(local == localize_group(g, PrimeSet::all_except({p})), "cokernel over Z_(p) differs");
  EXPECT(cokernel_invariants(a, BaseRing::field_mod(p)).rank() == g.rank() + p_torsion_count(g, p),
         "cokernel over F_p has the wrong dimension");
  return std::nullopt;
}

// ---------------------------------------------------------------- groups

Outcome canonical_form_case(Rng &rng, std::size_t, Json &cert) {
  std::size_t n = rng.uniform(1, 4), m = rng.uniform(1, 4);
  IntMatrix r = random_matrix(rng, n, m, -6, 6);
  IntMatrix u = random_unimodular(rng, n), v = random_unimodular(rng, m);
  cert["relations"] = to_json(r);
  cert["U"] = to_json(u);
  cert["V"] = to_json(v);
  FgAbGroup g = from_presentation(r);
  EXPECT(from_presentation(u * r * v) == g, "canonical form changes under unimodular changes");
  EXPECT(cokernel_invariants(r) == g, "from_presentation and cokernel_invariants disagree");
  return std::nullopt;
}

Outcome bifunctor_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 3, 12), b = random_group(rng, 3, 12);
  cert["A"] = to_json(a);
  cert["B"] = to_json(b);
  EXPECT(tensor(a, b) == tensor(b, a), "tensor is not symmetric");
  EXPECT(tor(a, b) == tor(b, a), "tor is not symmetric");
  IntMatrix r = oracle::standard_resolution(a);
  EXPECT(hom(a, b) == oracle::resolution_hom(r, b), "hom differs from the resolution");
  EXPECT(ext(a, b) == oracle::resolution_ext(r, b), "ext differs from the resolution");
  EXPECT(tor(a, b) == oracle::resolution_tor(r, b), "tor differs from the resolution");
  EXPECT(tensor(a, b) == oracle::resolution_tensor(r, b), "tensor differs from the resolution");
  return std::nullopt;
}

Outcome hom_count_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 2, 8, false), b = random_group(rng, 2, 8, false);
  cert["A"] = to_json(a);
  cert["B"] = to_json(b);
  FgAbGroup h = hom(a, b);
  EXPECT(h.order() == oracle::count_homs(a, b), "|hom| differs from enumeration");
  EXPECT(ext(a, b).order() == h.order(), "|ext| != |hom| for finite groups");
  return std::nullopt;
}

FgAbGroup small_finite_group(Rng &rng) {
  for (;;) {
    FgAbGroup g = random_group(rng, 2, 8, false);
    if (g.order() <= 16) return g;
  }
}

/// Free abelian group on A x B modulo bilinearity in each variable, with
/// relations only for standard generators in the moving slot.
FgAbGroup bilinear_quotient(const FgAbGroup &a, const FgAbGroup &b) {
  std::vector<IntVector> ea = oracle::elements(a), eb = oracle::elements(b);
  std::map<IntVector, std::size_t> ia, ib;
  for (std::size_t i = 0; i < ea.size(); ++i) ia[ea[i]] = i;
  for (std::size_t i = 0; i < eb.size(); ++i) ib[eb[i]] = i;
  auto add = [](const FgAbGroup &g, IntVector x, const IntVector &y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return reduce_element(g, x);
  };
  auto unit = [](const FgAbGroup &g, std::size_t k) {
    IntVector e(g.generator_count());
    e[k] = 1;
    return reduce_element(g, e);
  };
  const std::size_t nb = eb.size();
  std::vector<std::vector<std::pair<std::size_t, long>>> cols;
  for (std::size_t k = 0; k < a.generator_count(); ++k) {
    IntVector g = unit(a, k);
    for (std::size_t x = 0; x < ea.size(); ++x)
      for (std::size_t y = 0; y < nb; ++y)
        cols.push_back({{ia.at(add(a, ea[x], g)) * nb + y, 1}, {x * nb + y, -1}, {ia.at(g) * nb + y, -1}});
  }
  for (std::size_t k = 0; k < b.generator_count(); ++k) {
    IntVector g = unit(b, k);
    for (std::size_t x = 0; x < ea.size(); ++x)
      for (std::size_t y = 0; y < nb; ++y)
        cols.push_back({{x * nb + ib.at(add(b, eb[y], g)), 1}, {x * nb + y, -1}, {x * nb + ib.at(g), -1}});
  }
  // (x, 0) = 0 and (0, y) = 0 (element 0 is listed first); implied by the above unless a group has no generators
  for (std::size_t x = 0; x < ea.size(); ++x) cols.push_back({{x * nb, 1}});
  for (std::size_t y = 0; y < nb; ++y) cols.push_back({{y, 1}});
  IntMatrix rel(ea.size() * nb, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto &[row, v] : cols[j]) rel(row, j) += v;
  return from_presentation(rel);
}

Outcome tensor_bilinear_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = small_finite_group(rng), b = small_finite_group(rng);
  cert["A"] = to_json(a);
  cert["B"] = to_json(b);
  FgAbGroup brute = bilinear_quotient(a, b);
  cert["bilinear_quotient"] = to_json(brute);
  EXPECT(tensor(a, b) == brute, "tensor differs from the bilinear quotient");
  EXPECT(tor(a, b).order() == brute.order(), "|tor| != |tensor| for finite groups");
  return std::nullopt;
}

Outcome mod_ann_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 4, 30, false);
  Integer m = rng.uniform(1, 12);
  cert["A"] = to_json(a);
  cert["m"] = to_json(m);
  EXPECT(mod_power(a, m).order() == ann_power(a, m).order(), "|A/m| != |A[m]|");
  EXPECT(ann_power(a, m).order() == oracle::count_killed(a, m), "|A[m]| differs from enumeration");
  return std::nullopt;
}

Outcome localize_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 4, 60);
  std::vector<std::uint64_t> q = random_nonempty_primes(rng);
  cert["A"] = to_json(a);
  cert["Q"] = q;
  PrimeSet qs = PrimeSet::finite(q);
  FgAbGroup l = localize_group(a, qs);
  EXPECT(localize_group(l, qs) == l, "localization is not idempotent");
  EXPECT(l.rank() == a.rank(), "localization changed the rank");
  for (const auto &d : l.torsion()) EXPECT(qs.strip(d) == d, "localized torsion has a Q-factor");
  return std::nullopt;
}

Outcome kernel_cokernel_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 3, 12), b = random_group(rng, 3, 12);
  GroupMap f = random_group_map(rng, a, b);
  cert["map"] = to_json(f);
  GroupMap k = kernel(f), c = cokernel(f);
  EXPECT(k.is_injective(), "kernel inclusion is not injective");
  EXPECT(c.is_surjective(), "cokernel projection is not surjective");
  EXPECT(is_exact(k, f), "not exact at the source");
  EXPECT(is_exact(f, c), "not exact at the target");
  return std::nullopt;
}

Outcome group_json_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 4, 1000), b = random_group(rng, 3, 30);
  GroupMap f = random_group_map(rng, a, b);
  cert["map"] = to_json(f);
  EXPECT(group_from_json(parse_json_text(dump(to_json(a)))) == a, "group does not round-trip");
  EXPECT(group_map_from_json(parse_json_text(dump(to_json(f)))) == f, "map does not round-trip");
  return std::nullopt;
}

// ---------------------------------------------------------------- functors

std::vector<Atom> table_atoms(std::uint64_t p) {
  std::uint64_t q = p == 2 ? 3 : 2;
  return {Atom::Z(),       Atom::cyclic(big(p)), Atom::cyclic(ipow(p, 3)), Atom::cyclic(big(p * q)),
          Atom::cyclic(big(q)), Atom::z_inv(p),   Atom::z_inv(q),           Atom::prufer(p),
          Atom::prufer(q),      Atom::Q(),        Atom::padic(p),           Atom::padic(q)};
}

constexpr std::size_t kTableAtoms = 12;

Outcome atom_table_case(Rng &, std::size_t index, Json &cert) {
  std::uint64_t p = kPrimes[index / kTableAtoms];
  CatalogueGroup a({table_atoms(p)[index % kTableAtoms]});
  cert["p"] = p;
  cert["group"] = to_json(a);
  CompletionOracle o = l0_l1_oracle(a, p, 12);
  EXPECT(o.l0.conclusive && o.l1.conclusive, "tower limits are inconclusive at depth 12");
  EXPECT(o.l0.limit == l0(a, p), "L0 differs from the limit of A/p^e: " + o.l0.limit.to_string());
  EXPECT(o.l1.limit == l1(a, p), "L1 differs from the limit of A[p^e]: " + o.l1.limit.to_string());
  return std::nullopt;
}

Outcome quotient_level_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 4, 40);
  std::uint64_t p = random_prime(rng);
  cert["A"] = to_json(a);
  cert["p"] = p;
  PadicModule c = l0(a, p);
  for (unsigned long e = 1; e <= 3; ++e) {
    Integer pe = ipow(p, e);
    EXPECT(mod_power(a, pe) == c.mod_power(e), "A/p^e differs from L0(A)/p^e at e = " + std::to_string(e));
    EXPECT(ann_power(a, pe) == c.ann_power(e), "A[p^e] differs from L0(A)[p^e] at e = " + std::to_string(e));
  }
  return std::nullopt;
}

Outcome six_term_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup b = random_group(rng, 3, 24);
  IntMatrix gens = random_matrix(rng, b.generator_count(), rng.uniform(1, 3), -6, 6);
  std::uint64_t p = random_prime(rng);
  cert["B"] = to_json(b);
  cert["subgroup_generators"] = to_json(gens);
  cert["p"] = p;
  GroupMap i = subgroup(b, gens);
  GroupMap q = cokernel(i);
  SixTermReport r = six_term(SesOfGroups::finitely_generated(i, q), p, 3);
  EXPECT(r.maps_available, "maps unavailable for a f.g. sequence");
  EXPECT(r.exact, "six-term sequence is not exact");
  return std::nullopt;
}

constexpr std::size_t kCatalogueSequences = 5;

Outcome six_term_catalogue_case(Rng &, std::size_t index, Json &cert) {
  std::uint64_t p = kPrimes[index / kCatalogueSequences];
  Integer P = big(p);
  cert["p"] = p;
  std::optional<SesOfGroups> ses;
  switch (index % kCatalogueSequences) {
  case 0: ses = SesOfGroups::of_atoms(Atom::Z(), Atom::z_inv(p), Atom::prufer(p), 1, 1); break;
  case 1: ses = SesOfGroups::of_atoms(Atom::cyclic(P), Atom::prufer(p), Atom::prufer(p), Rational(Integer(1), P), P); break;
  case 2: ses = SesOfGroups::of_atoms(Atom::padic(p), Atom::padic(p), Atom::cyclic(P), P, 1); break;
  case 3: ses = SesOfGroups::of_atoms(Atom::Z(), Atom::Z(), Atom::cyclic(P * P), P * P, 1); break;
  default:
    ses = SesOfGroups::groups_only(CatalogueGroup({Atom::Z()}), CatalogueGroup({Atom::Q()}),
                                   CatalogueGroup({Atom::prufer(2), Atom::prufer(3), Atom::prufer(5)}));
  }
  cert["A"] = to_json(ses->a());
  cert["B"] = to_json(ses->b());
  cert["C"] = to_json(ses->c());
  if (ses->atom_maps()) cert["scalars"] = {to_string(ses->scalars().first), to_string(ses->scalars().second)};
  SixTermReport r = six_term(*ses, p, 6);
  cert["report"] = to_json(r);
  EXPECT(r.exact, "six-term sequence is not exact");
  return std::nullopt;
}

/// A four-term exact sequence A -> B -> C -> D with A, D finite and
/// L1 B = 0: B = S + F + X, C = C' + X where S <= C' has finite index,
/// F = A is finite and X is a sum of atoms without L1.
Outcome four_term_case(Rng &rng, std::size_t, Json &cert) {
  std::uint64_t p = random_prime(rng);
  FgAbGroup c = random_group(rng, 3, 12);
  std::size_t extra = rng.uniform(0, 2);
  IntMatrix gens = random_matrix(rng, c.generator_count(), extra + c.rank(), -4, 4);
  IntVector orders = c.generator_orders();
  for (std::size_t k = 0; k < c.rank(); ++k) {
    for (std::size_t r = 0; r < gens.rows(); ++r) gens(r, extra + k) = 0;
    gens(k, extra + k) = rng.uniform(1, 4);
  }
  GroupMap s_incl = subgroup(c, gens);
  const FgAbGroup &s = s_incl.source();
  FgAbGroup f = random_group(rng, 2, 12, false);
  cert["p"] = p;
  cert["C_fg"] = to_json(c);
  cert["subgroup_generators"] = to_json(gens);
  cert["A"] = to_json(f);

  IntMatrix rs = oracle::standard_resolution(s), rf = oracle::standard_resolution(f), rc = oracle::standard_resolution(c);
  const std::size_t ns = s.generator_count(), nf = f.generator_count(), nc = c.generator_count();
  IntMatrix rb(ns + nf, rs.cols() + rf.cols());
  rb.set_block(0, 0, rs);
  rb.set_block(ns, rs.cols(), rf);
  Presentation pa(rf), pb(rb), pc(rc);
  IntMatrix rd(nc, rc.cols() + s_incl.matrix().cols());
  rd.set_block(0, 0, rc);
  rd.set_block(0, rc.cols(), s_incl.matrix());
  Presentation pd(rd);
  IntMatrix a_to_b(ns + nf, nf);
  a_to_b.set_block(ns, 0, IntMatrix::identity(nf));
  IntMatrix b_to_c(nc, ns + nf);
  b_to_c.set_block(0, 0, s_incl.matrix());
  GroupMap alpha = induced_map(pa, pb, a_to_b);
  GroupMap beta = induced_map(pb, pc, b_to_c);
  GroupMap gamma = induced_map(pc, pd, IntMatrix::identity(nc));
  EXPECT(pd.group().is_finite(), "generated D is not finite");
  EXPECT(is_exact(alpha, beta) && is_exact(beta, gamma), "generated four-term sequence is not exact");

  std::vector<Atom> extras;
  std::vector<Atom> pool = {Atom::z_inv(p), Atom::z_inv(p == 2 ? 3 : 2), Atom::Q(), Atom::padic(p)};
  for (const auto &atom : pool)
    if (rng.uniform(0, 2) == 0) extras.push_back(atom);
  auto with_extras = [&](const FgAbGroup &g) {
    std::vector<Atom> atoms = CatalogueGroup::from_group(g).atoms();
    atoms.insert(atoms.end(), extras.begin(), extras.end());
    return CatalogueGroup(atoms);
  };
  CatalogueGroup bg = with_extras(pb.group()), cg = with_extras(c);
  cert["B"] = to_json(bg);
  cert["C"] = to_json(cg);
  cert["D"] = to_json(pd.group());
  EXPECT(l1(bg, p).is_zero(), "generated B has L1 != 0");
  EXPECT(l1(cg, p).is_zero(), "L1 C != 0");
  CompletionOracle o = l0_l1_oracle(cg, p, 12);
  EXPECT(o.l0.conclusive && o.l1.conclusive, "tower limits of C are inconclusive");
  EXPECT(o.l1.limit.is_zero(), "the limit of C[p^e] is nonzero");
  EXPECT(o.l0.limit == l0(cg, p), "L0 C differs from the limit of C/p^e");
  return std::nullopt;
}

Outcome detect_epi_case(Rng &rng, std::size_t, Json &cert) {
  std::uint64_t p = random_prime(rng);
  PadicModule a(p, rng.uniform(0, 2), {});
  IntVector orders;
  for (long k = rng.uniform(0, 2); k > 0; --k) orders.push_back(ipow(p, rng.uniform(1, 3)));
  PadicModule b = PadicModule::from_orders(p, rng.uniform(0, 2), orders);
  IntMatrix m = random_matrix(rng, b.integral_model().generator_count(), a.integral_model().generator_count(), -4, 4);
  if (rng.coin() && m.rows() > 0 && m.rows() <= m.cols())
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += ipow(p, 2) + 1;  // often surjective
  cert["source"] = to_json(a);
  cert["target"] = to_json(b);
  cert["matrix"] = to_json(m);
  DetectEpiVerdict v = check_detect_epi(a, b, m);
  cert["mod_p_surjective"] = v.mod_p_surjective;
  cert["surjective"] = v.surjective;
  EXPECT(v.implication_holds(), "surjective mod p but not surjective");
  return std::nullopt;
}

Outcome uniform_torsion_case(Rng &rng, std::size_t, Json &cert) {
  std::uint64_t p = random_prime(rng);
  unsigned long e = rng.uniform(1, 4);
  std::vector<Atom> atoms;
  unsigned long top = 0;
  for (long k = rng.uniform(0, 4); k > 0; --k) {
    unsigned long a = rng.uniform(1, e);
    top = std::max(top, a);
    atoms.push_back(Atom::cyclic(ipow(p, a)));
  }
  CatalogueGroup g(atoms);
  cert["p"] = p;
  cert["group"] = to_json(g);
  EXPECT(is_ext_p_complete(g, p), "uniformly p-torsion group is not Ext-p-complete");
  EXPECT(uniform_q_torsion_witness(g, PrimeSet::finite({p})) == ipow(p, top), "wrong uniform torsion witness");
  EXPECT(l0(g, p).integral_model() == g.to_group(), "L0 of a p-torsion group is not the group");
  return std::nullopt;
}

// ---------------------------------------------------------------- moore-rings

constexpr std::size_t kDpTruncation = 40;

Outcome dp_quotient_case(Rng &, std::size_t index, Json &cert) {
  PrimeSet q = PrimeSet::finite(subset_of_primes(index / kDpTruncation));
  std::size_t n = index % kDpTruncation + 1;
  cert["Q"] = q.listed();
  cert["N"] = n;
  QuotientReport r = dp_quotient(q, n);
  cert["report"] = to_json(r);
  DpConstants c = dp_constants(q, n);
  EXPECT(r.cokernel == FgAbGroup::free(1), "quotient is not Z");
  EXPECT(r.generator_image == Rational(Integer(1), c.m(n)), "generator does not map to 1/m_N");
  EXPECT(divides(c.m(n - 1), c.m(n)), "m_{N-1} does not divide m_N");
  EXPECT(matrix_rank(dp_relation_matrix(q, n)) == n, "multiplication by x is not injective");
  return std::nullopt;
}

Outcome dp_constants_case(Rng &, std::size_t index, Json &cert) {
  PrimeSet q = PrimeSet::finite(subset_of_primes(index));
  cert["Q"] = q.listed();
  DpConstants d = dp_constants(q, 60);
  for (std::size_t r = 0; r <= 60; ++r)
    for (std::size_t s = 0; r + s <= 60; ++s)
      EXPECT(d.m(r + s) == d.m(r) * d.m(s) * d.m(r, s),
             "m_{r+s} != m_r m_s m_{r,s} at r = " + std::to_string(r) + ", s = " + std::to_string(s));
  return std::nullopt;
}

Outcome dp_ring_case(Rng &rng, std::size_t, Json &cert) {
  PrimeSet q = PrimeSet::finite(random_nonempty_primes(rng));
  TruncatedDpRing ring(q, 10);
  std::size_t r = rng.uniform(0, 3), s = rng.uniform(0, 3), u = rng.uniform(0, 3);
  cert["Q"] = q.listed();
  cert["degrees"] = {r, s, u};
  IntVector a = ring.basis(r), b = ring.basis(s), d = ring.basis(u);
  EXPECT(ring.multiply(ring.multiply(a, b), d) == ring.multiply(a, ring.multiply(b, d)), "product is not associative");
  EXPECT(ring.multiply(a, b) == ring.multiply(b, a), "product is not commutative");
  EXPECT(ring.phi(ring.multiply(a, b)) == ring.phi(a) * ring.phi(b), "phi is not multiplicative");
  IntVector x = ring.basis(0);
  x[1] = -1;
  EXPECT(ring.phi(x) == 0, "x = t_0 - t_1 does not map to zero");
  return std::nullopt;
}

constexpr std::size_t kPowerTruncation = 21;

Outcome p_power_quotient_case(Rng &, std::size_t index, Json &cert) {
  std::uint64_t p = kPrimes[index / kPowerTruncation];
  std::size_t n = index % kPowerTruncation;
  cert["p"] = p;
  cert["N"] = n;
  QuotientReport a = s_inv_p_quotient(p, n);
  EXPECT(a.cokernel == FgAbGroup::free(1), "Z[1/p] truncation is not Z");
  EXPECT(a.generator_image == Rational(Integer(1), ipow(p, n)), "Z[1/p] generator does not map to p^-N");
  QuotientReport b = s_mod_p_inf_quotient(p, n);
  EXPECT(b.cokernel == FgAbGroup::cyclic(ipow(p, n + 1)), "Z/p^inf truncation is not Z/p^(N+1)");
  EXPECT(matrix_rank(b.relations) == n + 1, "Z/p^inf relations are not injective");
  return std::nullopt;
}

Outcome truncated_division_case(Rng &, std::size_t index, Json &cert) {
  std::size_t n = index + 1;
  cert["N"] = n;
  IntMatrix k = kernel_basis(truncated_division_matrix(n));
  EXPECT(k.cols() == 1, "kernel of truncated division is not of rank one");
  EXPECT(abs(k(0, 0)) == 1, "kernel is not spanned by the constant 1");
  for (std::size_t i = 1; i <= n; ++i) EXPECT(k(i, 0) == 0, "kernel contains a nonconstant polynomial");
  return std::nullopt;
}

// ---------------------------------------------------------------- chain

Outcome pieces_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex g = random_complex(rng, PieceMix{-1, 2, 5, 12});
  cert["complex"] = to_json(g.complex);
  std::map<int, FgAbGroup> h = homology(g.complex);
  cert["homology"] = map_json(h);
  EXPECT(h == g.expected_homology(), "homology differs from the homology of the pieces");
  return std::nullopt;
}

Outcome d_squared_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex s = small_complex(rng, 9), t = small_complex(rng, 9);
  ChainMap f = random_chain_map(rng, s, t);
  cert["map"] = to_json(f);
  std::vector<BaseRing> rings = {BaseRing::inverted(random_nonempty_primes(rng)),
                                 BaseRing::local_at(random_prime(rng)), BaseRing::field_mod(random_prime(rng))};
  std::vector<std::pair<std::string, ChainComplex>> built = {
      {"shift", shift(s.complex, static_cast<int>(rng.uniform(-3, 3)))},
      {"cone", cone(f)},
      {"fiber", fiber(f)},
      {"tensor", tensor(s.complex, t.complex)},
      {"hom", hom_complex(s.complex, t.complex)}};
  for (const auto &r : rings) built.emplace_back("base_change " + r.to_string(), base_change(s.complex, r));
  for (const auto &[name, c] : built) EXPECT(d_squared_zero(c), name + " has d o d != 0");
  return std::nullopt;
}

Outcome les_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex s = random_complex(rng, PieceMix{0, 2, 3, 8}), t = random_complex(rng, PieceMix{0, 2, 3, 8});
  ChainMap f = random_chain_map(rng, s, t);
  cert["map"] = to_json(f);
  const int lo = std::min(f.source().bottom(), f.target().bottom()) - 1;
  const int hi = std::max(f.source().top(), f.target().top()) + 2;
  const ChainMap j = cone_inclusion(f);
  for (int n = lo; n <= hi; ++n) {
    GroupMap a = homology_map(f, n), b = homology_map(j, n), c = cone_boundary_map(f, n);
    GroupMap a1 = homology_map(f, n - 1);
    const std::string at = " in degree " + std::to_string(n);
    EXPECT(is_exact(a, b), "not exact at H(cone)" + at);
    EXPECT(is_exact(b, c), "not exact at H(source) after the boundary" + at);
    EXPECT(is_exact(c, a1), "not exact at H(source)" + at);
  }
  return std::nullopt;
}

Outcome kunneth_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 3, 12), b = random_group(rng, 3, 12);
  cert["A"] = to_json(a);
  cert["B"] = to_json(b);
  std::map<int, FgAbGroup> h = homology(tensor(moore_complex(a), moore_complex(b)));
  cert["homology"] = map_json(h);
  FgAbGroup t = tensor(a, b), r = tor(a, b);
  EXPECT(homology(tensor(moore_complex(a), moore_complex(b)), 0) == t, "H_0 != A (x) B");
  EXPECT(homology(tensor(moore_complex(a), moore_complex(b)), 1) == r, "H_1 != Tor(A, B)");
  for (const auto &[n, g] : h) EXPECT(n == 0 || n == 1, "homology outside degrees 0 and 1");
  bool moore = std::all_of(h.begin(), h.end(), [](const auto &kv) { return kv.first == 0; });
  EXPECT(moore == r.is_trivial(), "tensor is Moore exactly when Tor vanishes");
  return std::nullopt;
}

Outcome uct_case(Rng &rng, std::size_t, Json &cert) {
  FgAbGroup a = random_group(rng, 2, 9);
  GeneratedComplex d = nonzero_complex(rng, PieceMix{0, 2, 3, 9});
  int i = static_cast<int>(rng.uniform(d.complex.bottom() - 1, std::max(d.complex.top(), d.complex.bottom())));
  cert["A"] = to_json(a);
  cert["D"] = to_json(d.complex);
  cert["i"] = i;
  MooreMapsSequence s = moore_maps_sequence(a, d.complex, i);
  EXPECT(s.injective, "Ext(A, H_{i+1} D) -> H_i Hom(SA, D) is not injective");
  EXPECT(s.exact_middle, "not exact at H_i Hom(SA, D)");
  EXPECT(s.surjective, "H_i Hom(SA, D) -> Hom(A, H_i D) is not surjective");
  EXPECT(s.ext == ext(a, homology(d.complex, i + 1)), "left term differs from Ext(A, H_{i+1} D)");
  EXPECT(s.hom == hom(a, homology(d.complex, i)), "right term differs from Hom(A, H_i D)");
  EXPECT(s.middle == homology(hom_complex(moore_complex(a), d.complex), i), "middle term differs");
  return std::nullopt;
}

Outcome cw_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex g = random_complex(rng, PieceMix{-1, 2, 5, 12});
  cert["complex"] = to_json(g.complex);
  SkeletalFiltration s = cw_structure(g.complex);
  cert["cells"] = dims_json(s.cells());
  CwCheck c = check_cw(g.complex, s);
  if (!c.ok()) {
    std::string msg = "CW axioms fail:";
    for (const auto &f : c.failures) msg += " " + f + ";";
    return msg;
  }
  return std::nullopt;
}

Outcome localization_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex g = random_complex(rng, PieceMix{-1, 2, 5, 30});
  std::vector<std::uint64_t> q = random_nonempty_primes(rng);
  cert["complex"] = to_json(g.complex);
  cert["Q"] = q;
  ChainComplex l = base_change(g.complex, BaseRing::inverted(q));
  std::map<int, FgAbGroup> expected = localize_all(homology(g.complex), PrimeSet::finite(q));
  EXPECT(homology(l) == expected, "homology over Z[1/Q] differs from localized homology");
  EXPECT(expected == localize_all(g.expected_homology(), PrimeSet::finite(q)), "pieces disagree");
  return std::nullopt;
}

Outcome completion_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex g = random_complex(rng, PieceMix{-1, 2, 5, 36});
  std::uint64_t p = random_prime(rng);
  cert["complex"] = to_json(g.complex);
  cert["p"] = p;
  std::map<int, PadicModule> c = completed_homology(g.complex, p);
  cert["completed"] = map_json(c);
  std::map<int, PadicModule> expected;
  for (const auto &[n, h] : g.expected_homology()) {
    PadicModule m = l0(h, p);
    if (!m.is_zero()) expected.emplace(n, m);
  }
  EXPECT(c == expected, "completed homology differs from Z_p (x) H");
  EXPECT(completed_homology(base_change(g.complex, BaseRing::local_at(p)), p) == c,
         "homology over Z_(p) differs from completed homology");
  return std::nullopt;
}

Outcome mod_p_uct_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex g = random_complex(rng, PieceMix{-1, 2, 5, 36});
  std::uint64_t p = random_prime(rng);
  cert["complex"] = to_json(g.complex);
  cert["p"] = p;
  std::map<int, std::size_t> dims = mod_p_homology(g.complex, p);
  cert["mod_p"] = dims_json(dims);
  EXPECT(dims == mod_p_from_integral(homology(g.complex), p), "dim H(C; F_p) != dim H/p + dim H[p] shifted");
  std::map<int, std::size_t> field;
  ChainComplex f = base_change(g.complex, BaseRing::field_mod(p));
  for (int n = f.bottom(); n <= f.top(); ++n)
    if (std::size_t r = homology(f, n).rank()) field[n] = r;
  EXPECT(dims == field, "mod_p_homology differs from homology over F_p");
  return std::nullopt;
}

Outcome mod_p_from_completion_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex g = random_complex(rng, PieceMix{-1, 2, 5, 36});
  std::uint64_t p = random_prime(rng);
  cert["complex"] = to_json(g.complex);
  cert["p"] = p;
  std::map<int, std::size_t> from_completion;
  for (const auto &[n, m] : completed_homology(g.complex, p)) {
    from_completion[n] += m.rank() + m.torsion().size();
    from_completion[n + 1] += m.torsion().size();
  }
  std::erase_if(from_completion, [](const auto &kv) { return kv.second == 0; });
  EXPECT(mod_p_homology(g.complex, p) == from_completion, "C and its completion have different mod-p homology");
  return std::nullopt;
}

Outcome p_finite_model_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex g = nonzero_complex(rng, PieceMix{-1, 2, 4, 36});
  std::uint64_t p = random_prime(rng);
  cert["complex"] = to_json(g.complex);
  cert["p"] = p;
  PFiniteModel m = p_finite_model(g.complex, p);
  cert["model"] = to_json(m);
  EXPECT(mod_p_homology(cone(m.map), p).empty(), "the model map is not a mod-p equivalence");
  EXPECT(completed_homology(m.model, p) == completed_homology(g.complex, p), "completed homology changed");
  std::map<int, FgAbGroup> expected;
  for (const auto &[n, h] : homology(g.complex)) {
    FgAbGroup part = FgAbGroup::from_cyclic_orders(h.rank(), p_primary_torsion(h, p));
    if (!part.is_trivial()) expected.emplace(n, part);
  }
  EXPECT(homology(m.model) == expected, "model homology is not rank plus p-primary torsion");
  return std::nullopt;
}

Outcome p_finite_worked_case(Rng &, std::size_t, Json &cert) {
  ChainComplex c = moore_complex(FgAbGroup::cyclic(6));
  cert["complex"] = to_json(c);
  cert["p"] = 2;
  PFiniteModel m = p_finite_model(c, 2);
  cert["model"] = to_json(m);
  EXPECT(m.model == moore_complex(FgAbGroup::cyclic(2)), "model of Moore(Z/6) at 2 is not Moore(Z/2)");
  EXPECT(m.map.component(0) == IntMatrix{{3}} && m.map.component(1) == IntMatrix{{1}},
         "map is not 3 in degree 0 and 1 in degree 1");
  EXPECT(mod_p_homology(cone(m.map), 2).empty(), "map is not a mod-2 equivalence");
  return std::nullopt;
}

Outcome tensor_zp_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex c = nonzero_complex(rng, PieceMix{0, 1, 3, 9}), d = nonzero_complex(rng, PieceMix{0, 1, 3, 9});
  std::uint64_t p = random_prime(rng);
  cert["C"] = to_json(c.complex);
  cert["D"] = to_json(d.complex);
  cert["p"] = p;
  ChainComplex h = hom_complex(c.complex, d.complex);
  FgAbGroup classes = homotopy_classes(c.complex, d.complex);
  cert["homotopy_classes"] = to_json(classes);
  EXPECT(classes == homology(h, 0), "[C, D] differs from H_0 Hom(C, D)");
  std::map<int, PadicModule> local = completed_homology(base_change(h, BaseRing::local_at(p)), p);
  PadicModule rhs = local.count(0) ? local.at(0) : PadicModule::zero(p);
  EXPECT(l0(classes, p) == rhs, "Z_p (x) [C, D] differs from H_0 of Hom over Z_p");
  return std::nullopt;
}

Outcome spheres_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex g = nonzero_complex(rng, PieceMix{-1, 2, 4, 12});
  int n = static_cast<int>(rng.uniform(-2, 3));
  cert["complex"] = to_json(g.complex);
  cert["n"] = n;
  EXPECT(homotopy_classes(sphere(n), g.complex) == homology(g.complex, n), "[S^n, C] != H_n C");
  return std::nullopt;
}

bool integral(const std::map<int, RatMatrix> &h) {
  for (const auto &[n, m] : h)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j).get_den() != 1) return false;
  return true;
}

Outcome hurewicz_case(Rng &rng, std::size_t, Json &cert) {
  ChainComplex c;
  if (rng.coin()) {
    PieceMix mix{-1, 2, 5, 12};
    mix.free = mix.torsion = false;
    c = nonzero_complex(rng, mix).complex;
  } else {
    c = cone(ChainMap::identity(nonzero_complex(rng, PieceMix{-1, 2, 4, 12}).complex));
  }
  cert["complex"] = to_json(c);
  EXPECT(is_acyclic(c), "generated complex is not acyclic");
  auto h = contraction(c);
  EXPECT(h.has_value(), "acyclic complex has no contraction");
  EXPECT(is_contraction(c, *h), "d h + h d != 1");
  EXPECT(integral(*h), "contraction is not integral");
  return std::nullopt;
}

Outcome mod_p_contractible_case(Rng &rng, std::size_t, Json &cert) {
  std::uint64_t p = random_prime(rng);
  std::vector<CellPiece> pieces;
  for (long k = rng.uniform(0, 4); k > 0; --k) {
    int degree = static_cast<int>(rng.uniform(-1, 2));
    long kind = rng.uniform(0, 9);
    Integer order = 1;
    if (kind >= 5 && kind <= 7) {
      do order = rng.uniform(2, 20);
      while (divides(big(p), order));
    } else if (kind == 8) {
      order = ipow(p, rng.uniform(1, 2));
    } else if (kind == 9) {
      order = 0;
    }
    pieces.push_back({degree, order});
  }
  ChainComplex c = assemble_complex(rng, pieces).complex;
  cert["complex"] = to_json(c);
  cert["p"] = p;
  std::map<int, FgAbGroup> h = homology(c);
  bool p_torsion = std::all_of(h.begin(), h.end(), [&](const auto &kv) {
    const FgAbGroup &g = kv.second;
    return g.is_finite() && PrimeSet::finite({p}).supports(g.exponent());
  });
  bool hypotheses = p_torsion && mod_p_homology(c, p).empty();
  auto contr = contraction(c);
  cert["hypotheses"] = hypotheses;
  cert["contractible"] = contr.has_value();
  EXPECT(hypotheses == contr.has_value(), hypotheses ? "p-torsion and mod-p acyclic but not contractible"
                                                     : "contractible complex fails the hypotheses");
  if (contr) EXPECT(is_contraction(c, *contr), "d h + h d != 1");
  return std::nullopt;
}

Outcome complex_json_case(Rng &rng, std::size_t, Json &cert) {
  GeneratedComplex s = small_complex(rng), t = small_complex(rng);
  ChainMap f = random_chain_map(rng, s, t);
  cert["map"] = to_json(f);
  EXPECT(complex_from_json(parse_json_text(dump(to_json(s.complex)))) == s.complex, "complex does not round-trip");
  ChainMap g = chain_map_from_json(parse_json_text(dump(to_json(f))));
  EXPECT(g.source() == f.source() && g.target() == f.target(), "chain map ends do not round-trip");
  for (int n = f.source().bottom(); n <= f.source().top(); ++n)
    EXPECT(g.component(n) == f.component(n), "chain map does not round-trip");
  ChainComplex local = base_change(s.complex, BaseRing::inverted(random_nonempty_primes(rng)));
  EXPECT(complex_from_json(to_json(local)) == local, "localized complex does not round-trip");
  return std::nullopt;
}

std::vector<Check> build_registry() {
  std::vector<Check> r;
  auto random = [&](std::string suite, std::string name, std::size_t n, Outcome (*fn)(Rng &, std::size_t, Json &)) {
    r.push_back({std::move(suite), std::move(name), n, false, fn});
  };
  auto fixed = [&](std::string suite, std::string name, std::size_t n, Outcome (*fn)(Rng &, std::size_t, Json &)) {
    r.push_back({std::move(suite), std::move(name), n, true, fn});
  };
  random("linalg", "snf", 500, snf_case);
  random("linalg", "cokernel-enumeration", 500, cokernel_enumeration_case);
  random("linalg", "kernel", 200, kernel_case);
  random("linalg", "base-change", 200, base_change_case);

  random("groups", "canonical-form", 100, canonical_form_case);
  random("groups", "bifunctors", 100, bifunctor_case);
  random("groups", "hom-count", 100, hom_count_case);
  random("groups", "tensor-bilinear", 100, tensor_bilinear_case);
  random("groups", "mod-ann", 200, mod_ann_case);
  random("groups", "localize", 100, localize_case);
  random("groups", "kernel-cokernel", 100, kernel_cokernel_case);
  random("groups", "group-json", 100, group_json_case);

  fixed("functors", "atom-table", kPrimes.size() * kTableAtoms, atom_table_case);
  random("functors", "quotient-levels", 200, quotient_level_case);
  random("functors", "six-term", 200, six_term_case);
  fixed("functors", "six-term-catalogue", kPrimes.size() * kCatalogueSequences, six_term_catalogue_case);
  random("functors", "four-term", 100, four_term_case);
  random("functors", "detect-epi", 100, detect_epi_case);
  random("functors", "uniform-torsion", 100, uniform_torsion_case);

  fixed("moore-rings", "dp-quotient", 8 * kDpTruncation, dp_quotient_case);
  fixed("moore-rings", "dp-constants", 8, dp_constants_case);
  random("moore-rings", "dp-ring", 100, dp_ring_case);
  fixed("moore-rings", "p-power-quotients", kPrimes.size() * kPowerTruncation, p_power_quotient_case);
  fixed("moore-rings", "truncated-division", 20, truncated_division_case);

  random("chain", "pieces", 200, pieces_case);
  random("chain", "d-squared", 100, d_squared_case);
  random("chain", "les", 200, les_case);
  random("chain", "kunneth", 100, kunneth_case);
  random("chain", "uct", 100, uct_case);
  random("chain", "cw", 100, cw_case);
  random("chain", "localization", 200, localization_case);
  random("chain", "completion", 200, completion_case);
  random("chain", "mod-p-uct", 200, mod_p_uct_case);
  random("chain", "mod-p-from-completion", 200, mod_p_from_completion_case);
  random("chain", "p-finite-model", 100, p_finite_model_case);
  fixed("chain", "p-finite-worked", 1, p_finite_worked_case);
  random("chain", "tensor-zp", 100, tensor_zp_case);
  random("chain", "spheres", 100, spheres_case);
  random("chain", "hurewicz", 100, hurewicz_case);
  random("chain", "mod-p-contractible", 100, mod_p_contractible_case);
  random("chain", "complex-json", 100, complex_json_case);
  return r;
}

#undef EXPECT

} // namespace

const std::vector<Check> &registry() {
  static const std::vector<Check> checks = build_registry();
  return checks;
}

std::vector<std::string> suite_names() { return {"linalg", "groups", "functors", "moore-rings", "chain"}; }

CheckReport run_check(const Check &check, const Options &opts) {
  CheckReport rep{check.suite, check.name, check.default_cases, 0, std::nullopt};
  if (opts.cases && !check.enumerated) rep.cases = *opts.cases;
  for (std::size_t i = 0; i < rep.cases; ++i) {
    const std::uint64_t seed = derive_seed(opts.seed, check.name, i);
    Rng rng(seed);
    Json cert = Json::object();
    std::optional<std::string> failure;
    try {
      failure = check.run(rng, i, cert);
    } catch (const std::exception &e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      rep.failure = Failure{i, seed, *failure, std::move(cert)};
      break;
    }
    ++rep.passed;
  }
  return rep;
}

std::vector<CheckReport> run(const std::string &selector, const Options &opts) {
  std::vector<CheckReport> out;
  for (const auto &c : registry())
    if (selector == "all" || c.suite == selector || c.name == selector) out.push_back(run_check(c, opts));
  if (out.empty()) {
    std::string names;
    for (const auto &s : suite_names()) names += s + ", ";
    throw SchemaError("unknown suite or check '" + selector + "' (suites: " + names + "all)");
  }
  return out;
}

Json to_json(const std::vector<CheckReport> &reports, const Options &opts, const std::string &selector) {
  Json checks = Json::array();
  for (const auto &r : reports) {
    Json j = {{"suite", r.suite}, {"name", r.name}, {"cases", r.cases}, {"passed", r.passed}, {"ok", r.ok()}};
    if (r.failure)
      j["failure"] = {{"case", r.failure->index},
                      {"case_seed", std::to_string(r.failure->case_seed)},
                      {"message", r.failure->message},
                      {"certificate", r.failure->certificate}};
    else
      j["failure"] = nullptr;
    checks.push_back(std::move(j));
  }
  return {{"seed", opts.seed}, {"suite", selector}, {"ok", all_ok(reports)}, {"checks", std::move(checks)}};
}

std::string to_text(const std::vector<CheckReport> &reports) {
  std::ostringstream os;
  for (const auto &r : reports) {
    os << (r.ok() ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " " << r.passed << "/" << r.cases << "\n";
    if (r.failure) {
      os << "  case " << r.failure->index << " (seed " << r.failure->case_seed << "): " << r.failure->message << "\n";
      os << "  certificate: " << r.failure->certificate.dump() << "\n";
    }
  }
  return os.str();
}

} // namespace spectra::verify
