#include "spectra/cw.hpp"

#include <algorithm>

namespace spectra {

namespace {

void require_integers(const ChainComplex &c, const char *what) {
  if (c.base().kind() != BaseRing::Kind::integers)
    throw SpectraError(std::string(what) + " requires a complex over Z, got " + c.base().to_string());
}

ChainComplex truncate_above(const ChainComplex &c, int i) {
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (int n = c.bottom(); n <= std::min(i, c.top()); ++n) {
    ranks[n] = c.rank(n);
    diffs[n] = c.d(n);
  }
  return ChainComplex::from_maps(c.base(), ranks, diffs);
}

ChainMap restrict_source(const ChainMap &f, const ChainComplex &sub) {
  std::map<int, IntMatrix> comps;
  for (int n = sub.bottom(); n <= sub.top(); ++n) comps[n] = f.component(n);
  return ChainMap(sub, f.target(), std::move(comps));
}

} // namespace

std::map<int, std::size_t> SkeletalFiltration::cells() const {
  std::map<int, std::size_t> out;
  for (int n = cells_complex.bottom(); n <= cells_complex.top(); ++n)
    if (cells_complex.rank(n) > 0) out[n] = cells_complex.rank(n);
  return out;
}

ChainComplex SkeletalFiltration::skeleton(int i) const { return truncate_above(cells_complex, i); }

ChainMap SkeletalFiltration::structure_map(int i) const {
  ChainComplex lower = skeleton(i - 1);
  ChainComplex upper = skeleton(i);
  std::map<int, IntMatrix> comps;
  for (int n = lower.bottom(); n <= lower.top(); ++n) comps[n] = IntMatrix::identity(lower.rank(n));
  return ChainMap(std::move(lower), std::move(upper), std::move(comps));
}

ChainMap SkeletalFiltration::layer_witness(int i) const {
  ChainMap incl = structure_map(i);
  ChainComplex cof = cone(incl);
  const std::size_t t = cells_complex.rank(i);
  ChainComplex layer = sphere(i, t);
  std::map<int, IntMatrix> comps;
  if (t > 0) {
    IntMatrix proj(t, cof.rank(i));
    proj.set_block(0, incl.source().rank(i - 1), IntMatrix::identity(t));
    comps[i] = std::move(proj);
  }
  return ChainMap(std::move(cof), std::move(layer), std::move(comps));
}

SkeletalFiltration cw_structure(const ChainComplex &c) {
  require_integers(c, "cw_structure");
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs, comps;
  ChainComplex k;
  ChainMap f = ChainMap::zero(k, c);
  if (!c.is_zero()) {
    for (int n = c.bottom(); n <= c.top() + 1; ++n) {
      HomologyData h = homology_data(cone(f), n);
      const std::size_t g = h.group.generator_count();
      if (g == 0) continue;
      const std::size_t below = k.rank(n - 1);
      IntMatrix attach(below, g), image(c.rank(n), g);
      for (std::size_t j = 0; j < g; ++j) {
        IntVector y = h.generator(j);
        for (std::size_t r = 0; r < below; ++r) attach(r, j) = -y[r];
        for (std::size_t r = 0; r < c.rank(n); ++r) image(r, j) = y[below + r];
      }
      ranks[n] = g;
      diffs[n] = std::move(attach);
      comps[n] = std::move(image);
      k = ChainComplex::from_maps(BaseRing::integers(), ranks, diffs);
      f = ChainMap(k, c, comps);
    }
  }
  if (!is_acyclic(cone(f))) throw InvariantError("cw_structure: cell model is not a quasi-isomorphism");
  return SkeletalFiltration{std::move(k), std::move(f)};
}

CwCheck check_cw(const ChainComplex &c, const SkeletalFiltration &s) {
  CwCheck r;
  const ChainComplex &k = s.cells_complex;
  auto fail = [&](const std::string &msg) { r.failures.push_back(msg); };

  r.zero_below = c.is_zero() ? k.is_zero() : (k.is_zero() || k.bottom() >= c.bottom());
  if (!r.zero_below) fail("cells below the bottom degree of the complex");

  r.layers_free = true;
  for (int i = k.bottom(); i <= k.top(); ++i) {
    try {
      if (!is_acyclic(cone(s.layer_witness(i)))) {
        r.layers_free = false;
        fail("layer " + std::to_string(i) + " is not free in a single degree");
      }
    } catch (const std::exception &e) {
      r.layers_free = false;
      fail("layer " + std::to_string(i) + ": " + e.what());
    }
  }

  r.connectivity = true;
  for (int i = k.bottom() - 1; i <= k.top(); ++i) {
    ChainComplex quotient = cone(restrict_source(s.map, s.skeleton(i)));
    for (int j = std::min(quotient.bottom(), i); j <= i; ++j)
      if (!homology(quotient, j).is_trivial()) {
        r.connectivity = false;
        fail("H_" + std::to_string(j) + "(C/X_" + std::to_string(i) + ") != 0");
      }
  }

  r.quasi_iso = is_acyclic(cone(s.map));
  if (!r.quasi_iso) fail("cell model is not a quasi-isomorphism");

  const auto h = homology(c);
  const auto cells = s.cells();
  if (h.empty()) {
    r.starts_at_connectivity = r.stops_at_free_top = r.minimal_bottom = cells.empty();
    if (!cells.empty()) fail("cells attached to an acyclic complex");
  } else {
    const int b = h.begin()->first;
    const int t = h.rbegin()->first;
    r.starts_at_connectivity = cells.empty() || cells.begin()->first >= b;
    if (!r.starts_at_connectivity) fail("cells below the first nonzero homology degree");
    r.stops_at_free_top = !h.rbegin()->second.is_free() || cells.empty() || cells.rbegin()->first <= t;
    if (!r.stops_at_free_top) fail("cells above a free top homology group");
    auto it = cells.find(b);
    const std::size_t bottom_cells = it == cells.end() ? 0 : it->second;
    r.minimal_bottom = bottom_cells == h.begin()->second.generator_count();
    if (!r.minimal_bottom)
      fail("bottom degree has " + std::to_string(bottom_cells) + " cells, minimal count is " +
           std::to_string(h.begin()->second.generator_count()));
  }
  // every degree carries a finite cell set and the model is bounded
  r.finite = k.is_zero() || (k.bottom() >= c.bottom() && k.top() <= c.top() + 1);
  if (!r.finite) fail("cells outside the degree range of the complex");
  return r;
}

FinitenessReport finiteness_report(const ChainComplex &c, const std::vector<std::uint64_t> &primes) {
  FinitenessReport r;
  r.homology = homology(c);
  if (c.base().kind() == BaseRing::Kind::integers) r.model = cw_structure(c);
  for (std::uint64_t p : primes) {
    PrimeFiniteness pf;
    pf.p = p;
    if (BaseRing::field_mod(p).is_base_change_of(c.base())) {
      pf.mod_p = mod_p_homology(c, p);
      for (const auto &[n, dim] : pf.mod_p) pf.total_mod_p += dim;
    }
    bool p_torsion = true;
    Integer exponent = 1;
    for (const auto &[n, g] : r.homology) {
      if (g.rank() > 0) {
        p_torsion = false;
        break;
      }
      for (const auto &d : g.torsion()) {
        Integer q = d;
        const Integer pz(static_cast<unsigned long>(p));
        while (divides(pz, q)) q /= pz;
        if (q != 1) p_torsion = false;
        if (d > exponent) exponent = d;
      }
    }
    if (p_torsion) pf.annihilator = exponent;
    r.primes.push_back(std::move(pf));
  }
  return r;
}

PFiniteModel p_finite_model(const ChainComplex &c, std::uint64_t p) {
  require_integers(c, "p_finite_model");
  const Integer pz(static_cast<unsigned long>(p));
  struct Piece {
    int degree;
    IntVector bottom_image;  // f on the degree-k cell
    Integer order;           // p^a, or 0 for a free piece
    IntVector top_image;     // f on the degree-(k+1) cell
  };
  std::vector<Piece> pieces;
  for (int k = c.bottom(); k <= c.top(); ++k) {
    HomologyData h = homology_data(c, k);
    const FgAbGroup &g = h.group;
    for (std::size_t j = 0; j < g.rank(); ++j) pieces.push_back({k, h.generator(j), 0, {}});
    const IntMatrix up = c.d(k + 1);
    for (std::size_t t = 0; t < g.torsion().size(); ++t) {
      const Integer &d = g.torsion()[t];
      const unsigned long a = valuation(d, p);
      if (a == 0) continue;
      const Integer pa = pow_ui(pz, a);
      const IntVector z = h.generator(g.rank() + t);
      IntVector bottom = z;
      for (auto &x : bottom) x *= d / pa;
      IntVector dz = z;
      for (auto &x : dz) x *= d;
      auto w = solve_integral(up, dz);
      if (!w) throw InvariantError("p_finite_model: d times a torsion cycle is not a boundary");
      pieces.push_back({k, std::move(bottom), pa, std::move(*w)});
    }
  }
  // degree n basis: pieces with degree n (bottom cells), then torsion pieces with degree n - 1 (top cells)
  std::map<int, std::vector<std::size_t>> bottoms, tops;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bottoms[pieces[i].degree].push_back(i);
    if (pieces[i].order != 0) tops[pieces[i].degree + 1].push_back(i);
  }
  std::map<int, std::size_t> ranks;
  auto index = [&](int n, std::size_t piece, bool top) {
    const auto &b = bottoms[n];
    if (!top) return static_cast<std::size_t>(std::find(b.begin(), b.end(), piece) - b.begin());
    const auto &t = tops[n];
    return b.size() + static_cast<std::size_t>(std::find(t.begin(), t.end(), piece) - t.begin());
  };
  for (const auto &[n, v] : bottoms) ranks[n] += v.size();
  for (const auto &[n, v] : tops) ranks[n] += v.size();
  std::map<int, IntMatrix> diffs, comps;
  for (const auto &[n, r] : ranks) {
    comps[n] = IntMatrix(c.rank(n), r);
    if (ranks.count(n - 1)) diffs[n] = IntMatrix(ranks[n - 1], r);
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece &pc = pieces[i];
    comps[pc.degree].set_col(index(pc.degree, i, false), pc.bottom_image);
    if (pc.order == 0) continue;
    const std::size_t top = index(pc.degree + 1, i, true);
    comps[pc.degree + 1].set_col(top, pc.top_image);
    diffs[pc.degree + 1](index(pc.degree, i, false), top) = pc.order;
  }
  ChainComplex model = ChainComplex::from_maps(BaseRing::integers(), ranks, diffs);
  ChainMap f(model, c, std::move(comps));
  if (!mod_p_homology(cone(f), p).empty())
    throw InvariantError("p_finite_model: map is not a mod-" + std::to_string(p) + " homology isomorphism");
  return PFiniteModel{std::move(model), std::move(f)};
}

MooreMapsSequence moore_maps_sequence(const FgAbGroup &a, const ChainComplex &d, int i) {
  require_integers(d, "moore_maps_sequence");
  const ChainComplex sa = moore_complex(a);
  const ChainComplex hc = hom_complex(sa, d);
  const HomologyData mid = homology_data(hc, i);
  const HomologyData hi = homology_data(d, i);
  const HomologyData hi1 = homology_data(d, i + 1);
  const std::size_t n = a.generator_count();
  const std::size_t m = a.torsion().size();
  MooreMapsSequence s;
  s.middle = mid.group;

  // Hom side: restrict a cycle to the degree-0 cells and take classes
  HomPresentation hp(a, hi.group);
  s.hom = hp.group();
  IntMatrix onto(s.hom.generator_count(), s.middle.generator_count());
  for (std::size_t k = 0; k < onto.cols(); ++k) {
    IntMatrix phi0 = hom_component(sa, d, i, mid.generator(k), 0);
    IntMatrix classes(hi.group.generator_count(), n);
    for (std::size_t j = 0; j < n; ++j) classes.set_col(j, hi.class_of(phi0.col(j)));
    onto.set_col(k, hp.coordinates(classes));
  }
  s.onto_hom = GroupMap(s.middle, s.hom, std::move(onto));

  // Ext side: coker(Hom(Z^n, B) -> Hom(Z^m, B)) by precomposition with the relations
  const FgAbGroup &b = hi1.group;
  const std::size_t g = b.generator_count();
  const IntMatrix rel = sa.d(1);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t sidx = 0; sidx < g; ++sidx) {
      IntVector v(m * g);
      for (std::size_t t = 0; t < m; ++t) v[t * g + sidx] = rel(j, t);
      cols.push_back(std::move(v));
    }
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t u = 0; u < b.torsion().size(); ++u) {
      IntVector v(m * g);
      v[t * g + b.rank() + u] = b.torsion()[u];
      cols.push_back(std::move(v));
    }
  IntMatrix relations(m * g, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) relations.set_col(c, cols[c]);
  Presentation ext_pres(relations);
  s.ext = ext_pres.group();
  IntMatrix into(s.middle.generator_count(), s.ext.generator_count());
  for (std::size_t k = 0; k < into.cols(); ++k) {
    const IntVector amb = ext_pres.generator(k);
    IntMatrix phi1(d.rank(i + 1), m);
    for (std::size_t t = 0; t < m; ++t) {
      IntVector cyc(d.rank(i + 1));
      for (std::size_t sidx = 0; sidx < g; ++sidx) {
        if (amb[t * g + sidx] == 0) continue;
        const IntVector z = hi1.generator(sidx);
        for (std::size_t r = 0; r < cyc.size(); ++r) cyc[r] += amb[t * g + sidx] * z[r];
      }
      phi1.set_col(t, cyc);
    }
    into.set_col(k, mid.class_of(hom_element(sa, d, i, {{1, phi1}})));
  }
  s.into_middle = GroupMap(s.ext, s.middle, std::move(into));

  s.injective = s.into_middle.is_injective();
  s.exact_middle = is_exact(s.into_middle, s.onto_hom);
  s.surjective = s.onto_hom.is_surjective();
  return s;
}

} // namespace spectra
