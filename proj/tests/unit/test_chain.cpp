#include <catch2/catch_amalgamated.hpp>

#include "spectra/cw.hpp"
#include "spectra/generators.hpp"

using namespace spectra;

namespace {

ChainComplex moore(long n) { return moore_complex(FgAbGroup::cyclic(n)); }

FgAbGroup Zn(long n) { return FgAbGroup::cyclic(n); }

ChainMap scalar_on_sphere(long k) {
  ChainComplex s = sphere(0);
  return ChainMap(s, s, {{0, IntMatrix{{k}}}});
}

bool les_exact(const ChainMap &f) {
  const int lo = std::min(f.source().bottom(), f.target().bottom()) - 1;
  const int hi = std::max(f.source().top(), f.target().top()) + 2;
  const ChainMap j = cone_inclusion(f);
  for (int n = lo; n <= hi; ++n) {
    GroupMap a = homology_map(f, n);
    GroupMap b = homology_map(j, n);
    GroupMap c = cone_boundary_map(f, n);
    GroupMap a1 = homology_map(f, n - 1);
    if (!is_exact(a, b) || !is_exact(b, c) || !is_exact(c, a1)) return false;
  }
  return true;
}

} // namespace

TEST_CASE("construction checks shapes and d o d", "[chain]") {
  CHECK_THROWS_AS(ChainComplex(BaseRing::integers(), 0, {1, 1}, {IntMatrix(), IntMatrix(2, 1)}), SpectraError);
  CHECK_THROWS_AS(ChainComplex(BaseRing::integers(), 0, {1, 1, 1}, {IntMatrix(), IntMatrix{{1}}, IntMatrix{{1}}}),
                  InvariantError);
  // over F_2, 2 * 1 = 0
  ChainComplex f2(BaseRing::field_mod(2), 0, {1, 1, 1}, {IntMatrix(), IntMatrix{{1}}, IntMatrix{{2}}});
  CHECK(f2.d(2) == IntMatrix{{0}});
  ChainComplex trimmed(BaseRing::integers(), -2, {0, 0, 1, 0}, {});
  CHECK(trimmed.bottom() == 0);
  CHECK(trimmed.top() == 0);
  CHECK(ChainComplex().is_zero());
  CHECK_THROWS_AS(ChainMap(sphere(0), sphere(0), {{0, IntMatrix(2, 1)}}), SpectraError);
  CHECK_THROWS_AS(ChainMap(moore(6), moore(6), {{0, IntMatrix{{1}}}}), InvariantError);
}

TEST_CASE("homology examples", "[chain]") {
  auto h = homology(moore(6));
  REQUIRE(h.size() == 1);
  CHECK(h.at(0) == Zn(6));
  CHECK(homology(ChainComplex()).empty());
  ChainComplex c = ChainComplex::from_maps(BaseRing::integers(), {{0, 2}, {1, 1}}, {{1, IntMatrix{{2}, {0}}}});
  CHECK(homology(c, 0) == FgAbGroup(1, {2}));
  CHECK(homology(c, 1).is_trivial());
  HomologyData d = homology_data(c, 0);
  CHECK(d.group == FgAbGroup(1, {2}));
  CHECK(d.class_of(IntVector{2, 0}) == IntVector{0, 0});
  CHECK_THROWS_AS(homology_data(c, 1).class_of(IntVector{1}), SpectraError);
}

TEST_CASE("shift, cone and fiber", "[chain]") {
  ChainComplex m = moore(6);
  CHECK(is_acyclic(cone(ChainMap::identity(m))));
  CHECK(cone(scalar_on_sphere(6)) == moore(6));
  ChainMap zero_in = ChainMap::zero(ChainComplex(), m);
  CHECK(fiber(zero_in) == shift(m, -1));
  ChainComplex s = shift(m, 3);
  CHECK(s.bottom() == 3);
  CHECK(s.d(4) == IntMatrix{{-6}});
  CHECK(homology(s, 3) == Zn(6));
  CHECK(les_exact(scalar_on_sphere(6)));
  CHECK(les_exact(scalar_on_sphere(0)));
}

TEST_CASE("tensor and Hom complexes", "[chain]") {
  ChainComplex t = tensor(moore(4), moore(6));
  CHECK(homology(t, 0) == Zn(2));
  CHECK(homology(t, 1) == Zn(2));
  CHECK(homology(t, 2).is_trivial());
  ChainComplex c = ChainComplex::from_maps(BaseRing::integers(), {{0, 2}, {1, 1}}, {{1, IntMatrix{{2}, {0}}}});
  CHECK(tensor(c, sphere(0)) == c);
  for (long p : {2, 3, 5}) {
    ChainComplex h = hom_complex(moore(p), moore(p));
    CHECK(h.bottom() == -1);
    CHECK(h.top() == 1);
    CHECK(homology(h, 0) == Zn(p));
    CHECK(homology(h, -1) == Zn(p));
    CHECK(homology(h, 1).is_trivial());
  }
  // a degree-0 cycle of the Hom complex is a chain map
  ChainComplex a = moore(6), b = moore(4);
  ChainComplex h = hom_complex(a, b);
  IntVector f = hom_element(a, b, 0, {{0, IntMatrix{{2}}}, {1, IntMatrix{{3}}}});
  CHECK((h.d(0) * f) == IntVector(h.rank(-1)));
  CHECK(hom_component(a, b, 0, f, 1) == IntMatrix{{3}});
  CHECK_NOTHROW(ChainMap(a, b, {{0, IntMatrix{{2}}}, {1, IntMatrix{{3}}}}));
}

TEST_CASE("Moore complexes", "[chain]") {
  CHECK(moore(5) == ChainComplex::from_maps(BaseRing::integers(), {{0, 1}, {1, 1}}, {{1, IntMatrix{{5}}}}));
  ChainComplex free = moore_complex(FgAbGroup::free(3));
  CHECK(free.bottom() == 0);
  CHECK(free.top() == 0);
  CHECK(free.rank(0) == 3);
  ChainComplex given = moore_complex(IntMatrix{{6}, {0}});
  CHECK(given.d(1) == IntMatrix{{6}, {0}});
  CHECK(homology(given, 0) == FgAbGroup(1, {6}));
  // standard generators put the free summand first
  CHECK(moore_complex(FgAbGroup(1, {6})).d(1) == IntMatrix{{0}, {6}});
  ChainComplex redundant = moore_complex(IntMatrix{{2, 4}, {0, 0}});
  CHECK(redundant.rank(1) == 1);
  CHECK(homology(redundant, 0) == FgAbGroup(1, {2}));
  CHECK(homology(redundant, 1).is_trivial());
}

TEST_CASE("base change", "[chain]") {
  ChainComplex m12 = moore(12);
  ChainComplex local = base_change(m12, BaseRing::inverted({3}));
  CHECK(homology(local, 0) == Zn(4));
  CHECK(base_change(m12, BaseRing::integers()) == m12);
  ChainComplex m8 = base_change(moore(8), BaseRing::inverted({2}));
  CHECK(is_acyclic(m8));
  auto h = contraction(m8);
  REQUIRE(h.has_value());
  CHECK(is_contraction(m8, *h));
  CHECK(h->at(0)(0, 0) == Rational(1, 8));
  CHECK_FALSE(contraction(moore(8)).has_value());
  CHECK_THROWS_AS(base_change(local, BaseRing::integers()), SpectraError);
}

TEST_CASE("mod p and completed homology", "[chain]") {
  CHECK(mod_p_homology(moore(6), 2) == std::map<int, std::size_t>{{0, 1}, {1, 1}});
  CHECK(mod_p_homology(sphere(0, 4), 3) == std::map<int, std::size_t>{{0, 4}});
  CHECK(mod_p_homology(moore(3), 2).empty());
  auto c = completed_homology(moore_complex(FgAbGroup(1, {12})), 2);
  REQUIRE(c.size() == 1);
  CHECK(c.at(0) == PadicModule(2, 1, {4}));
  CHECK(completed_homology(moore(3), 2).empty());
  auto same = completed_homology(moore(8), 2);
  CHECK(same.at(0) == PadicModule(2, 0, {8}));
  ChainComplex local = base_change(moore_complex(FgAbGroup(1, {12})), BaseRing::local_at(2));
  CHECK(completed_homology(local, 2).at(0) == PadicModule(2, 1, {4}));
}

TEST_CASE("homotopy classes", "[chain]") {
  ChainComplex c = ChainComplex::from_maps(BaseRing::integers(), {{0, 2}, {1, 1}}, {{1, IntMatrix{{2}, {0}}}});
  CHECK(homotopy_classes(sphere(0), c) == homology(c, 0));
  for (long p : {2, 3, 5, 7}) CHECK(homotopy_classes(moore(p), moore(p)) == Zn(p));
  CHECK(homotopy_classes(moore(2), moore(3)).is_trivial());
}

TEST_CASE("CW structures", "[chain][cw]") {
  SkeletalFiltration s = cw_structure(sphere(0));
  CHECK(s.cells() == std::map<int, std::size_t>{{0, 1}});
  SkeletalFiltration m = cw_structure(moore(6));
  CHECK(m.cells() == std::map<int, std::size_t>{{0, 1}, {1, 1}});
  CHECK(check_cw(moore(6), m).ok());
  ChainComplex two = moore_complex(FgAbGroup(0, {2, 4}));
  SkeletalFiltration t = cw_structure(two);
  CHECK(t.cells() == std::map<int, std::size_t>{{0, 2}, {1, 2}});
  CHECK(check_cw(two, t).ok());
  // a redundant presentation of Z/6 needs fewer cells than it has
  ChainComplex fat = ChainComplex::from_maps(BaseRing::integers(), {{0, 2}, {1, 2}},
                                             {{1, IntMatrix{{2, 0}, {0, 3}}}});
  SkeletalFiltration f = cw_structure(fat);
  CHECK(f.cells() == std::map<int, std::size_t>{{0, 1}, {1, 1}});
  CHECK(check_cw(fat, f).ok());
  SkeletalFiltration z = cw_structure(ChainComplex());
  CHECK(z.cells().empty());
  CHECK(check_cw(ChainComplex(), z).ok());
  // an acyclic complex needs no cells
  ChainComplex acyclic = ChainComplex::from_maps(BaseRing::integers(), {{2, 1}, {3, 1}}, {{3, IntMatrix{{1}}}});
  CHECK(cw_structure(acyclic).cells().empty());
}

TEST_CASE("finiteness report", "[chain][cw]") {
  FinitenessReport r = finiteness_report(moore(6), {2, 3});
  REQUIRE(r.primes.size() == 2);
  CHECK(r.primes[0].total_mod_p == 2);
  CHECK_FALSE(r.primes[0].annihilator.has_value());
  REQUIRE(r.model.has_value());
  CHECK(r.model->total_cells() == 2);
  FinitenessReport z = finiteness_report(ChainComplex(), {2});
  CHECK(z.primes[0].total_mod_p == 0);
  CHECK(z.primes[0].annihilator == Integer(1));
  FinitenessReport four = finiteness_report(moore(4), {2});
  CHECK(four.primes[0].annihilator == Integer(4));
}

TEST_CASE("p-finite models", "[chain][cw]") {
  PFiniteModel m = p_finite_model(moore(6), 2);
  CHECK(m.model == moore(2));
  CHECK(m.map.component(0) == IntMatrix{{3}});
  CHECK(m.map.component(1) == IntMatrix{{1}});
  for (unsigned k = 1; k <= 4; ++k) {
    ChainComplex c = moore(1L << k);
    PFiniteModel id = p_finite_model(c, 2);
    CHECK(id.model == c);
    CHECK(id.map.component(0) == IntMatrix{{1}});
    CHECK(id.map.component(1) == IntMatrix{{1}});
  }
  CHECK(p_finite_model(moore(15), 2).model.is_zero());
  ChainComplex mixed = moore_complex(FgAbGroup(2, {6, 36}));
  PFiniteModel mm = p_finite_model(mixed, 3);
  CHECK(homology(mm.model, 0) == FgAbGroup(2, {3, 9}));
  CHECK(completed_homology(mm.model, 3) == completed_homology(mixed, 3));
}

TEST_CASE("universal coefficients for maps out of Moore complexes", "[chain]") {
  for (long p : {2, 3}) {
    MooreMapsSequence s = moore_maps_sequence(Zn(p), moore(p), 0);
    CHECK(s.exact());
    CHECK(s.middle == Zn(p));
    CHECK(s.hom == Zn(p));
    CHECK(s.ext.is_trivial());
    MooreMapsSequence below = moore_maps_sequence(Zn(p), moore(p), -1);
    CHECK(below.exact());
    CHECK(below.ext == Zn(p));
    CHECK(below.middle == Zn(p));
  }
  MooreMapsSequence mixed = moore_maps_sequence(FgAbGroup(1, {4}), moore_complex(FgAbGroup(1, {6})), -1);
  CHECK(mixed.exact());
  CHECK(mixed.ext == ext(FgAbGroup(1, {4}), FgAbGroup(1, {6})));
}

TEST_CASE("random complexes have the homology of their pieces", "[chain][random]") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng(derive_seed(7, "pieces", i));
    GeneratedComplex g = random_complex(rng, PieceMix{-1, 2, 5, 12});
    CHECK(homology(g.complex) == g.expected_homology());
  }
}

TEST_CASE("random chain maps satisfy the long exact sequence", "[chain][random]") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng(derive_seed(7, "les", i));
    GeneratedComplex s = random_complex(rng, PieceMix{0, 2, 3, 8});
    GeneratedComplex t = random_complex(rng, PieceMix{0, 2, 3, 8});
    ChainMap f = random_chain_map(rng, s, t);
    CHECK(les_exact(f));
  }
}
