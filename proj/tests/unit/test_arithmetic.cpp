#include <catch2/catch_amalgamated.hpp>

#include "spectra/arithmetic.hpp"
#include "spectra/random.hpp"

using namespace spectra;

namespace {

IntVector ints(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }
CatalogueGroup cat(std::vector<Atom> atoms) { return CatalogueGroup(std::move(atoms)); }

std::vector<Atom> all_atoms(std::uint64_t p) {
  std::uint64_t q = p == 2 ? 3 : 2;
  return {Atom::Z(),         Atom::cyclic(12),  Atom::cyclic(Integer(static_cast<unsigned long>(p * p))),
          Atom::z_inv(p),    Atom::z_inv(q),    Atom::prufer(p),
          Atom::prufer(q),   Atom::Q(),         Atom::padic(p),
          Atom::padic(q)};
}

} // namespace

TEST_CASE("q-factors", "[functors]") {
  CHECK(q_factor(720, PrimeSet::finite({2, 3})) == 144);
  CHECK(q_factor(720, PrimeSet::empty()) == 1);
  CHECK(q_factor(8, PrimeSet::finite({2})) == 8);
  CHECK(q_factor(720, PrimeSet::all_except({2})) == 45);
  CHECK_THROWS_AS(q_factor(0, PrimeSet::finite({2})), SpectraError);
}

TEST_CASE("divided power constants", "[functors]") {
  DpConstants c = dp_constants(PrimeSet::finite({2}), 6);
  CHECK(c.m(4) == 8);
  CHECK(c.m(0) == 1);
  CHECK(c.m(1) == 1);
  CHECK(c.m(1, 1) == 2);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    std::vector<std::uint64_t> ps;
    for (int b = 0; b < 3; ++b)
      if (mask >> b & 1) ps.push_back(std::vector<std::uint64_t>{2, 3, 5}[b]);
    DpConstants d = dp_constants(PrimeSet::finite(ps), 60);
    for (std::size_t r = 0; r <= 60; ++r)
      for (std::size_t s = 0; r + s <= 60; ++s) REQUIRE(d.m(r + s) == d.m(r) * d.m(s) * d.m(r, s));
  }
}

TEST_CASE("completion atom table", "[functors]") {
  CHECK(l0(cat({Atom::cyclic(12)}), 2) == PadicModule(2, 0, ints({4})));
  CHECK(l1(cat({Atom::cyclic(12)}), 2).is_zero());
  CHECK(l0(cat({Atom::Z()}), 5) == PadicModule(5, 1, {}));
  CHECK(l1(cat({Atom::prufer(3)}), 3) == PadicModule(3, 1, {}));
  CHECK(l0(cat({Atom::prufer(3)}), 3).is_zero());
  CHECK(l0(cat({Atom::z_inv(2)}), 2).is_zero());
  CHECK(l0(cat({Atom::Q()}), 2).is_zero());
  CHECK(l0(FgAbGroup(2, ints({6, 12})), 3) == PadicModule(3, 2, ints({3, 3})));
  CHECK(PadicModule(2, 1, ints({4})).to_string() == "Z_2 + Z/4");
  CHECK_THROWS_AS(PadicModule(2, 0, ints({6})), SpectraError);
}

TEST_CASE("atom table agrees with inverse limits", "[functors]") {
  for (std::uint64_t p : {2, 3, 5})
    for (const auto &a : all_atoms(p)) {
      CAPTURE(p, a.to_string());
      CompletionOracle o = l0_l1_oracle(cat({a}), p, 12);
      REQUIRE(o.l0.conclusive);
      REQUIRE(o.l1.conclusive);
      CHECK(o.l0.limit == l0(cat({a}), p));
      CHECK(o.l1.limit == l1(cat({a}), p));
    }
  // a mixed group
  CatalogueGroup g = cat({Atom::Z(), Atom::prufer(2), Atom::cyclic(8), Atom::padic(2), Atom::Q()});
  CompletionOracle o = l0_l1_oracle(g, 2, 12);
  CHECK(o.l0.limit == l0(g, 2));
  CHECK(o.l1.limit == l1(g, 2));
  CHECK_THROWS_AS(l0_l1_oracle(g, 2, 1), SpectraError);
}

TEST_CASE("threads through the Prufer tower", "[functors]") {
  CompletionOracle o = l0_l1_oracle(cat({Atom::prufer(3)}), 3, 12);
  const Tower &t = o.annihilators;
  REQUIRE(t.levels.size() == 12);
  IntVector x = {Integer(1)};
  for (std::size_t e = 11; e-- > 0;) {
    x = t.transitions[e].apply(x);
    // the image of a generator is again a generator of Z/3^(e+1)
    CHECK(gcd(x[0], Integer(3)) == 1);
    CHECK(t.levels[e] == FgAbGroup::cyclic(pow_ui(Integer(3), e + 1)));
  }
}

TEST_CASE("six-term sequences", "[functors]") {
  // Z -p-> Z ->> Z/p
  for (std::uint64_t p : {2, 3, 5}) {
    Integer P(static_cast<unsigned long>(p));
    auto ses = SesOfGroups::finitely_generated(GroupMap::multiplication(FgAbGroup::free(1), P),
                                               GroupMap(FgAbGroup::free(1), FgAbGroup::cyclic(P), IntMatrix{{1}}));
    SixTermReport r = six_term(ses, p);
    CHECK(r.exact);
    CHECK(r.maps_available);
    CHECK(r.nodes[3] == PadicModule(p, 1, {}));
    CHECK(r.nodes[5] == PadicModule(p, 0, {P}));
    CHECK(r.maps[3] == IntMatrix{{static_cast<long>(p)}});

    // Z >-> Z[1/p] ->> Z/p^inf: the connecting map is an isomorphism
    auto cs = SesOfGroups::of_atoms(Atom::Z(), Atom::z_inv(p), Atom::prufer(p), 1, 1);
    SixTermReport c = six_term(cs, p, 6);
    CHECK(c.exact);
    CHECK(c.maps_available);
    CHECK(c.nodes[2] == PadicModule(p, 1, {}));
    CHECK(c.nodes[3] == PadicModule(p, 1, {}));
    CHECK(c.nodes[1].is_zero());
    CHECK(c.nodes[4].is_zero());
    for (const auto &lv : c.levels) CHECK(lv.maps[2].is_isomorphism());

    // Z/p >-> Z/p^inf -p->> Z/p^inf
    auto pr = SesOfGroups::of_atoms(Atom::cyclic(P), Atom::prufer(p), Atom::prufer(p), Rational(Integer(1), P), P);
    CHECK(six_term(pr, p).exact);

    // Z_p -p-> Z_p ->> Z/p
    auto zp = SesOfGroups::of_atoms(Atom::padic(p), Atom::padic(p), Atom::cyclic(P), P, 1);
    CHECK(six_term(zp, p).exact);
  }
  // degenerate: 0 >-> A ->> A
  FgAbGroup a(1, ints({6}));
  auto deg = SesOfGroups::finitely_generated(GroupMap::zero(FgAbGroup(), a), GroupMap::identity(a));
  CHECK(six_term(deg, 2).exact);

  CHECK_THROWS_AS(SesOfGroups::finitely_generated(GroupMap::multiplication(FgAbGroup::free(1), 2),
                                                  GroupMap(FgAbGroup::free(1), FgAbGroup::cyclic(4), IntMatrix{{1}})),
                  SpectraError);
  CHECK_THROWS_AS(SesOfGroups::of_atoms(Atom::Z(), Atom::z_inv(2), Atom::prufer(2), Rational(1, 3), 1), SpectraError);
  // composite is zero but the sequence is not exact at Z[1/2]
  CHECK_FALSE(six_term(SesOfGroups::of_atoms(Atom::Z(), Atom::z_inv(2), Atom::prufer(2), 1, 2), 2).exact);
}

TEST_CASE("six-term on random f.g. extensions", "[functors]") {
  Rng rng(31);
  for (int c = 0; c < 40; ++c) {
    // B = coker of a random relation matrix, A = a random subgroup
    FgAbGroup b = random_group(rng, 3, 24);
    if (b.is_trivial()) continue;
    IntMatrix gens = random_matrix(rng, b.generator_count(), rng.uniform(1, 3), -6, 6);
    GroupMap i = subgroup(b, gens);
    GroupMap q = cokernel(i);
    auto ses = SesOfGroups::finitely_generated(i, q);
    for (std::uint64_t p : {2, 3}) CHECK(six_term(ses, p, 3).exact);
  }
}

TEST_CASE("six-term without maps checks consistency", "[functors]") {
  auto ses = SesOfGroups::groups_only(cat({Atom::Z()}), cat({Atom::Q()}), cat({Atom::prufer(2), Atom::prufer(3)}));
  SixTermReport r = six_term(ses, 2);
  CHECK_FALSE(r.maps_available);
  CHECK(r.exact);
  auto bad = SesOfGroups::groups_only(cat({}), cat({Atom::Z()}), cat({}));
  CHECK_FALSE(six_term(bad, 2).exact);
}

TEST_CASE("locality and torsion predicates", "[functors]") {
  CHECK(uniform_q_torsion_witness(cat({Atom::cyclic(12)}), PrimeSet::finite({2, 3})) == Integer(12));
  CHECK(is_q_local(cat({Atom::cyclic(5)}), PrimeSet::finite({2})));
  CHECK_FALSE(is_q_local(cat({Atom::Z()}), PrimeSet::finite({2})));
  CHECK(is_q_local(cat({Atom::z_inv(2), Atom::Q()}), PrimeSet::finite({2})));
  CHECK(is_ext_p_complete(cat({Atom::cyclic(8)}), 2));
  CHECK(is_ext_p_complete(cat({Atom::padic(3), Atom::cyclic(9)}), 3));
  CHECK_FALSE(is_ext_p_complete(cat({Atom::Z()}), 2));
  CHECK_FALSE(is_ext_p_complete(cat({Atom::cyclic(6)}), 2));
  CHECK(is_q_torsion(cat({Atom::prufer(2)}), PrimeSet::finite({2})));
  CHECK_FALSE(is_uniformly_q_torsion(cat({Atom::prufer(2)}), PrimeSet::finite({2})));
  CHECK(is_q_local(cat({Atom::cyclic(9)}), PrimeSet::all_except({3})));
  for (unsigned long e = 1; e <= 4; ++e)
    for (std::uint64_t p : {2, 3, 5}) {
      Integer pe = pow_ui(Integer(static_cast<unsigned long>(p)), e);
      CHECK(is_ext_p_complete(cat({Atom::cyclic(pe), Atom::cyclic(pe)}), p));
    }
}

TEST_CASE("detecting epimorphisms mod p", "[functors]") {
  for (std::uint64_t p : {2, 3, 5}) {
    PadicModule zp(p, 1, {});
    long P = static_cast<long>(p);
    auto v = check_detect_epi(zp, zp, IntMatrix{{1}});
    CHECK((v.mod_p_surjective && v.surjective));
    v = check_detect_epi(zp, zp, IntMatrix{{P}});
    CHECK((!v.mod_p_surjective && !v.surjective));
    PadicModule t(p, 0, {Integer(P * P)});
    v = check_detect_epi(zp, t, IntMatrix{{1 + P}});
    CHECK((v.mod_p_surjective && v.surjective));
  }
  Rng rng(2);
  for (int c = 0; c < 100; ++c) {
    PadicModule a(3, rng.uniform(0, 2), {}), b = PadicModule::from_orders(3, rng.uniform(0, 2), {Integer(9)});
    IntMatrix m = random_matrix(rng, b.integral_model().generator_count(), a.integral_model().generator_count(), -4, 4);
    CHECK(check_detect_epi(a, b, m).implication_holds());
  }
}

TEST_CASE("quotients agree with those of the completion", "[functors]") {
  Rng rng(12);
  for (int c = 0; c < 60; ++c) {
    FgAbGroup a = random_group(rng, 4, 40);
    for (std::uint64_t p : {2, 3, 5})
      for (unsigned long e = 1; e <= 3; ++e) {
        Integer pe = pow_ui(Integer(static_cast<unsigned long>(p)), e);
        CHECK(mod_power(a, pe) == l0(a, p).mod_power(e));
        CHECK(ann_power(a, pe) == l0(a, p).ann_power(e));
      }
  }
}
