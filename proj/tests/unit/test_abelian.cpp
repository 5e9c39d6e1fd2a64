#include <catch2/catch_amalgamated.hpp>

#include "spectra/abelian.hpp"
#include "spectra/oracles.hpp"
#include "spectra/random.hpp"

using namespace spectra;

namespace {

IntVector ints(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }
FgAbGroup Z(std::size_t r = 1) { return FgAbGroup::free(r); }
FgAbGroup C(long n) { return FgAbGroup::cyclic(n); }

} // namespace

TEST_CASE("canonical forms", "[groups]") {
  CHECK(from_presentation(IntMatrix{{2, 1}, {0, 3}}) == C(6));
  CHECK(from_presentation(IntMatrix(2, 0)) == Z(2));
  CHECK(from_presentation(IntMatrix{{1}}).is_trivial());
  CHECK(FgAbGroup::from_cyclic_orders(0, ints({4, 6, 0})) == FgAbGroup(1, ints({2, 12})));
  CHECK(FgAbGroup(1, ints({2, 12})).to_string() == "Z + Z/2 + Z/12");
  CHECK_THROWS_AS(FgAbGroup(0, ints({4, 6})), SpectraError);
  CHECK_THROWS_AS(FgAbGroup(0, ints({1})), SpectraError);
}

TEST_CASE("bifunctor tables", "[groups]") {
  CHECK(hom(C(4), C(6)) == C(2));
  CHECK(hom(Z(), C(6)) == C(6));
  CHECK(hom(C(5), Z()).is_trivial());
  CHECK(ext(C(4), C(6)) == C(2));
  CHECK(ext(Z(2), C(6)).is_trivial());
  CHECK(ext(C(6), Z()) == C(6));
  CHECK(tor(C(4), C(6)) == C(2));
  CHECK(tor(Z(3), C(6)).is_trivial());
  CHECK(tor(C(2), C(3)).is_trivial());
  CHECK(tensor(C(4), C(6)) == C(2));
  CHECK(tensor(Z(), FgAbGroup(1, ints({6}))) == FgAbGroup(1, ints({6})));
  CHECK(tensor(Z(2), C(3)) == FgAbGroup(0, ints({3, 3})));
}

TEST_CASE("bifunctor tables agree with resolutions", "[groups]") {
  Rng rng(21);
  for (int c = 0; c < 80; ++c) {
    FgAbGroup a = random_group(rng, 3, 12), b = random_group(rng, 3, 12);
    IntMatrix r = oracle::standard_resolution(a);
    // disguise the resolution with unimodular changes of basis
    r = random_unimodular(rng, r.rows()) * r * random_unimodular(rng, r.cols());
    CHECK(oracle::resolution_hom(r, b) == hom(a, b));
    CHECK(oracle::resolution_ext(r, b) == ext(a, b));
    CHECK(oracle::resolution_tor(r, b) == tor(a, b));
    CHECK(oracle::resolution_tensor(r, b) == tensor(a, b));
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tor(a, b) == tor(b, a));
  }
}

TEST_CASE("finite hom and ext have equal orders", "[groups]") {
  Rng rng(4);
  for (int c = 0; c < 40; ++c) {
    FgAbGroup a = random_group(rng, 2, 8, false), b = random_group(rng, 2, 8, false);
    CHECK(hom(a, b).order() == ext(a, b).order());
    CHECK(hom(a, b).order() == oracle::count_homs(a, b));
  }
  CHECK(oracle::count_homs(C(4), C(6)) == 2);
}

TEST_CASE("quotients and annihilators", "[groups]") {
  CHECK(mod_power(FgAbGroup(1, ints({12})), 4) == FgAbGroup(0, ints({4, 4})));
  CHECK(ann_power(Z(), 5).is_trivial());
  CHECK(ann_power(C(12), 4) == C(4));
  CHECK(oracle::count_killed(C(12), 4) == 4);
  Rng rng(8);
  for (int c = 0; c < 50; ++c) {
    FgAbGroup a = random_group(rng, 3, 20, false);
    Integer m = rng.uniform(1, 30);
    CHECK(mod_power(a, m).order() == ann_power(a, m).order());
    CHECK(ann_power(a, m).order() == oracle::count_killed(a, m));
  }
}

TEST_CASE("localization of groups", "[groups]") {
  CHECK(localize_group(C(12), PrimeSet::finite({3})) == C(4));
  CHECK(localize_group(Z(3), PrimeSet::finite({2, 7})) == Z(3));
  CHECK(localize_group(C(8), PrimeSet::finite({2})).is_trivial());
  CHECK(localize_group(C(12), PrimeSet::all_except({3})) == C(3));
  FgAbGroup a(2, ints({6, 60}));
  auto q = PrimeSet::finite({5});
  CHECK(localize_group(localize_group(a, q), q) == localize_group(a, q));
}

TEST_CASE("presentations carry an explicit isomorphism", "[groups]") {
  Rng rng(13);
  for (int c = 0; c < 60; ++c) {
    IntMatrix r = random_matrix(rng, rng.uniform(1, 4), rng.uniform(0, 4), -6, 6);
    Presentation p(r);
    CHECK(p.group() == from_presentation(r));
    // relations map to zero, generators map to unit vectors
    for (std::size_t j = 0; j < r.cols(); ++j)
      CHECK(p.to_canonical(r.col(j)) == IntVector(p.group().generator_count()));
    for (std::size_t k = 0; k < p.group().generator_count(); ++k) {
      IntVector e(p.group().generator_count());
      e[k] = 1;
      CHECK(p.to_canonical(p.generator(k)) == e);
    }
    IntMatrix u = random_unimodular(rng, r.rows()), v = random_unimodular(rng, r.cols());
    CHECK(from_presentation(u * r * v) == p.group());
  }
}

TEST_CASE("group maps", "[groups]") {
  CHECK_THROWS_AS(GroupMap(C(4), C(6), IntMatrix{{1}}), SpectraError);
  CHECK_THROWS_AS(GroupMap(C(4), Z(), IntMatrix{{1}}), SpectraError);
  GroupMap times_p = GroupMap::multiplication(Z(), 3);
  CHECK(kernel(times_p).source().is_trivial());
  CHECK(cokernel(GroupMap::multiplication(Z(), 6)).target() == C(6));
  GroupMap reduce(C(4), C(2), IntMatrix{{1}});
  CHECK(kernel(reduce).source() == C(2));
  CHECK(reduce.is_surjective());
  CHECK_FALSE(reduce.is_injective());
  CHECK_THROWS_AS(compose(reduce, reduce), SpectraError);

  GroupMap incl(C(2), C(4), IntMatrix{{2}});
  CHECK(is_exact(incl, reduce));
  CHECK(image(incl).source() == C(2));
  GroupMap h = lift_through(GroupMap(C(2), C(4), IntMatrix{{2}}), incl);
  CHECK(h.matrix()(0, 0) == 1);
  GroupMap d = descend_through(GroupMap(C(4), C(4), IntMatrix{{2}}), reduce);
  CHECK(d.source() == C(2));
  CHECK(d.matrix()(0, 0) == 2);
  CHECK(homology_at(GroupMap::zero(Z(), Z()), GroupMap::zero(Z(), C(3))) == Z());
}

TEST_CASE("kernels and cokernels of random maps", "[groups]") {
  Rng rng(17);
  for (int c = 0; c < 60; ++c) {
    FgAbGroup a = random_group(rng, 3, 12), b = random_group(rng, 3, 12);
    IntMatrix m = random_matrix(rng, b.generator_count(), a.generator_count(), -5, 5);
    // force validity: scale each column so the order condition holds
    IntVector ao = a.generator_orders(), bo = b.generator_orders();
    for (std::size_t j = 0; j < ao.size(); ++j)
      for (std::size_t i = 0; i < bo.size(); ++i) {
        if (ao[j] == 0) continue;
        if (bo[i] == 0) m(i, j) = 0;
        else m(i, j) *= exact_div(bo[i], gcd(bo[i], ao[j]));
      }
    GroupMap f(a, b, m);
    GroupMap k = kernel(f), q = cokernel(f);
    CHECK(compose(f, k).is_zero());
    CHECK(compose(q, f).is_zero());
    CHECK(k.is_injective());
    CHECK(q.is_surjective());
    CHECK(is_exact(k, f));
    CHECK(is_exact(f, q));
    if (a.is_finite() && b.is_finite())
      CHECK(k.source().order() * b.order() == a.order() * q.target().order());
  }
}

TEST_CASE("hom presentations have explicit generators", "[groups]") {
  HomPresentation hp(FgAbGroup(1, ints({4})), FgAbGroup(1, ints({6})));
  CHECK(hp.group() == hom(FgAbGroup(1, ints({4})), FgAbGroup(1, ints({6}))));
  for (std::size_t k = 0; k < hp.group().generator_count(); ++k) {
    IntVector e(hp.group().generator_count());
    e[k] = 1;
    CHECK(hp.coordinates(hp.generator(k)) == e);
  }
}
