#include <catch2/catch_amalgamated.hpp>

#include "spectra/moore_rings.hpp"
#include "spectra/random.hpp"

using namespace spectra;

namespace {

std::vector<PrimeSet> prime_subsets() {
  std::vector<PrimeSet> out;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::uint64_t> ps;
    for (int b = 0; b < 3; ++b)
      if (mask >> b & 1) ps.push_back(std::vector<std::uint64_t>{2, 3, 5}[b]);
    out.push_back(PrimeSet::finite(ps));
  }
  return out;
}

} // namespace

TEST_CASE("relation matrices of the divided power ring", "[moore-rings]") {
  CHECK(dp_relation_matrix(PrimeSet::finite({2}), 1) == IntMatrix{{1}, {-1}});
  CHECK(dp_relation_matrix(PrimeSet::empty(), 2) == IntMatrix{{1, 0}, {-1, 1}, {0, -1}});
  CHECK(dp_relation_matrix(PrimeSet::finite({3}), 1) == IntMatrix{{1}, {-1}});
  CHECK(dp_relation_matrix(PrimeSet::finite({2}), 2) == IntMatrix{{1, 0}, {-1, 1}, {0, -2}});
  CHECK_THROWS_AS(dp_relation_matrix(PrimeSet::finite({2}), 0), SpectraError);
}

TEST_CASE("divided power quotients are Z[1/Q]", "[moore-rings]") {
  QuotientReport r = dp_quotient(PrimeSet::finite({2}), 4);
  CHECK(r.cokernel == FgAbGroup::free(1));
  CHECK(r.generator_image == Rational(1, 8));
  CHECK(dp_quotient(PrimeSet::finite({2}), 1).generator_image == 1);
  CHECK(dp_quotient(PrimeSet::empty(), 7).generator_image == 1);
  for (const auto &q : prime_subsets()) {
    Rational prev = 1;
    for (std::size_t n = 1; n <= 40; ++n) {
      QuotientReport rep = dp_quotient(q, n);
      CHECK(rep.cokernel == FgAbGroup::free(1));
      CHECK(rep.generator_image == Rational(Integer(1), dp_constants(q, n).m(n)));
      // images increase along the colimit: the previous one is a multiple
      Rational ratio = prev / rep.generator_image;
      ratio.canonicalize();
      CHECK(ratio.get_den() == 1);
      prev = rep.generator_image;
      CHECK(matrix_rank(dp_relation_matrix(q, n)) == n);
    }
    // every prime of Q occurs in the denominators
    for (auto p : q.listed()) CHECK(valuation(dp_constants(q, 40).m(40), p) >= 1);
  }
}

TEST_CASE("the truncated divided power ring", "[moore-rings]") {
  TruncatedDpRing ring(PrimeSet::finite({2, 3}), 8);
  CHECK(ring.multiply(ring.basis(1), ring.basis(1)) == scaled(IntMatrix::column(ring.basis(2)), Integer(2)).col(0));
  Rng rng(1);
  for (int c = 0; c < 50; ++c) {
    std::size_t r = rng.uniform(0, 3), s = rng.uniform(0, 2), u = rng.uniform(0, 3);
    IntVector a = ring.basis(r), b = ring.basis(s), d = ring.basis(u);
    CHECK(ring.multiply(ring.multiply(a, b), d) == ring.multiply(a, ring.multiply(b, d)));
    CHECK(ring.phi(ring.multiply(a, b)) == ring.phi(a) * ring.phi(b));
  }
  // x = t_0 - t_1 maps to zero
  IntVector x = ring.basis(0);
  x[1] = -1;
  CHECK(ring.phi(x) == 0);
}

TEST_CASE("presentations of Z[1/p] and Z/p^inf", "[moore-rings]") {
  CHECK(s_inv_p_quotient(2, 0).generator_image == 1);
  CHECK(s_inv_p_quotient(2, 1).generator_image == Rational(1, 2));
  CHECK(s_inv_p_quotient(3, 2).generator_image == Rational(1, 9));
  CHECK(s_mod_p_inf_quotient(3, 0).cokernel == FgAbGroup::cyclic(3));
  CHECK(s_mod_p_inf_quotient(2, 1).relations == IntMatrix{{-2, 1}, {0, -2}});
  CHECK(s_mod_p_inf_quotient(2, 1).cokernel == FgAbGroup::cyclic(4));
  CHECK(s_mod_p_inf_quotient(2, 3).cokernel == FgAbGroup::cyclic(16));
  for (std::uint64_t p : {2, 3, 5})
    for (std::size_t n = 0; n <= 20; ++n) {
      Integer pn = pow_ui(Integer(static_cast<unsigned long>(p)), n);
      QuotientReport a = s_inv_p_quotient(p, n);
      CHECK(a.cokernel == FgAbGroup::free(1));
      CHECK(a.generator_image == Rational(Integer(1), pn));
      QuotientReport b = s_mod_p_inf_quotient(p, n);
      CHECK(b.cokernel == FgAbGroup::cyclic(pn * static_cast<unsigned long>(p)));
      CHECK(matrix_rank(b.relations) == n + 1);
    }
}

TEST_CASE("truncated division", "[moore-rings]") {
  using V = IntVector;
  CHECK(truncated_division(PolyModule(V{1, 2, 3})) == PolyModule(V{2, 3}));
  CHECK(truncated_division(PolyModule(V{7})) == PolyModule());
  CHECK(PolyModule(V{1, -2, 0, 1}).to_string() == "1 - 2t + t^3");
  Rng rng(6);
  for (int c = 0; c < 50; ++c) {
    PolyModule f(random_matrix(rng, 1, rng.uniform(0, 6), -9, 9).row(0));
    CHECK(truncated_division(multiply_by_t(f)) == f);
    IntVector g = f.coefficients();
    if (!g.empty()) g[0] = 0;
    CHECK(multiply_by_t(truncated_division(f)) == PolyModule(g));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    IntMatrix k = kernel_basis(truncated_division_matrix(n));
    REQUIRE(k.cols() == 1);
    CHECK(abs(k(0, 0)) == 1);
    for (std::size_t i = 1; i <= n; ++i) CHECK(k(i, 0) == 0);
  }
}
