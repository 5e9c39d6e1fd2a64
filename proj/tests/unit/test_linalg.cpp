#include <catch2/catch_amalgamated.hpp>

#include "spectra/linalg.hpp"
#include "spectra/oracles.hpp"
#include "spectra/random.hpp"

using namespace spectra;

namespace {

IntVector ints(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }

bool divisor_chain(const IntVector &d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (!divides(d[i], d[i + 1])) return false;
  return true;
}

} // namespace

TEST_CASE("smith normal form of small matrices", "[linalg]") {
  CHECK(smith_normal_form(IntMatrix{{0}}).invariant_factors.empty());
  CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors == ints({1, 1, 1}));
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 6}}, BaseRing::inverted({3})).invariant_factors == ints({2, 2}));
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).invariant_factors == ints({2, 4}));
  CHECK(smith_normal_form(IntMatrix(0, 3)).invariant_factors.empty());
}

TEST_CASE("smith form certificate holds over every base ring", "[linalg]") {
  const std::vector<BaseRing> rings = {BaseRing::integers(), BaseRing::inverted({2, 3}), BaseRing::local_at(3),
                                       BaseRing::field_mod(5)};
  Rng rng(7);
  for (int c = 0; c < 60; ++c) {
    IntMatrix a = random_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 5), -9, 9);
    for (const auto &ring : rings) {
      SmithForm sf = smith_normal_form(a, ring);
      RatMatrix prod = sf.U * to_rational(a) * sf.V;
      if (ring.is_field()) {
        for (std::size_t i = 0; i < prod.rows(); ++i)
          for (std::size_t j = 0; j < prod.cols(); ++j) {
            Rational diff = prod(i, j) - Rational(sf.D(i, j));
            CHECK(mod_nonneg(diff.get_num(), 5) == 0);
          }
      } else {
        CHECK(prod == to_rational(sf.D));
      }
      CHECK(divisor_chain(sf.invariant_factors));
      for (const auto &d : sf.invariant_factors) CHECK(ring.normalize(d) == d);
    }
  }
}

TEST_CASE("integral smith transforms are unimodular inverses", "[linalg]") {
  Rng rng(11);
  for (int c = 0; c < 100; ++c) {
    IntMatrix a = random_matrix(rng, rng.uniform(0, 6), rng.uniform(0, 6), -9, 9);
    IntegralSmith s = integral_smith(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(s.U * s.U_inv == IntMatrix::identity(a.rows()));
    CHECK(s.V * s.V_inv == IntMatrix::identity(a.cols()));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    IntVector d;
    for (std::size_t i = 0; i < s.rank; ++i) d.push_back(s.D(i, i));
    CHECK(divisor_chain(d));
    CHECK(d == oracle::determinantal_invariant_factors(a));
  }
}

TEST_CASE("kernel bases", "[linalg]") {
  IntMatrix k = kernel_basis(IntMatrix{{1, 0}});
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == 0);
  CHECK(abs(k(1, 0)) == 1);

  k = kernel_basis(IntMatrix{{2, -2}});
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == k(1, 0));
  CHECK(abs(k(0, 0)) == 1);

  CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);

  Rng rng(3);
  for (int c = 0; c < 50; ++c) {
    IntMatrix a = random_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 6), -4, 4);
    IntMatrix kb = kernel_basis(a);
    CHECK((a * kb).is_zero());
    CHECK(matrix_rank(a) + kb.cols() == a.cols());
    CHECK(matrix_rank(kb) == kb.cols());
  }
}

TEST_CASE("cokernel invariants", "[linalg]") {
  CHECK(cokernel_invariants(IntMatrix{{6}}) == FgAbGroup::cyclic(6));
  CHECK(cokernel_invariants(IntMatrix{{2, 0}, {0, 0}}) == FgAbGroup(1, ints({2})));
  CHECK(cokernel_invariants(IntMatrix{{1}}).is_trivial());
  CHECK(cokernel_invariants(IntMatrix{{12}}, BaseRing::inverted({3})) == FgAbGroup::cyclic(4));
  CHECK(cokernel_invariants(IntMatrix{{12}}, BaseRing::local_at(3)) == FgAbGroup::cyclic(3));
  CHECK(cokernel_invariants(IntMatrix{{2, 0}, {0, 6}}, BaseRing::field_mod(3)) == FgAbGroup::free(1));
}

TEST_CASE("cokernel agrees with enumeration mod N", "[linalg]") {
  Rng rng(5);
  for (int c = 0; c < 60; ++c) {
    IntMatrix a = random_matrix(rng, rng.uniform(1, 3), rng.uniform(1, 3), -4, 4);
    FgAbGroup g = cokernel_invariants(a);
    for (unsigned long n = 2; n <= 9; ++n) CHECK(mod_power(g, n).order() == oracle::quotient_order_mod(a, n));
    if (a.rows() == a.cols() && determinant(a) != 0) CHECK(g.order() == abs(determinant(a)));
  }
}

TEST_CASE("localized invariant factors strip the inverted primes", "[linalg]") {
  Rng rng(9);
  const PrimeSet q = PrimeSet::finite({2, 5});
  for (int c = 0; c < 50; ++c) {
    IntMatrix a = random_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 5), -9, 9);
    CHECK(cokernel_invariants(a, BaseRing::inverted(q)) == localize_group(cokernel_invariants(a), q));
  }
}

TEST_CASE("solve over several rings", "[linalg]") {
  auto x = solve(IntMatrix{{2}}, RatVector{Rational(4)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK_FALSE(solve(IntMatrix{{2}}, RatVector{Rational(3)}));
  x = solve(IntMatrix{{2}}, RatVector{Rational(3)}, BaseRing::local_at(3));
  REQUIRE(x);
  CHECK((*x)[0] == Rational(3, 2));
  CHECK_THROWS_AS(solve(IntMatrix{{2}}, RatVector{Rational(1), Rational(2)}), SpectraError);
  CHECK_FALSE(solve(IntMatrix{{2}}, RatVector{Rational(1)}, BaseRing::inverted({3})));
  x = solve(IntMatrix{{2}}, RatVector{Rational(1)}, BaseRing::field_mod(7));
  REQUIRE(x);
  CHECK((*x)[0] == 4);
}

TEST_CASE("large entries do not overflow", "[linalg]") {
  Integer big = pow_ui(Integer(10), 40);
  IntMatrix a(2, 2);
  a(0, 0) = big;
  a(0, 1) = big + 1;
  a(1, 0) = big * 3;
  a(1, 1) = 7;
  IntegralSmith s = integral_smith(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.D(0, 0) * s.D(1, 1) == abs(determinant(a)));
}
