#include <catch2/catch_amalgamated.hpp>

#include "spectra/generators.hpp"
#include "spectra/serialize.hpp"

using namespace spectra;

TEST_CASE("matrices use decimal strings", "[serialize]") {
  IntMatrix m{{1, -2}, {3, 4}};
  m(0, 0) = Integer("123456789012345678901234567890");
  Json j = to_json(m);
  CHECK(j[0][0] == "123456789012345678901234567890");
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(Json::parse("[[1, \"2\"]]")) == IntMatrix{{1, 2}});
  CHECK(matrix_from_json(Json::array(), "", 0, 3).cols() == 3);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1],[1,2]]")), SchemaError);
  CHECK_THROWS_WITH(matrix_from_json(Json::parse("[[1],[\"x\"]]"), "/m"), Catch::Matchers::ContainsSubstring("/m/1/0"));
}

TEST_CASE("rings round-trip and parse from specs", "[serialize]") {
  for (const BaseRing &r : {BaseRing::integers(), BaseRing::inverted({2, 3}), BaseRing::local_at(5),
                            BaseRing::field_mod(7)})
    CHECK(base_ring_from_json(to_json(r)) == r);
  CHECK(to_json(BaseRing::inverted({2})) == Json::parse(R"({"ring":"inverted","primes":[2]})"));
  CHECK(base_ring_from_spec("Z") == BaseRing::integers());
  CHECK(base_ring_from_spec("Z[1/2,3]") == BaseRing::inverted({2, 3}));
  CHECK(base_ring_from_spec("Z[1/2,1/5]") == BaseRing::inverted({2, 5}));
  CHECK(base_ring_from_spec("Z_(3)") == BaseRing::local_at(3));
  CHECK(base_ring_from_spec("F_2") == BaseRing::field_mod(2));
  CHECK_THROWS_AS(base_ring_from_spec("Z[1/4]"), SchemaError);
  CHECK_THROWS_AS(base_ring_from_spec("R"), SchemaError);
  CHECK_THROWS_AS(base_ring_from_json(Json::parse(R"({"ring":"mod","p":6})")), SchemaError);
}

TEST_CASE("groups, maps and catalogue groups round-trip", "[serialize]") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    FgAbGroup g = random_group(rng, 4, 30);
    CHECK(group_from_json(to_json(g)) == g);
    GroupMap m = GroupMap::multiplication(g, rng.uniform(-5, 5));
    CHECK(group_map_from_json(to_json(m)) == m);
  }
  CHECK(group_from_json(Json::parse(R"({"presentation":[["2","0"],["0","3"]]})")) == FgAbGroup::cyclic(6));
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"rank":0,"torsion":[4,2]})")), SchemaError);
  CHECK_THROWS_AS(group_map_from_json(Json::parse(
                      R"({"source":{"rank":0,"torsion":[2]},"target":{"rank":1,"torsion":[]},"matrix":[["1"]]})")),
                  SchemaError);
  CatalogueGroup c({Atom::Z(), Atom::cyclic(12), Atom::z_inv(2), Atom::prufer(2), Atom::Q(), Atom::padic(2)});
  Json cj = to_json(c);
  CHECK(cj == Json::parse(R"({"atoms":[{"t":"Z"},{"t":"cyclic","n":12},{"t":"z_inv_p","p":2},{"t":"prufer","p":2},
                              {"t":"Q"},{"t":"padic","p":2}]})"));
  CHECK(catalogue_from_json(cj) == c);
  PadicModule pm(3, 2, {3, 27});
  CHECK(padic_from_json(to_json(pm)) == pm);
}

TEST_CASE("complexes and chain maps round-trip", "[serialize]") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng(derive_seed(3, "serialize", i));
    GeneratedComplex s = random_complex(rng, PieceMix{-1, 2, 4, 9});
    GeneratedComplex t = random_complex(rng, PieceMix{-1, 2, 4, 9});
    CHECK(complex_from_json(to_json(s.complex)) == s.complex);
    ChainMap f = random_chain_map(rng, s, t);
    ChainMap g = chain_map_from_json(to_json(f));
    CHECK(g.source() == f.source());
    CHECK(g.target() == f.target());
    for (int n = -2; n <= 4; ++n) CHECK(g.component(n) == f.component(n));
  }
  ChainComplex local = base_change(moore_complex(FgAbGroup::cyclic(12)), BaseRing::inverted({3}));
  CHECK(complex_from_json(to_json(local)) == local);
  Json moore6 = Json::parse(R"({"base":{"ring":"Z"},"bottom":0,"ranks":{"0":1,"1":1},"differentials":{"1":[["6"]]}})");
  CHECK(complex_from_json(moore6) == moore_complex(FgAbGroup::cyclic(6)));
  CHECK(to_json(moore_complex(FgAbGroup::cyclic(6))) == moore6);
  Json bad = Json::parse(R"({"ranks":{"0":1,"1":1,"2":1},"differentials":{"1":[["1"]],"2":[["1"]]}})");
  CHECK_THROWS_AS(complex_from_json(bad), SchemaError);
  Json shape = Json::parse(R"({"ranks":{"0":1,"1":1},"differentials":{"1":[["1","2"]]}})");
  CHECK_THROWS_WITH(complex_from_json(shape), Catch::Matchers::ContainsSubstring("/differentials/1"));
  CHECK_THROWS_AS(parse_json_text("{\"ranks\": "), SchemaError);
}

TEST_CASE("reports serialize deterministically", "[serialize]") {
  ChainComplex m = moore_complex(FgAbGroup::cyclic(6));
  Json a = to_json(finiteness_report(m, {2, 3}));
  Json b = to_json(finiteness_report(m, {2, 3}));
  CHECK(dump(a) == dump(b));
  CHECK(a["primes"][0]["annihilator"].is_null());
  CHECK(a["primes"][0]["total_mod_p"] == 2);
  Json cw = to_json(cw_structure(m));
  CHECK(cw["cells"] == Json::parse(R"({"0":1,"1":1})"));
  Json pm = to_json(p_finite_model(m, 2));
  CHECK(pm["map"]["components"]["0"] == Json::parse(R"([["3"]])"));
}
