#include <catch2/catch_amalgamated.hpp>

#include "spectra/verify.hpp"

#include <set>

using namespace spectra;

TEST_CASE("registry names are unique and suites are known", "[verify]") {
  std::set<std::string> names;
  std::vector<std::string> suites = verify::suite_names();
  for (const auto &c : verify::registry()) {
    CHECK(names.insert(c.name).second);
    CHECK(std::find(suites.begin(), suites.end(), c.name) == suites.end());
    CHECK(std::find(suites.begin(), suites.end(), c.suite) != suites.end());
    CHECK(c.default_cases > 0);
  }
}

TEST_CASE("every suite passes on a few cases", "[verify]") {
  verify::Options opts{7, 5};
  for (const auto &suite : verify::suite_names()) {
    auto reports = verify::run(suite, opts);
    CAPTURE(suite, verify::to_text(reports));
    CHECK(verify::all_ok(reports));
    for (const auto &r : reports) CHECK(r.suite == suite);
  }
}

TEST_CASE("case counts and selectors", "[verify]") {
  auto six = verify::run("six-term", verify::Options{42, 12});
  REQUIRE(six.size() == 1);
  CHECK(six[0].cases == 12);
  CHECK(six[0].passed == 12);
  // enumerated checks keep their own count
  auto worked = verify::run("p-finite-worked", verify::Options{42, 12});
  CHECK(worked[0].cases == 1);
  CHECK_THROWS_AS(verify::run("no-such-suite", {}), SchemaError);
}

TEST_CASE("reports are deterministic and seed dependent", "[verify]") {
  verify::Options a{42, 3}, b{43, 3};
  std::string x = dump(verify::to_json(verify::run("linalg", a), a, "linalg"));
  CHECK(x == dump(verify::to_json(verify::run("linalg", a), a, "linalg")));
  Json j = Json::parse(x);
  CHECK(j["seed"] == 42);
  CHECK(j["ok"] == true);
  CHECK(j["checks"][0]["failure"].is_null());
  CHECK(x != dump(verify::to_json(verify::run("linalg", b), b, "linalg")));
}

TEST_CASE("failures carry a replayable certificate", "[verify]") {
  verify::Check bad{"chain", "fails-at-three", 10, false, [](Rng &rng, std::size_t i, Json &cert) {
                      long v = rng.uniform(0, 1000);
                      cert["value"] = v;
                      return i == 3 ? std::optional<std::string>("case 3 fails") : std::nullopt;
                    }};
  verify::CheckReport r = verify::run_check(bad, verify::Options{42, std::nullopt});
  CHECK_FALSE(r.ok());
  CHECK(r.passed == 3);
  REQUIRE(r.failure);
  CHECK(r.failure->index == 3);
  CHECK(r.failure->message == "case 3 fails");
  CHECK(r.failure->case_seed == derive_seed(42, "fails-at-three", 3));
  Rng replay(r.failure->case_seed);
  CHECK(r.failure->certificate["value"] == replay.uniform(0, 1000));

  verify::Check throws{"chain", "throws", 2, false, [](Rng &, std::size_t, Json &) -> std::optional<std::string> {
                         throw InvariantError("d o d != 0");
                       }};
  verify::CheckReport t = verify::run_check(throws, {});
  REQUIRE(t.failure);
  CHECK(t.failure->message == "exception: d o d != 0");
  Json j = verify::to_json({t}, {}, "chain");
  CHECK(j["ok"] == false);
  CHECK(j["checks"][0]["failure"]["case"] == 0);
  CHECK(verify::to_text({t}).find("FAIL chain/throws 0/2") != std::string::npos);
}
