#pragma once

#include "spectra/random.hpp"
#include "spectra/serialize.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spectra::verify {

/// One randomized or enumerated case. `cert` collects the inputs so that a
/// failure can be replayed; the return value is a failure message.
using CaseFn = std::function<std::optional<std::string>(Rng &rng, std::size_t index, Json &cert)>;

struct Check {
  std::string suite;
  std::string name;
  std::size_t default_cases = 0;
  bool enumerated = false;  // fixed case list; --cases does not change it
  CaseFn run;
};

const std::vector<Check> &registry();
/// linalg, groups, functors, moore-rings, chain.
std::vector<std::string> suite_names();

struct Failure {
  std::size_t index = 0;
  std::uint64_t case_seed = 0;
  std::string message;
  Json certificate;
};

struct CheckReport {
  std::string suite, name;
  std::size_t cases = 0, passed = 0;
  std::optional<Failure> failure;
  bool ok() const { return !failure && passed == cases; }
};

struct Options {
  std::uint64_t seed = 42;
  std::optional<std::size_t> cases;  // overrides the count of randomized checks
};

/// Runs a suite name, "all", or a single check by name. Throws SchemaError
/// for an unknown name.
std::vector<CheckReport> run(const std::string &selector, const Options &opts);
CheckReport run_check(const Check &check, const Options &opts);

Json to_json(const std::vector<CheckReport> &reports, const Options &opts, const std::string &selector);
std::string to_text(const std::vector<CheckReport> &reports);
inline bool all_ok(const std::vector<CheckReport> &reports) {
  for (const auto &r : reports)
    if (!r.ok()) return false;
  return true;
}

} // namespace spectra::verify
