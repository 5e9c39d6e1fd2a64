// Runs the acceptance criteria through the verification registry and prints
// one PASS/FAIL line per criterion. Optional argument: path of the spectra
// executable, used to compare two full `verify --suite all` runs byte for byte.

#include "spectra/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace spectra;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> checks;
  double budget_seconds;
};

const verify::Check &find_check(const std::string &name) {
  for (const auto &c : verify::registry())
    if (c.name == name) return c;
  throw SpectraError("no check named " + name);
}

std::string run_command(const std::string &cmd, int &status) {
  std::string out;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

} // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> criteria = {
      {1, "Smith normal form and brute-force cokernels", {"snf", "cokernel-enumeration"}, 10},
      {2, "Kunneth for Moore complexes", {"kunneth"}, 30},
      {3, "Ext >-> H_0 Hom ->> Hom sequences", {"uct"}, 60},
      {4, "CW structures", {"cw"}, 60},
      {5, "localization of homology", {"localization"}, 30},
      {6,
       "completion algebra",
       {"atom-table", "quotient-levels", "six-term", "six-term-catalogue", "four-term", "detect-epi"},
       60},
      {7, "Moore-ring quotients", {"dp-quotient", "dp-constants", "p-power-quotients"}, 30},
      {8,
       "p-completion of complexes",
       {"completion", "mod-p-uct", "mod-p-from-completion", "p-finite-model", "p-finite-worked", "tensor-zp"},
       90},
      {9, "Hurewicz contractions", {"hurewicz", "mod-p-contractible"}, 30},
  };
  const verify::Options opts{42, std::nullopt};
  bool all = true;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<verify::CheckReport> reports;
    std::string detail;
    for (const auto &name : c.checks) {
      reports.push_back(verify::run_check(find_check(name), opts));
      const auto &r = reports.back();
      detail += " " + r.name + "=" + std::to_string(r.passed) + "/" + std::to_string(r.cases);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = verify::all_ok(reports) && secs < c.budget_seconds;
    all = all && ok;
    std::printf("%s criterion %d (%s):%s [%.2fs]\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), detail.c_str(), secs);
    if (!ok) std::cout << verify::to_text(reports);
  }

  // criterion 10: determinism of the full report
  std::string first = dump(verify::to_json(verify::run("all", opts), opts, "all"));
  std::string second = dump(verify::to_json(verify::run("all", opts), opts, "all"));
  bool same = first == second;
  std::string how = "in-process";
  if (argc > 1) {
    const std::string cmd = std::string("\"") + argv[1] + "\" verify --suite all --seed 42 --json";
    int s1 = 0, s2 = 0;
    std::string a = run_command(cmd, s1), b = run_command(cmd, s2);
    same = same && s1 == 0 && s2 == 0 && !a.empty() && a == b && a == first;
    how += " and two CLI runs";
  }
  all = all && same;
  std::printf("%s criterion 10 (byte-identical reports for seed 42, %s, %zu bytes)\n", same ? "PASS" : "FAIL",
              how.c_str(), first.size());
  return all ? 0 : 1;
}
