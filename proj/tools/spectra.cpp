#include "spectra/serialize.hpp"
#include "spectra/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spectra;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

struct Flags {
  bool json = false;
  std::uint64_t seed = 42;
  std::optional<std::size_t> cases;
  std::size_t trunc = 4;
  std::string primes;
  std::uint64_t p = 2;
  std::string ring;
  std::string suite = "all";
  bool model = false;
  std::string input;
};

Json read_input(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::vector<std::uint64_t> parse_primes(const std::string &csv) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != item.size() || !is_prime(v)) throw SchemaError("--primes: '" + item + "' is not a prime");
    out.push_back(v);
  }
  return out;
}

void require_prime_flag(std::uint64_t p) {
  if (!is_prime(p)) throw SchemaError("--p: " + std::to_string(p) + " is not a prime");
}

ChainComplex load_complex(const Flags &f) {
  ChainComplex c = complex_from_json(read_input(f.input));
  if (!f.ring.empty()) c = base_change(c, base_ring_from_spec(f.ring));
  return c;
}

std::string ring_suffix(const BaseRing &r) {
  return r == BaseRing::integers() ? "" : " (over " + r.to_string() + ")";
}

int emit(const Flags &f, const Json &j, const std::string &text) {
  std::cout << (f.json ? dump(j) : text);
  return kOk;
}

int cmd_homology(const Flags &f) {
  ChainComplex c = load_complex(f);
  std::map<int, FgAbGroup> h = homology(c);
  Json j = {{"base", to_json(c.base())}, {"homology", Json::object()}};
  std::ostringstream os;
  for (const auto &[n, g] : h) {
    j["homology"][std::to_string(n)] = to_json(g);
    os << "H_" << n << " = " << g.to_string() << ring_suffix(c.base()) << "\n";
  }
  if (h.empty()) os << "H_* = 0" << ring_suffix(c.base()) << "\n";
  return emit(f, j, os.str());
}

int cmd_cw(const Flags &f) {
  ChainComplex c = load_complex(f);
  SkeletalFiltration s = cw_structure(c);
  CwCheck chk = check_cw(c, s);
  Json j = to_json(s);
  j["axioms_hold"] = chk.ok();
  std::ostringstream os;
  for (const auto &[n, k] : s.cells()) os << "cells in degree " << n << ": " << k << "\n";
  os << "total cells: " << s.total_cells() << "\n";
  os << "CW axioms: " << (chk.ok() ? "hold" : "FAIL") << "\n";
  for (const auto &m : chk.failures) os << "  " << m << "\n";
  emit(f, j, os.str());
  return chk.ok() ? kOk : kFailure;
}

int cmd_finiteness(const Flags &f) {
  ChainComplex c = load_complex(f);
  std::vector<std::uint64_t> primes = f.primes.empty() ? std::vector<std::uint64_t>{f.p} : parse_primes(f.primes);
  FinitenessReport r = finiteness_report(c, primes);
  std::ostringstream os;
  os << "homology finitely generated: " << (r.homology_finitely_generated ? "yes" : "no") << "\n";
  if (r.model) os << "finite cell model: " << r.model->total_cells() << " cells\n";
  for (const auto &pf : r.primes) {
    os << "p = " << pf.p << ": total dim H(C; F_p) = " << pf.total_mod_p;
    os << ", uniform torsion exponent: " << (pf.annihilator ? pf.annihilator->get_str() : "none") << "\n";
  }
  return emit(f, to_json(r), os.str());
}

int cmd_localize(const Flags &f) {
  ChainComplex c = complex_from_json(read_input(f.input));
  BaseRing ring = f.ring.empty() ? BaseRing::inverted(parse_primes(f.primes)) : base_ring_from_spec(f.ring);
  ChainComplex l = base_change(c, ring);
  std::map<int, FgAbGroup> h = homology(l);
  Json j = {{"base", to_json(ring)}, {"complex", to_json(l)}, {"homology", Json::object()}};
  std::ostringstream os;
  for (const auto &[n, g] : h) {
    j["homology"][std::to_string(n)] = to_json(g);
    os << "H_" << n << " = " << g.to_string() << ring_suffix(ring) << "\n";
  }
  if (h.empty()) os << "H_* = 0" << ring_suffix(ring) << "\n";
  return emit(f, j, os.str());
}

int cmd_complete(const Flags &f) {
  require_prime_flag(f.p);
  ChainComplex c = load_complex(f);
  std::map<int, PadicModule> h = completed_homology(c, f.p);
  std::map<int, std::size_t> dims = mod_p_homology(c, f.p);
  Json j = {{"p", f.p}, {"completed_homology", Json::object()}, {"mod_p_homology", Json::object()}};
  std::ostringstream os;
  for (const auto &[n, m] : h) {
    j["completed_homology"][std::to_string(n)] = to_json(m);
    os << "H_" << n << "(C)^_" << f.p << " = " << m.to_string() << "\n";
  }
  if (h.empty()) os << "completed homology vanishes\n";
  for (const auto &[n, d] : dims) {
    j["mod_p_homology"][std::to_string(n)] = d;
    os << "dim H_" << n << "(C; F_" << f.p << ") = " << d << "\n";
  }
  if (f.model) {
    PFiniteModel m = p_finite_model(c, f.p);
    j["model"] = to_json(m);
    os << "finite model: " << m.model.total_rank() << " cells\n";
  }
  return emit(f, j, os.str());
}

int cmd_moore(const Flags &f) {
  Json in = read_input(f.input);
  ChainComplex m = in.contains("presentation") ? moore_complex(matrix_from_json(in["presentation"], "/presentation"))
                                               : moore_complex(group_from_json(in));
  std::ostringstream os;
  os << "Moore complex, degrees " << m.bottom() << ".." << m.top() << "\n";
  for (int n = m.bottom() + 1; n <= m.top(); ++n) os << "d_" << n << " =\n" << m.d(n) << "\n";
  os << "H_0 = " << homology(m, 0).to_string() << "\n";
  return emit(f, to_json(m), os.str());
}

int cmd_group(const Flags &f) {
  Json in = read_input(f.input);
  Json j = Json::object();
  std::ostringstream os;
  if (in.contains("atoms")) {
    CatalogueGroup g = catalogue_from_json(in);
    require_prime_flag(f.p);
    PadicModule a = l0(g, f.p), b = l1(g, f.p);
    j = {{"group", to_json(g)}, {"p", f.p}, {"L0", to_json(a)}, {"L1", to_json(b)},
         {"ext_p_complete", is_ext_p_complete(g, f.p)}};
    os << "A = " << g.to_string() << "\nL0 A = " << a.to_string() << "\nL1 A = " << b.to_string() << "\n";
    os << "Ext-p-complete: " << (is_ext_p_complete(g, f.p) ? "yes" : "no") << "\n";
    return emit(f, j, os.str());
  }
  if (in.contains("A")) {
    FgAbGroup a = group_from_json(in["A"], "/A");
    j["A"] = to_json(a);
    os << "A = " << a.to_string() << "\n";
    if (in.contains("B")) {
      FgAbGroup b = group_from_json(in["B"], "/B");
      j["B"] = to_json(b);
      std::pair<const char *, FgAbGroup> rows[] = {
          {"hom", hom(a, b)}, {"ext", ext(a, b)}, {"tor", tor(a, b)}, {"tensor", tensor(a, b)}};
      os << "B = " << b.to_string() << "\n";
      for (const auto &[name, g] : rows) {
        j[name] = to_json(g);
        os << name << "(A, B) = " << g.to_string() << "\n";
      }
    }
    return emit(f, j, os.str());
  }
  FgAbGroup g = group_from_json(in);
  j = {{"group", to_json(g)}};
  os << g.to_string() << "\n";
  if (!f.primes.empty()) {
    FgAbGroup l = localize_group(g, PrimeSet::finite(parse_primes(f.primes)));
    j["localized"] = to_json(l);
    os << "localized: " << l.to_string() << "\n";
  }
  return emit(f, j, os.str());
}

int cmd_dp(const Flags &f) {
  std::vector<std::uint64_t> q = parse_primes(f.primes);
  QuotientReport r = dp_quotient(PrimeSet::finite(q), f.trunc);
  Json j = {{"Q", q}, {"N", f.trunc}, {"cokernel", to_json(r.cokernel)}, {"phi_image", to_string(r.generator_image)}};
  std::ostringstream os;
  os << "coker = " << r.cokernel.to_string() << ", generated by t_" << r.generator_degree << " -> "
     << to_string(r.generator_image) << "\n";
  return emit(f, j, os.str());
}

int cmd_poly(const Flags &f) {
  require_prime_flag(f.p);
  QuotientReport a = s_inv_p_quotient(f.p, f.trunc), b = s_mod_p_inf_quotient(f.p, f.trunc);
  Json j = {{"p", f.p}, {"N", f.trunc}, {"z_inv_p", to_json(a)}, {"prufer", to_json(b)}};
  std::ostringstream os;
  os << "Z[1/" << f.p << "] truncation: coker = " << a.cokernel.to_string() << ", t^" << a.generator_degree << " -> "
     << to_string(a.generator_image) << "\n";
  os << "Z/" << f.p << "^inf truncation: coker = " << b.cokernel.to_string() << ", t^" << b.generator_degree << " -> "
     << to_string(b.generator_image) << "\n";
  if (!f.input.empty()) {
    Json in = read_input(f.input);
    if (!in.contains("coefficients") || !in["coefficients"].is_array())
      throw SchemaError("/coefficients: expected an array of integers");
    IntVector c;
    for (std::size_t i = 0; i < in["coefficients"].size(); ++i)
      c.push_back(integer_from_json(in["coefficients"][i], "/coefficients/" + std::to_string(i)));
    PolyModule poly(c), d = truncated_division(poly);
    j["polynomial"] = poly.to_string();
    j["truncated_division"] = d.to_string();
    os << "(f - f(0)) / t = " << d.to_string() << "\n";
  }
  return emit(f, j, os.str());
}

int cmd_verify(const Flags &f) {
  verify::Options opts{f.seed, f.cases};
  std::vector<verify::CheckReport> reports = verify::run(f.suite, opts);
  std::cout << (f.json ? dump(verify::to_json(reports, opts, f.suite)) : verify::to_text(reports));
  return verify::all_ok(reports) ? kOk : kFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact homological algebra of chain complexes over Z and its localizations"};
  app.require_subcommand(1);
  Flags f;
  auto add_common = [&](CLI::App *sub) { sub->add_flag("--json", f.json, "Emit JSON"); };
  auto add_input = [&](CLI::App *sub, bool required = true) {
    auto *o = sub->add_option("input", f.input, "JSON input file");
    if (required) o->required();
  };
  auto add_ring = [&](CLI::App *sub) { sub->add_option("--ring", f.ring, "Base ring: Z, Z[1/2,3], Z_(p), F_p"); };

  std::map<std::string, int (*)(const Flags &)> handlers;
  auto sub = [&](const char *name, const char *help, int (*fn)(const Flags &)) {
    CLI::App *s = app.add_subcommand(name, help);
    add_common(s);
    handlers[name] = fn;
    return s;
  };

  auto *h = sub("homology", "Homology groups of a complex", cmd_homology);
  add_input(h);
  add_ring(h);
  auto *cw = sub("cw", "Cellular model with the CW axioms checked", cmd_cw);
  add_input(cw);
  auto *fin = sub("finiteness", "Finiteness report at the given primes", cmd_finiteness);
  add_input(fin);
  add_ring(fin);
  fin->add_option("--primes", f.primes, "Comma-separated primes");
  fin->add_option("--p", f.p, "Prime (when --primes is absent)");
  auto *loc = sub("localize", "Homology after inverting primes", cmd_localize);
  add_input(loc);
  add_ring(loc);
  loc->add_option("--primes", f.primes, "Comma-separated primes to invert");
  auto *comp = sub("complete", "p-completed and mod-p homology", cmd_complete);
  add_input(comp);
  add_ring(comp);
  comp->add_option("--p", f.p, "Prime")->required();
  comp->add_flag("--model", f.model, "Also build the finite model with the same mod-p homology");
  auto *moore = sub("moore", "Moore complex of a group or presentation", cmd_moore);
  add_input(moore);
  auto *grp = sub("group", "Canonical form, bifunctors, localization or completion of groups", cmd_group);
  add_input(grp);
  grp->add_option("--p", f.p, "Prime for L0/L1 of catalogue groups");
  grp->add_option("--primes", f.primes, "Primes to invert");
  auto *dp = sub("dp", "Truncated divided-power quotient", cmd_dp);
  dp->add_option("--primes", f.primes, "Comma-separated primes Q")->required();
  dp->add_option("--trunc", f.trunc, "Truncation degree N")->check(CLI::PositiveNumber);
  auto *poly = sub("poly", "Truncated presentations of Z[1/p] and Z/p^inf", cmd_poly);
  add_input(poly, false);
  poly->add_option("--p", f.p, "Prime")->required();
  poly->add_option("--trunc", f.trunc, "Truncation degree N");
  auto *ver = sub("verify", "Run verification suites", cmd_verify);
  ver->add_option("--suite", f.suite, "Suite or check name (linalg, groups, functors, moore-rings, chain, all)");
  ver->add_option("--seed", f.seed, "Seed");
  ver->add_option("--cases", f.cases, "Cases per randomized check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    for (const auto &[name, fn] : handlers)
      if (app.got_subcommand(name)) return fn(f);
  } catch (const InvariantError &e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return kFailure;
  } catch (const SpectraError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kInputError;
}
