#include "spectra/serialize.hpp"

#include <cctype>
#include <sstream>

namespace spectra {

namespace {

std::string at(const std::string &where, const std::string &key) { return where + "/" + key; }
std::string at(const std::string &where, std::size_t i) { return where + "/" + std::to_string(i); }

[[noreturn]] void schema(const std::string &where, const std::string &msg) {
  throw SchemaError((where.empty() ? std::string("/") : where) + ": " + msg);
}

const Json &field(const Json &j, const std::string &key, const std::string &where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, "missing key \"" + key + "\"");
  return *it;
}

std::uint64_t u64_from_json(const Json &j, const std::string &where) {
  Integer z = integer_from_json(j, where);
  if (!fits_u64(z)) schema(where, "expected a nonnegative 63-bit integer");
  return to_u64(z);
}

std::uint64_t prime_from_json(const Json &j, const std::string &where) {
  std::uint64_t p = u64_from_json(j, where);
  if (!is_prime(p)) schema(where, std::to_string(p) + " is not a prime");
  return p;
}

int degree_key(const std::string &key, const std::string &where) {
  try {
    std::size_t used = 0;
    long v = std::stol(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return static_cast<int>(v);
  } catch (const std::exception &) {
    schema(where, "degree key \"" + key + "\" is not an integer");
  }
}

std::string rational_text(const Rational &q) { return to_string(q); }

template <class Fn> auto wrap(const std::string &where, Fn &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError &) {
    throw;
  } catch (const SpectraError &e) {
    schema(where, e.what());
  } catch (const InvariantError &e) {
    // inputs that break an algebraic invariant (d o d != 0, d f != f d) are malformed input
    schema(where, e.what());
  }
}

Json degree_map(const std::map<int, std::size_t> &m) {
  Json j = Json::object();
  for (const auto &[n, v] : m) j[std::to_string(n)] = v;
  return j;
}

} // namespace

Json parse_json_text(const std::string &text, const std::string &source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw SchemaError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json to_json(const Integer &z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json &j, const std::string &where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const SpectraError &e) {
      schema(where, e.what());
    }
  }
  schema(where, "expected an integer or a decimal string");
}

Rational rational_from_json(const Json &j, const std::string &where) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const SpectraError &e) {
      schema(where, e.what());
    }
  }
  schema(where, "expected a rational as \"a/b\"");
}

Json to_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RatMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_text(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json &j, const std::string &where, std::optional<std::size_t> rows,
                           std::optional<std::size_t> cols) {
  if (!j.is_array()) schema(where, "expected a matrix (array of rows)");
  const std::size_t r = j.size();
  if (rows && *rows != r) schema(where, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(r));
  std::size_t c = cols.value_or(0);
  if (r > 0) {
    if (!j[0].is_array()) schema(at(where, 0), "expected a row array");
    c = j[0].size();
    if (cols && *cols != c) schema(where, "expected " + std::to_string(*cols) + " columns, got " + std::to_string(c));
  }
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Json &row = j[i];
    if (!row.is_array() || row.size() != c) schema(at(where, i), "ragged matrix row");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = integer_from_json(row[k], at(at(where, i), k));
  }
  return m;
}

Json to_json(const BaseRing &r) {
  switch (r.kind()) {
  case BaseRing::Kind::integers: return Json{{"ring", "Z"}};
  case BaseRing::Kind::inverted: return Json{{"ring", "inverted"}, {"primes", r.inverted_primes().listed()}};
  case BaseRing::Kind::local_at: return Json{{"ring", "local_at"}, {"p", r.prime()}};
  case BaseRing::Kind::field_mod: return Json{{"ring", "mod"}, {"p", r.prime()}};
  }
  return Json();
}

BaseRing base_ring_from_json(const Json &j, const std::string &where) {
  const Json &kind = field(j, "ring", where);
  if (!kind.is_string()) schema(at(where, "ring"), "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "Z") return BaseRing::integers();
  if (k == "inverted") {
    const Json &ps = field(j, "primes", where);
    if (!ps.is_array()) schema(at(where, "primes"), "expected an array of primes");
    std::vector<std::uint64_t> primes;
    for (std::size_t i = 0; i < ps.size(); ++i) primes.push_back(prime_from_json(ps[i], at(at(where, "primes"), i)));
    return wrap(where, [&] { return BaseRing::inverted(primes); });
  }
  if (k == "local_at") return BaseRing::local_at(prime_from_json(field(j, "p", where), at(where, "p")));
  if (k == "mod") return BaseRing::field_mod(prime_from_json(field(j, "p", where), at(where, "p")));
  schema(at(where, "ring"), "unknown ring \"" + k + "\"");
}

BaseRing base_ring_from_spec(const std::string &spec) {
  auto primes_of = [&](std::string body) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.rfind("1/", 0) == 0) item = item.substr(2);
      Integer z = parse_integer(item);
      if (!fits_u64(z) || !is_prime(to_u64(z))) throw SchemaError("ring spec: " + item + " is not a prime");
      out.push_back(to_u64(z));
    }
    return out;
  };
  try {
    if (spec == "Z") return BaseRing::integers();
    if (spec.size() > 3 && spec.rfind("Z[", 0) == 0 && spec.back() == ']')
      return BaseRing::inverted(primes_of(spec.substr(2, spec.size() - 3)));
    if (spec.size() > 4 && spec.rfind("Z_(", 0) == 0 && spec.back() == ')') {
      auto ps = primes_of(spec.substr(3, spec.size() - 4));
      if (ps.size() == 1) return BaseRing::local_at(ps[0]);
    }
    if (spec.size() > 2 && spec.rfind("F_", 0) == 0) {
      auto ps = primes_of(spec.substr(2));
      if (ps.size() == 1) return BaseRing::field_mod(ps[0]);
    }
  } catch (const SchemaError &) {
    throw;
  } catch (const SpectraError &e) {
    throw SchemaError(std::string("ring spec: ") + e.what());
  }
  throw SchemaError("ring spec \"" + spec + "\" is not one of Z, Z[1/p,...], Z_(p), F_p");
}

Json to_json(const FgAbGroup &g) {
  Json t = Json::array();
  for (const auto &d : g.torsion()) t.push_back(to_json(d));
  return Json{{"rank", g.rank()}, {"torsion", std::move(t)}};
}

FgAbGroup group_from_json(const Json &j, const std::string &where) {
  if (!j.is_object()) schema(where, "expected a group object");
  if (j.contains("presentation"))
    return from_presentation(matrix_from_json(j["presentation"], at(where, "presentation")));
  const std::size_t rank = u64_from_json(field(j, "rank", where), at(where, "rank"));
  const Json &t = field(j, "torsion", where);
  if (!t.is_array()) schema(at(where, "torsion"), "expected an array");
  IntVector torsion;
  for (std::size_t i = 0; i < t.size(); ++i) torsion.push_back(integer_from_json(t[i], at(at(where, "torsion"), i)));
  return wrap(where, [&] { return FgAbGroup(rank, torsion); });
}

Json to_json(const GroupMap &f) {
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"matrix", to_json(f.matrix())}};
}

GroupMap group_map_from_json(const Json &j, const std::string &where) {
  FgAbGroup s = group_from_json(field(j, "source", where), at(where, "source"));
  FgAbGroup t = group_from_json(field(j, "target", where), at(where, "target"));
  IntMatrix m = matrix_from_json(field(j, "matrix", where), at(where, "matrix"), t.generator_count(),
                                 s.generator_count());
  return wrap(where, [&] { return GroupMap(s, t, m); });
}

Json to_json(const Atom &a) {
  switch (a.kind) {
  case Atom::Kind::integers: return Json{{"t", "Z"}};
  case Atom::Kind::cyclic: return Json{{"t", "cyclic"}, {"n", to_json(a.n)}};
  case Atom::Kind::z_inv_p: return Json{{"t", "z_inv_p"}, {"p", a.p}};
  case Atom::Kind::prufer: return Json{{"t", "prufer"}, {"p", a.p}};
  case Atom::Kind::rationals: return Json{{"t", "Q"}};
  case Atom::Kind::padic: return Json{{"t", "padic"}, {"p", a.p}};
  }
  return Json();
}

Atom atom_from_json(const Json &j, const std::string &where) {
  const Json &t = field(j, "t", where);
  if (!t.is_string()) schema(at(where, "t"), "expected a string");
  const std::string k = t.get<std::string>();
  if (k == "Z") return Atom::Z();
  if (k == "Q") return Atom::Q();
  if (k == "cyclic") {
    Integer n = integer_from_json(field(j, "n", where), at(where, "n"));
    return wrap(where, [&] { return Atom::cyclic(n); });
  }
  const std::uint64_t p = prime_from_json(field(j, "p", where), at(where, "p"));
  if (k == "z_inv_p") return Atom::z_inv(p);
  if (k == "prufer") return Atom::prufer(p);
  if (k == "padic") return Atom::padic(p);
  schema(at(where, "t"), "unknown atom \"" + k + "\"");
}

Json to_json(const CatalogueGroup &g) {
  Json atoms = Json::array();
  for (const auto &a : g.atoms()) atoms.push_back(to_json(a));
  return Json{{"atoms", std::move(atoms)}};
}

CatalogueGroup catalogue_from_json(const Json &j, const std::string &where) {
  const Json &atoms = field(j, "atoms", where);
  if (!atoms.is_array()) schema(at(where, "atoms"), "expected an array");
  std::vector<Atom> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) out.push_back(atom_from_json(atoms[i], at(at(where, "atoms"), i)));
  return CatalogueGroup(std::move(out));
}

Json to_json(const PadicModule &m) {
  Json t = Json::array();
  for (const auto &d : m.torsion()) t.push_back(to_json(d));
  return Json{{"p", m.prime()}, {"rank", m.rank()}, {"torsion", std::move(t)}, {"text", m.to_string()}};
}

PadicModule padic_from_json(const Json &j, const std::string &where) {
  const std::uint64_t p = prime_from_json(field(j, "p", where), at(where, "p"));
  const std::size_t rank = u64_from_json(field(j, "rank", where), at(where, "rank"));
  const Json &t = field(j, "torsion", where);
  if (!t.is_array()) schema(at(where, "torsion"), "expected an array");
  IntVector torsion;
  for (std::size_t i = 0; i < t.size(); ++i) torsion.push_back(integer_from_json(t[i], at(at(where, "torsion"), i)));
  return wrap(where, [&] { return PadicModule(p, rank, torsion); });
}

Json to_json(const ChainComplex &c) {
  Json ranks = Json::object(), diffs = Json::object();
  for (int n = c.bottom(); n <= c.top(); ++n) {
    ranks[std::to_string(n)] = c.rank(n);
    if (n > c.bottom() && c.rank(n - 1) > 0) diffs[std::to_string(n)] = to_json(c.d(n));
  }
  return Json{{"base", to_json(c.base())}, {"bottom", c.bottom()}, {"ranks", std::move(ranks)},
              {"differentials", std::move(diffs)}};
}

ChainComplex complex_from_json(const Json &j, const std::string &where) {
  if (!j.is_object()) schema(where, "expected a complex object");
  BaseRing base = j.contains("base") ? base_ring_from_json(j["base"], at(where, "base")) : BaseRing::integers();
  const Json &rj = field(j, "ranks", where);
  if (!rj.is_object()) schema(at(where, "ranks"), "expected an object keyed by degree");
  std::map<int, std::size_t> ranks;
  for (auto it = rj.begin(); it != rj.end(); ++it)
    ranks[degree_key(it.key(), at(where, "ranks"))] = u64_from_json(it.value(), at(at(where, "ranks"), it.key()));
  auto rank_at = [&](int n) {
    auto r = ranks.find(n);
    return r == ranks.end() ? std::size_t{0} : r->second;
  };
  if (j.contains("bottom")) {
    const int b = static_cast<int>(integer_from_json(j["bottom"], at(where, "bottom")).get_si());
    for (const auto &[n, r] : ranks)
      if (n < b && r > 0) schema(at(where, "ranks"), "nonzero rank below the bottom degree");
  }
  std::map<int, IntMatrix> diffs;
  if (j.contains("differentials")) {
    const Json &dj = j["differentials"];
    if (!dj.is_object()) schema(at(where, "differentials"), "expected an object keyed by degree");
    for (auto it = dj.begin(); it != dj.end(); ++it) {
      const int n = degree_key(it.key(), at(where, "differentials"));
      diffs[n] = matrix_from_json(it.value(), at(at(where, "differentials"), it.key()), rank_at(n - 1), rank_at(n));
    }
  }
  return wrap(where, [&] { return ChainComplex::from_maps(base, ranks, diffs); });
}

Json to_json(const ChainMap &f) {
  Json comps = Json::object();
  for (int n = f.source().bottom(); n <= f.source().top(); ++n)
    if (f.source().rank(n) > 0 && f.target().rank(n) > 0) comps[std::to_string(n)] = to_json(f.component(n));
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", std::move(comps)}};
}

ChainMap chain_map_from_json(const Json &j, const std::string &where) {
  ChainComplex s = complex_from_json(field(j, "source", where), at(where, "source"));
  ChainComplex t = complex_from_json(field(j, "target", where), at(where, "target"));
  std::map<int, IntMatrix> comps;
  if (j.contains("components")) {
    const Json &cj = j["components"];
    if (!cj.is_object()) schema(at(where, "components"), "expected an object keyed by degree");
    for (auto it = cj.begin(); it != cj.end(); ++it) {
      const int n = degree_key(it.key(), at(where, "components"));
      comps[n] = matrix_from_json(it.value(), at(at(where, "components"), it.key()), t.rank(n), s.rank(n));
    }
  }
  return wrap(where, [&] { return ChainMap(s, t, comps); });
}

Json to_json(const SkeletalFiltration &s) {
  Json layers = Json::object();
  for (const auto &[i, count] : s.cells()) {
    ChainMap w = s.layer_witness(i);
    layers[std::to_string(i)] = Json{{"cells", count},
                                     {"structure_map", to_json(s.structure_map(i))},
                                     {"witness", to_json(w.component(i))}};
  }
  return Json{{"cells", degree_map(s.cells())},
              {"total_cells", s.total_cells()},
              {"cell_complex", to_json(s.cells_complex)},
              {"map", to_json(s.map)},
              {"layers", std::move(layers)}};
}

Json to_json(const FinitenessReport &r) {
  Json h = Json::object();
  for (const auto &[n, g] : r.homology) h[std::to_string(n)] = to_json(g);
  Json primes = Json::array();
  for (const auto &p : r.primes) {
    Json pj{{"p", p.p}, {"mod_p", degree_map(p.mod_p)}, {"total_mod_p", p.total_mod_p},
            {"mod_p_finite", p.mod_p_finite}};
    pj["annihilator"] = p.annihilator ? to_json(*p.annihilator) : Json(nullptr);
    primes.push_back(std::move(pj));
  }
  Json out{{"homology", std::move(h)},
           {"homology_finitely_generated", r.homology_finitely_generated},
           {"primes", std::move(primes)}};
  out["model"] = r.model ? to_json(*r.model) : Json(nullptr);
  return out;
}

Json to_json(const PFiniteModel &m) { return Json{{"model", to_json(m.model)}, {"map", to_json(m.map)}}; }

Json to_json(const QuotientReport &q) {
  return Json{{"relations", to_json(q.relations)},
              {"cokernel", to_json(q.cokernel)},
              {"generator_degree", q.generator_degree},
              {"phi_image", rational_text(q.generator_image)}};
}

Json to_json(const TowerLimit &t) {
  return Json{{"conclusive", t.conclusive}, {"limit", to_json(t.limit)}, {"note", t.note}};
}

Json to_json(const SixTermReport &r) {
  static const char *names[6] = {"L1A", "L1B", "L1C", "L0A", "L0B", "L0C"};
  Json nodes = Json::object();
  for (std::size_t i = 0; i < 6; ++i) nodes[names[i]] = to_json(r.nodes[i]);
  Json maps = Json::array();
  for (const auto &m : r.maps) maps.push_back(to_json(m));
  Json levels = Json::array();
  for (const auto &l : r.levels) {
    Json groups = Json::array();
    for (const auto &g : l.groups) groups.push_back(to_json(g));
    levels.push_back(Json{{"groups", std::move(groups)}, {"exact", l.exact}});
  }
  return Json{{"p", r.p},           {"nodes", std::move(nodes)}, {"maps_available", r.maps_available},
              {"exact", r.exact},   {"maps", std::move(maps)},   {"levels", std::move(levels)},
              {"notes", r.notes}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace spectra
