#pragma once

#include "spectra/arithmetic.hpp"
#include "spectra/chain.hpp"
#include "spectra/cw.hpp"
#include "spectra/moore_rings.hpp"

#include "json.hpp"

#include <string>

namespace spectra {

using Json = nlohmann::json;

/// Malformed input: bad JSON text, or JSON that violates a schema. The
/// message names the offending location as a JSON pointer.
class SchemaError : public SpectraError {
public:
  using SpectraError::SpectraError;
};

/// Parses JSON text; syntax errors become SchemaError with line and column.
Json parse_json_text(const std::string &text, const std::string &source = "input");

/// Integers: numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const Integer &z);
Integer integer_from_json(const Json &j, const std::string &where = "");
Rational rational_from_json(const Json &j, const std::string &where = "");

/// Matrices: array of rows of decimal strings. The expected shape, when
/// known, fixes the dimensions of empty matrices and is checked otherwise.
Json to_json(const IntMatrix &m);
Json to_json(const RatMatrix &m);
IntMatrix matrix_from_json(const Json &j, const std::string &where = "", std::optional<std::size_t> rows = {},
                           std::optional<std::size_t> cols = {});

Json to_json(const BaseRing &r);
BaseRing base_ring_from_json(const Json &j, const std::string &where = "");
/// Parses a command-line ring spec: Z, Z[1/2,3], Z_(p), F_p.
BaseRing base_ring_from_spec(const std::string &spec);

Json to_json(const FgAbGroup &g);
/// Accepts {"rank", "torsion"} or {"presentation": matrix}.
FgAbGroup group_from_json(const Json &j, const std::string &where = "");
Json to_json(const GroupMap &f);
GroupMap group_map_from_json(const Json &j, const std::string &where = "");

Json to_json(const Atom &a);
Atom atom_from_json(const Json &j, const std::string &where = "");
Json to_json(const CatalogueGroup &g);
CatalogueGroup catalogue_from_json(const Json &j, const std::string &where = "");
Json to_json(const PadicModule &m);
PadicModule padic_from_json(const Json &j, const std::string &where = "");

Json to_json(const ChainComplex &c);
ChainComplex complex_from_json(const Json &j, const std::string &where = "");
Json to_json(const ChainMap &f);
ChainMap chain_map_from_json(const Json &j, const std::string &where = "");

Json to_json(const SkeletalFiltration &s);
Json to_json(const FinitenessReport &r);
Json to_json(const PFiniteModel &m);
Json to_json(const QuotientReport &q);
Json to_json(const SixTermReport &r);
Json to_json(const TowerLimit &t);

/// Canonical text: keys sorted, two-space indent, trailing newline.
std::string dump(const Json &j);

} // namespace spectra
