#pragma once

#include "spectra/chain.hpp"
#include "spectra/random.hpp"

#include <map>
#include <vector>

namespace spectra {

/// Elementary complex: order 0 is Z in one degree; order n >= 1 is
/// Z --n--> Z in degrees degree + 1, degree (contractible when n = 1).
struct CellPiece {
  int degree = 0;
  Integer order = 0;
};

/// Direct sum of pieces, with the basis of every degree scrambled by a
/// unimodular change. The homology is known from the pieces.
struct GeneratedComplex {
  std::vector<CellPiece> pieces;
  ChainComplex complex;
  std::map<int, IntMatrix> change, change_inv;  // scrambled = change * raw
  std::map<int, FgAbGroup> expected_homology() const;
};

GeneratedComplex assemble_complex(Rng &rng, std::vector<CellPiece> pieces, bool scramble = true);

struct PieceMix {
  int bottom = 0, top = 2;
  std::size_t max_pieces = 4;
  long max_order = 12;
  bool free = true, torsion = true, contractible = true;
};

std::vector<CellPiece> random_pieces(Rng &rng, const PieceMix &mix);

inline GeneratedComplex random_complex(Rng &rng, const PieceMix &mix = {}) {
  return assemble_complex(rng, random_pieces(rng, mix));
}

/// Random chain map built blockwise between pieces plus a null-homotopic term.
ChainMap random_chain_map(Rng &rng, const GeneratedComplex &s, const GeneratedComplex &t);

} // namespace spectra
