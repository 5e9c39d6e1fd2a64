#include "spectra/generators.hpp"

#include "spectra/linalg.hpp"

namespace spectra {

namespace {

// Position of each piece's cells in the raw direct sum.
struct RawLayout {
  std::map<int, std::size_t> ranks;
  std::vector<std::size_t> bottom_index, top_index;
};

RawLayout raw_layout(const std::vector<CellPiece> &pieces) {
  RawLayout l;
  l.bottom_index.resize(pieces.size());
  l.top_index.resize(pieces.size());
  std::map<int, std::size_t> next;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    l.bottom_index[i] = next[pieces[i].degree]++;
    if (pieces[i].order != 0) l.top_index[i] = next[pieces[i].degree + 1]++;
  }
  for (const auto &[n, r] : next) l.ranks[n] = r;
  return l;
}

IntMatrix unimodular_inverse(const IntMatrix &u) {
  IntegralSmith s = integral_smith(u);
  return s.V * s.U;
}

std::size_t rank_at(const std::map<int, std::size_t> &ranks, int n) {
  auto it = ranks.find(n);
  return it == ranks.end() ? 0 : it->second;
}

} // namespace

std::map<int, FgAbGroup> GeneratedComplex::expected_homology() const {
  std::map<int, std::size_t> free;
  std::map<int, IntVector> orders;
  for (const auto &p : pieces) {
    if (p.order == 0) ++free[p.degree];
    else if (p.order > 1) orders[p.degree].push_back(p.order);
  }
  std::map<int, FgAbGroup> out;
  for (const auto &[n, r] : free) out[n] = FgAbGroup::from_cyclic_orders(r, orders[n]);
  for (const auto &[n, o] : orders)
    if (!out.count(n)) out[n] = FgAbGroup::from_cyclic_orders(0, o);
  return out;
}

GeneratedComplex assemble_complex(Rng &rng, std::vector<CellPiece> pieces, bool scramble) {
  GeneratedComplex g;
  g.pieces = std::move(pieces);
  RawLayout l = raw_layout(g.pieces);
  std::map<int, IntMatrix> raw;
  for (const auto &[n, r] : l.ranks)
    if (l.ranks.count(n - 1)) raw[n] = IntMatrix(l.ranks[n - 1], r);
  for (std::size_t i = 0; i < g.pieces.size(); ++i) {
    const CellPiece &p = g.pieces[i];
    if (p.order != 0) raw[p.degree + 1](l.bottom_index[i], l.top_index[i]) = p.order;
  }
  for (const auto &[n, r] : l.ranks) {
    g.change[n] = scramble ? random_unimodular(rng, r) : IntMatrix::identity(r);
    g.change_inv[n] = unimodular_inverse(g.change[n]);
  }
  std::map<int, IntMatrix> diffs;
  for (const auto &[n, d] : raw) diffs[n] = g.change[n - 1] * d * g.change_inv[n];
  g.complex = ChainComplex::from_maps(BaseRing::integers(), l.ranks, diffs);
  return g;
}

std::vector<CellPiece> random_pieces(Rng &rng, const PieceMix &mix) {
  std::vector<int> kinds;
  if (mix.free) kinds.push_back(0);
  if (mix.torsion) kinds.push_back(2);
  if (mix.contractible) kinds.push_back(1);
  std::vector<CellPiece> out;
  if (kinds.empty()) return out;
  const std::size_t count = rng.index(mix.max_pieces + 1);
  for (std::size_t i = 0; i < count; ++i) {
    CellPiece p;
    p.degree = static_cast<int>(rng.uniform(mix.bottom, mix.top));
    switch (rng.pick(kinds)) {
    case 0: p.order = 0; break;
    case 1: p.order = 1; break;
    default: p.order = rng.uniform(2, std::max(2L, mix.max_order));
    }
    out.push_back(p);
  }
  return out;
}

ChainMap random_chain_map(Rng &rng, const GeneratedComplex &s, const GeneratedComplex &t) {
  RawLayout ls = raw_layout(s.pieces), lt = raw_layout(t.pieces);
  std::map<int, IntMatrix> raw;
  for (const auto &[n, r] : ls.ranks) raw[n] = IntMatrix(rank_at(lt.ranks, n), r);
  auto entry = [&](int n, std::size_t row, std::size_t col, const Integer &v) {
    if (raw.count(n) && row < raw[n].rows()) raw[n](row, col) += v;
  };
  for (std::size_t i = 0; i < s.pieces.size(); ++i)
    for (std::size_t j = 0; j < t.pieces.size(); ++j) {
      const CellPiece &p = s.pieces[i];
      const CellPiece &q = t.pieces[j];
      if (rng.uniform(0, 2) == 0) continue;
      const Integer c = rng.uniform(-3, 3);
      if (c == 0) continue;
      if (p.order == 0) {
        // a cycle may go to any bottom cell of the same degree
        if (q.degree == p.degree) entry(p.degree, lt.bottom_index[j], ls.bottom_index[i], c);
      } else if (q.degree == p.degree + 1) {
        // the top cell of p goes to the bottom cell of q
        entry(p.degree + 1, lt.bottom_index[j], ls.top_index[i], c);
      } else if (q.degree == p.degree && q.order != 0) {
        const Integer g = gcd(p.order, q.order);
        entry(p.degree, lt.bottom_index[j], ls.bottom_index[i], c * (q.order / g));
        entry(p.degree + 1, lt.top_index[j], ls.top_index[i], c * (p.order / g));
      }
    }
  std::map<int, IntMatrix> comps;
  for (const auto &[n, m] : raw) {
    if (m.empty()) continue;
    comps[n] = t.change.at(n) * m * s.change_inv.at(n);
  }
  // add d h + h d for a random h of small entries
  const ChainComplex &sc = s.complex, &tc = t.complex;
  std::map<int, IntMatrix> h;
  for (int n = sc.bottom() - 1; n <= sc.top(); ++n)
    h[n] = random_matrix(rng, tc.rank(n + 1), sc.rank(n), -1, 1);
  for (int n = sc.bottom(); n <= sc.top(); ++n) {
    IntMatrix extra = tc.d(n + 1) * h[n] + h[n - 1] * sc.d(n);
    if (extra.empty()) continue;
    comps[n] = comps.count(n) ? comps[n] + extra : extra;
  }
  return ChainMap(sc, tc, std::move(comps));
}

} // namespace spectra
