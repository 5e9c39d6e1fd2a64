#include "spectra/chain.hpp"

#include <algorithm>

namespace spectra {

namespace {

Integer field_prime(const BaseRing &base) { return Integer(static_cast<unsigned long>(base.prime())); }

IntMatrix canonical_entries(const IntMatrix &m, const BaseRing &base) {
  return base.is_field() ? reduce_mod(m, field_prime(base)) : m;
}

bool is_zero_over(const IntMatrix &m, const BaseRing &base) {
  return base.is_field() ? reduce_mod(m, field_prime(base)).is_zero() : m.is_zero();
}

bool is_zero_over(const Rational &q, const BaseRing &base) {
  if (!base.is_field()) return q == 0;
  return divides(field_prime(base), q.get_num());
}

std::string shape(const IntMatrix &m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_integers(const ChainComplex &c, const char *what) {
  if (c.base().kind() != BaseRing::Kind::integers)
    throw SpectraError(std::string(what) + " requires a complex over Z, got " + c.base().to_string());
}

IntMatrix kron(const IntMatrix &a, const IntMatrix &b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return k;
}

} // namespace

ChainComplex::ChainComplex(BaseRing base, int bottom, std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> differentials)
    : base_(std::move(base)), bottom_(bottom) {
  if (differentials.size() > ranks.size())
    throw SpectraError("ChainComplex: more differentials than degrees");
  differentials.resize(ranks.size());
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    IntMatrix &d = differentials[k];
    if (d.rows() == 0 && d.cols() == 0) d = IntMatrix(ranks[k - 1], ranks[k]);
    if (d.rows() != ranks[k - 1] || d.cols() != ranks[k])
      throw SpectraError("ChainComplex: d_" + std::to_string(bottom + static_cast<int>(k)) + " is " + shape(d) +
                         ", expected " + std::to_string(ranks[k - 1]) + "x" + std::to_string(ranks[k]));
    d = canonical_entries(d, base_);
  }
  for (std::size_t k = 2; k < ranks.size(); ++k)
    if (!is_zero_over(differentials[k - 1] * differentials[k], base_))
      throw InvariantError("ChainComplex: d_" + std::to_string(bottom + static_cast<int>(k) - 1) + " o d_" +
                           std::to_string(bottom + static_cast<int>(k)) + " != 0");
  std::size_t lo = 0, hi = ranks.size();
  while (lo < hi && ranks[lo] == 0) ++lo;
  while (hi > lo && ranks[hi - 1] == 0) --hi;
  if (lo == hi) {
    bottom_ = 0;
    return;
  }
  bottom_ = bottom + static_cast<int>(lo);
  ranks_.assign(ranks.begin() + lo, ranks.begin() + hi);
  diffs_.assign(differentials.begin() + lo, differentials.begin() + hi);
  diffs_[0] = IntMatrix(0, ranks_[0]);
}

ChainComplex ChainComplex::from_maps(BaseRing base, const std::map<int, std::size_t> &ranks,
                                     const std::map<int, IntMatrix> &differentials) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto &[n, r] : ranks)
    if (r > 0) {
      if (!any) lo = n;
      hi = n;
      any = true;
    }
  auto rank_at = [&](int n) {
    auto it = ranks.find(n);
    return it == ranks.end() ? std::size_t{0} : it->second;
  };
  for (const auto &[n, d] : differentials) {
    if (d.rows() != rank_at(n - 1) || d.cols() != rank_at(n))
      throw SpectraError("ChainComplex: d_" + std::to_string(n) + " is " + shape(d) + ", expected " +
                         std::to_string(rank_at(n - 1)) + "x" + std::to_string(rank_at(n)));
  }
  if (!any) return ChainComplex(std::move(base), 0, {}, {});
  std::vector<std::size_t> rs;
  std::vector<IntMatrix> ds;
  for (int n = lo; n <= hi; ++n) {
    rs.push_back(rank_at(n));
    auto it = differentials.find(n);
    ds.push_back(it != differentials.end() && n > lo ? it->second : IntMatrix());
  }
  return ChainComplex(std::move(base), lo, std::move(rs), std::move(ds));
}

std::size_t ChainComplex::rank(int n) const {
  if (n < bottom_ || n > top()) return 0;
  return ranks_[static_cast<std::size_t>(n - bottom_)];
}

IntMatrix ChainComplex::d(int n) const {
  if (n <= bottom_ || n > top()) return IntMatrix(rank(n - 1), rank(n));
  return diffs_[static_cast<std::size_t>(n - bottom_)];
}

std::size_t ChainComplex::total_rank() const {
  std::size_t t = 0;
  for (auto r : ranks_) t += r;
  return t;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_.base() == target_.base())) throw SpectraError("ChainMap: source and target have different bases");
  const BaseRing &base = target_.base();
  for (auto &[n, m] : components) {
    if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n))
      throw SpectraError("ChainMap: component in degree " + std::to_string(n) + " is " + shape(m) + ", expected " +
                         std::to_string(target_.rank(n)) + "x" + std::to_string(source_.rank(n)));
    if (m.empty() || is_zero_over(m, base)) continue;
    components_[n] = canonical_entries(m, base);
  }
  const int lo = std::min(source_.bottom(), target_.bottom());
  const int hi = std::max(source_.top(), target_.top()) + 1;
  for (int n = lo; n <= hi; ++n)
    if (!is_zero_over(target_.d(n) * component(n) - component(n - 1) * source_.d(n), base))
      throw InvariantError("ChainMap: d f != f d in degree " + std::to_string(n));
}

ChainMap ChainMap::identity(const ChainComplex &c) {
  std::map<int, IntMatrix> comps;
  for (int n = c.bottom(); n <= c.top(); ++n) comps[n] = IntMatrix::identity(c.rank(n));
  return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex &source, const ChainComplex &target) { return ChainMap(source, target, {}); }

IntMatrix ChainMap::component(int n) const {
  auto it = components_.find(n);
  if (it == components_.end()) return IntMatrix(target_.rank(n), source_.rank(n));
  return it->second;
}

ChainMap compose(const ChainMap &g, const ChainMap &f) {
  if (!(g.source() == f.target())) throw SpectraError("compose: chain maps are not composable");
  std::map<int, IntMatrix> comps;
  for (int n = f.source().bottom(); n <= f.source().top(); ++n) comps[n] = g.component(n) * f.component(n);
  return ChainMap(f.source(), g.target(), std::move(comps));
}

FgAbGroup homology(const ChainComplex &c, int n) {
  const BaseRing &base = c.base();
  const std::size_t rk_out = matrix_rank(c.d(n), base);
  FgAbGroup coker = cokernel_invariants(c.d(n + 1), base);
  return FgAbGroup(coker.rank() - rk_out, coker.torsion());
}

std::map<int, FgAbGroup> homology(const ChainComplex &c) {
  std::map<int, FgAbGroup> out;
  for (int n = c.bottom(); n <= c.top(); ++n) {
    FgAbGroup h = homology(c, n);
    if (!h.is_trivial()) out.emplace(n, std::move(h));
  }
  return out;
}

bool is_acyclic(const ChainComplex &c) { return homology(c).empty(); }

IntVector HomologyData::class_of(const IntVector &z) const {
  if (z.size() != cycles.rows()) throw SpectraError("class_of: vector has wrong length");
  IntVector y = cycle_coords * z;
  if (cycles * y != z) throw SpectraError("class_of: vector is not a cycle");
  return presentation.to_canonical(y);
}

HomologyData homology_data(const ChainComplex &c, int n) {
  require_integers(c, "homology_data");
  IntegralSmith s = integral_smith(c.d(n));
  const std::size_t dim = c.rank(n);
  const std::size_t k = dim - s.rank;
  HomologyData h;
  h.cycles = s.V.block(0, s.rank, dim, k);
  h.cycle_coords = s.V_inv.block(s.rank, 0, k, dim);
  h.presentation = Presentation(h.cycle_coords * c.d(n + 1));
  h.group = h.presentation.group();
  return h;
}

GroupMap homology_map(const ChainMap &f, int n) {
  HomologyData hs = homology_data(f.source(), n);
  HomologyData ht = homology_data(f.target(), n);
  IntMatrix m(ht.group.generator_count(), hs.group.generator_count());
  const IntMatrix fn = f.component(n);
  for (std::size_t k = 0; k < m.cols(); ++k) m.set_col(k, ht.class_of(fn * hs.generator(k)));
  return GroupMap(hs.group, ht.group, std::move(m));
}

ChainComplex shift(const ChainComplex &c, int k) {
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  const bool odd = (k % 2) != 0;
  for (int n = c.bottom(); n <= c.top(); ++n) {
    ranks[n + k] = c.rank(n);
    if (n > c.bottom()) diffs[n + k] = odd ? -c.d(n) : c.d(n);
  }
  return ChainComplex::from_maps(c.base(), ranks, diffs);
}

ChainMap shift(const ChainMap &f, int k) {
  std::map<int, IntMatrix> comps;
  for (int n = f.source().bottom(); n <= f.source().top(); ++n) comps[n + k] = f.component(n);
  return ChainMap(shift(f.source(), k), shift(f.target(), k), std::move(comps));
}

ChainComplex cone(const ChainMap &f) {
  const ChainComplex &s = f.source();
  const ChainComplex &t = f.target();
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  const int lo = std::min(s.bottom() + 1, t.bottom());
  const int hi = std::max(s.top() + 1, t.top());
  for (int n = lo; n <= hi; ++n) ranks[n] = s.rank(n - 1) + t.rank(n);
  for (int n = lo + 1; n <= hi; ++n) {
    IntMatrix d(ranks[n - 1], ranks[n]);
    d.set_block(0, 0, -s.d(n - 1));
    d.set_block(s.rank(n - 2), 0, f.component(n - 1));
    d.set_block(s.rank(n - 2), s.rank(n - 1), t.d(n));
    diffs[n] = std::move(d);
  }
  return ChainComplex::from_maps(s.base(), ranks, diffs);
}

ChainMap cone_inclusion(const ChainMap &f) {
  ChainComplex c = cone(f);
  std::map<int, IntMatrix> comps;
  for (int n = f.target().bottom(); n <= f.target().top(); ++n) {
    IntMatrix m(c.rank(n), f.target().rank(n));
    m.set_block(f.source().rank(n - 1), 0, IntMatrix::identity(f.target().rank(n)));
    comps[n] = std::move(m);
  }
  return ChainMap(f.target(), std::move(c), std::move(comps));
}

GroupMap cone_boundary_map(const ChainMap &f, int n) {
  ChainComplex c = cone(f);
  HomologyData hc = homology_data(c, n);
  HomologyData hs = homology_data(f.source(), n - 1);
  IntMatrix m(hs.group.generator_count(), hc.group.generator_count());
  const std::size_t len = f.source().rank(n - 1);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    IntVector y = hc.generator(k);
    m.set_col(k, hs.class_of(IntVector(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(len))));
  }
  return GroupMap(hc.group, hs.group, std::move(m));
}

ChainComplex fiber(const ChainMap &f) { return shift(cone(f), -1); }

ChainComplex tensor(const ChainComplex &c, const ChainComplex &d) {
  if (!(c.base() == d.base())) throw SpectraError("tensor: complexes have different bases");
  if (c.is_zero() || d.is_zero()) return ChainComplex(c.base(), 0, {}, {});
  const int lo = c.bottom() + d.bottom();
  const int hi = c.top() + d.top();
  // offset of the block C_i (x) D_{n-i} inside degree n
  auto offset = [&](int n, int i) {
    std::size_t o = 0;
    for (int a = c.bottom(); a < i; ++a) o += c.rank(a) * d.rank(n - a);
    return o;
  };
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (int n = lo; n <= hi; ++n) ranks[n] = offset(n, c.top() + 1);
  for (int n = lo + 1; n <= hi; ++n) {
    IntMatrix m(ranks[n - 1], ranks[n]);
    for (int i = c.bottom(); i <= c.top(); ++i) {
      const int j = n - i;
      if (c.rank(i) * d.rank(j) == 0) continue;
      const std::size_t col = offset(n, i);
      if (c.rank(i - 1) > 0)
        m.set_block(offset(n - 1, i - 1), col, kron(c.d(i), IntMatrix::identity(d.rank(j))));
      if (d.rank(j - 1) > 0) {
        IntMatrix blk = kron(IntMatrix::identity(c.rank(i)), d.d(j));
        m.set_block(offset(n - 1, i), col, (i % 2 != 0) ? -blk : blk);
      }
    }
    diffs[n] = std::move(m);
  }
  return ChainComplex::from_maps(c.base(), ranks, diffs);
}

namespace {

struct HomLayout {
  int lo = 0, hi = -1;
  // offset of Hom(C_i, D_{i+n}) inside degree n
  std::size_t offset(const ChainComplex &c, const ChainComplex &d, int n, int i) const {
    std::size_t o = 0;
    for (int a = c.bottom(); a < i; ++a) o += c.rank(a) * d.rank(a + n);
    return o;
  }
  std::size_t rank(const ChainComplex &c, const ChainComplex &d, int n) const { return offset(c, d, n, c.top() + 1); }
};

HomLayout hom_layout(const ChainComplex &c, const ChainComplex &d) {
  HomLayout l;
  if (c.is_zero() || d.is_zero()) return l;
  l.lo = d.bottom() - c.top();
  l.hi = d.top() - c.bottom();
  return l;
}

} // namespace

ChainComplex hom_complex(const ChainComplex &c, const ChainComplex &d) {
  if (!(c.base() == d.base())) throw SpectraError("hom_complex: complexes have different bases");
  HomLayout l = hom_layout(c, d);
  std::map<int, std::size_t> ranks;
  std::map<int, IntMatrix> diffs;
  for (int n = l.lo; n <= l.hi; ++n) ranks[n] = l.rank(c, d, n);
  for (int n = l.lo + 1; n <= l.hi; ++n) {
    IntMatrix m(ranks[n - 1], ranks[n]);
    const bool odd = (n % 2) != 0;
    for (int i = c.bottom(); i <= c.top(); ++i) {
      if (c.rank(i) * d.rank(i + n) == 0) continue;
      const std::size_t col = l.offset(c, d, n, i);
      // f_i -> d o f_i, a map C_i -> D_{i+n-1}
      if (d.rank(i + n - 1) > 0)
        m.set_block(l.offset(c, d, n - 1, i), col, kron(d.d(i + n), IntMatrix::identity(c.rank(i))));
      // f_i -> -(-1)^n f_i o d, a map C_{i+1} -> D_{i+n}
      if (c.rank(i + 1) > 0) {
        IntMatrix blk = kron(IntMatrix::identity(d.rank(i + n)), c.d(i + 1).transpose());
        m.set_block(l.offset(c, d, n - 1, i + 1), col, odd ? blk : -blk);
      }
    }
    diffs[n] = std::move(m);
  }
  return ChainComplex::from_maps(c.base(), ranks, diffs);
}

IntMatrix hom_component(const ChainComplex &c, const ChainComplex &d, int n, const IntVector &element, int i) {
  HomLayout l = hom_layout(c, d);
  if (element.size() != l.rank(c, d, n)) throw SpectraError("hom_component: element has wrong length");
  IntMatrix m(d.rank(i + n), c.rank(i));
  if (m.empty()) return m;
  const std::size_t off = l.offset(c, d, n, i);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t s = 0; s < m.cols(); ++s) m(r, s) = element[off + r * m.cols() + s];
  return m;
}

IntVector hom_element(const ChainComplex &c, const ChainComplex &d, int n, const std::map<int, IntMatrix> &components) {
  HomLayout l = hom_layout(c, d);
  IntVector v(l.rank(c, d, n));
  for (const auto &[i, m] : components) {
    if (m.rows() != d.rank(i + n) || m.cols() != c.rank(i))
      throw SpectraError("hom_element: component " + std::to_string(i) + " has wrong shape");
    if (m.empty()) continue;
    const std::size_t off = l.offset(c, d, n, i);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t s = 0; s < m.cols(); ++s) v[off + r * m.cols() + s] = m(r, s);
  }
  return v;
}

FgAbGroup homotopy_classes(const ChainComplex &c, const ChainComplex &d) { return homology(hom_complex(c, d), 0); }

ChainComplex moore_complex(const FgAbGroup &a) {
  const std::size_t n = a.generator_count();
  const std::size_t m = a.torsion().size();
  IntMatrix r(n, m);
  for (std::size_t t = 0; t < m; ++t) r(a.rank() + t, t) = a.torsion()[t];
  return moore_complex(r);
}

ChainComplex moore_complex(const IntMatrix &relations) {
  IntMatrix r = matrix_rank(relations) == relations.cols() ? relations : image_basis(relations);
  return ChainComplex::from_maps(BaseRing::integers(), {{0, r.rows()}, {1, r.cols()}}, {{1, r}});
}

ChainComplex sphere(int n, std::size_t rank, const BaseRing &base) {
  return ChainComplex(base, n, {rank}, {});
}

ChainComplex base_change(const ChainComplex &c, const BaseRing &ring) {
  if (!ring.is_base_change_of(c.base()))
    throw SpectraError("base_change: " + ring.to_string() + " is not a base change of " + c.base().to_string());
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (int n = c.bottom(); n <= c.top(); ++n) {
    ranks.push_back(c.rank(n));
    diffs.push_back(c.d(n));
  }
  return ChainComplex(ring, c.bottom(), std::move(ranks), std::move(diffs));
}

std::map<int, std::size_t> mod_p_homology(const ChainComplex &c, std::uint64_t p) {
  ChainComplex cp = base_change(c, BaseRing::field_mod(p));
  std::map<int, std::size_t> out;
  for (int n = cp.bottom(); n <= cp.top(); ++n) {
    const std::size_t dim = homology(cp, n).rank();
    if (dim > 0) out[n] = dim;
  }
  return out;
}

std::map<int, PadicModule> completed_homology(const ChainComplex &c, std::uint64_t p) {
  const BaseRing &base = c.base();
  const bool local = base.kind() == BaseRing::Kind::local_at && base.prime() == p;
  if (base.kind() != BaseRing::Kind::integers && !local)
    throw SpectraError("completed_homology: base must be Z or Z_(" + std::to_string(p) + ")");
  std::map<int, PadicModule> out;
  for (const auto &[n, h] : homology(c)) {
    PadicModule m = local ? PadicModule(p, h.rank(), h.torsion()) : l0(h, p);
    if (!m.is_zero()) out.emplace(n, std::move(m));
  }
  return out;
}

std::optional<std::map<int, RatMatrix>> contraction(const ChainComplex &c) {
  const BaseRing &base = c.base();
  std::map<int, RatMatrix> h;
  for (int n = c.bottom(); n <= c.top(); ++n) {
    // d_{n+1} h_n = 1 - h_{n-1} d_n; the right side consists of cycles
    RatMatrix rhs = RatMatrix::identity(c.rank(n));
    if (h.count(n - 1)) rhs = rhs - h[n - 1] * to_rational(c.d(n));
    const IntMatrix up = c.d(n + 1);
    RatMatrix hn(c.rank(n + 1), c.rank(n));
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      auto x = solve(up, rhs.col(j), base);
      if (!x) return std::nullopt;
      hn.set_col(j, *x);
    }
    h[n] = std::move(hn);
  }
  return h;
}

bool is_contraction(const ChainComplex &c, const std::map<int, RatMatrix> &h) {
  auto get = [&](int n) {
    auto it = h.find(n);
    if (it != h.end()) {
      if (it->second.rows() != c.rank(n + 1) || it->second.cols() != c.rank(n))
        throw SpectraError("is_contraction: h_" + std::to_string(n) + " has wrong shape");
      return it->second;
    }
    return RatMatrix(c.rank(n + 1), c.rank(n));
  };
  for (const auto &[n, m] : h)
    for (const auto &x : m.data())
      if (!c.base().contains(x)) return false;
  for (int n = c.bottom(); n <= c.top(); ++n) {
    RatMatrix e = to_rational(c.d(n + 1)) * get(n) + get(n - 1) * to_rational(c.d(n)) -
                  RatMatrix::identity(c.rank(n));
    for (const auto &x : e.data())
      if (!is_zero_over(x, c.base())) return false;
  }
  return true;
}

} // namespace spectra
