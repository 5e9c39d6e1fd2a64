#include "spectra/abelian.hpp"

namespace spectra {

namespace {

// Relation matrix of a group's standard presentation: one column per
// torsion generator.
IntMatrix standard_relations(const FgAbGroup &g) {
  IntMatrix r(g.generator_count(), g.torsion().size());
  for (std::size_t t = 0; t < g.torsion().size(); ++t) r(g.rank() + t, t) = g.torsion()[t];
  return r;
}

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

} // namespace

Presentation::Presentation(IntMatrix relations) : relations_(std::move(relations)) {
  const std::size_t n = relations_.rows();
  IntegralSmith s = integral_smith(relations_);
  std::vector<std::size_t> picked;
  for (std::size_t i = s.rank; i < n; ++i) picked.push_back(i);
  IntVector torsion;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) {
      picked.push_back(i);
      torsion.push_back(s.D(i, i));
    }
  group_ = FgAbGroup(n - s.rank, std::move(torsion));
  to_canonical_ = IntMatrix(picked.size(), n);
  from_canonical_ = IntMatrix(n, picked.size());
  for (std::size_t k = 0; k < picked.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      to_canonical_(k, j) = s.U(picked[k], j);
      from_canonical_(j, k) = s.U_inv(j, picked[k]);
    }
}

IntVector Presentation::to_canonical(const IntVector &ambient) const {
  if (ambient.size() != ambient_rank()) throw SpectraError("Presentation: ambient vector has wrong length");
  return reduce_element(group_, to_canonical_ * ambient);
}

FgAbGroup from_presentation(const IntMatrix &relations) { return cokernel_invariants(relations); }

IntVector reduce_element(const FgAbGroup &g, IntVector x) {
  if (x.size() != g.generator_count()) throw SpectraError("element has wrong number of coordinates");
  for (std::size_t t = 0; t < g.torsion().size(); ++t) x[g.rank() + t] = mod_nonneg(x[g.rank() + t], g.torsion()[t]);
  return x;
}

GroupMap::GroupMap(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
    throw SpectraError("GroupMap: matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                       ", expected " + std::to_string(target_.generator_count()) + "x" +
                       std::to_string(source_.generator_count()));
  const IntVector src = source_.generator_orders();
  const IntVector tgt = target_.generator_orders();
  for (std::size_t j = 0; j < src.size(); ++j)
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      Integer &m = matrix_(i, j);
      if (src[j] != 0) {
        bool ok = tgt[i] == 0 ? m == 0 : divides(tgt[i], src[j] * m);
        if (!ok)
          throw SpectraError("GroupMap: generator " + std::to_string(j) + " of order " + src[j].get_str() +
                             " has an image of larger order in coordinate " + std::to_string(i));
      }
      if (tgt[i] != 0) m = mod_nonneg(m, tgt[i]);
    }
}

GroupMap GroupMap::identity(const FgAbGroup &a) {
  return GroupMap(a, a, IntMatrix::identity(a.generator_count()));
}

GroupMap GroupMap::zero(const FgAbGroup &source, const FgAbGroup &target) {
  return GroupMap(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

GroupMap GroupMap::multiplication(const FgAbGroup &a, const Integer &m) {
  return GroupMap(a, a, scaled(IntMatrix::identity(a.generator_count()), m));
}

IntVector GroupMap::apply(const IntVector &x) const { return reduce_element(target_, matrix_ * x); }

std::optional<IntVector> GroupMap::preimage(const IntVector &y) const {
  IntMatrix system = hconcat(matrix_, standard_relations(target_));
  auto z = solve_integral(system, y);
  if (!z) return std::nullopt;
  z->resize(source_.generator_count());
  return reduce_element(source_, std::move(*z));
}

bool GroupMap::is_injective() const { return kernel(*this).source().is_trivial(); }

bool GroupMap::is_surjective() const { return cokernel(*this).target().is_trivial(); }

GroupMap induced_map(const Presentation &source, const Presentation &target, const IntMatrix &ambient) {
  if (ambient.rows() != target.ambient_rank() || ambient.cols() != source.ambient_rank())
    throw SpectraError("induced_map: ambient matrix has the wrong shape");
  IntMatrix m(target.group().generator_count(), source.group().generator_count());
  for (std::size_t k = 0; k < source.group().generator_count(); ++k)
    m.set_col(k, target.to_canonical(ambient * source.generator(k)));
  return GroupMap(source.group(), target.group(), m);
}

GroupMap compose(const GroupMap &g, const GroupMap &f) {
  if (!(f.target() == g.source()))
    throw SpectraError("compose: target " + f.target().to_string() + " does not match source " + g.source().to_string());
  return GroupMap(f.source(), g.target(), g.matrix() * f.matrix());
}

GroupMap subgroup(const FgAbGroup &g, const IntMatrix &gens) {
  if (gens.rows() != g.generator_count()) throw SpectraError("subgroup: generators have wrong length");
  IntMatrix rel = standard_relations(g);
  IntMatrix basis = image_basis(hconcat(gens, rel));
  IntegralSmith bs = integral_smith(basis);
  IntMatrix coords(basis.cols(), rel.cols());
  for (std::size_t c = 0; c < rel.cols(); ++c) {
    auto y = solve_integral(bs, rel.col(c));
    if (!y) throw InvariantError("subgroup: relation outside the spanned lattice");
    coords.set_col(c, *y);
  }
  Presentation pres(coords);
  IntMatrix incl(g.generator_count(), pres.group().generator_count());
  for (std::size_t k = 0; k < pres.group().generator_count(); ++k)
    incl.set_col(k, basis * pres.generator(k));
  return GroupMap(pres.group(), g, incl);
}

GroupMap kernel(const GroupMap &f) {
  const std::size_t ns = f.source().generator_count();
  IntMatrix system = hconcat(f.matrix(), standard_relations(f.target()));
  IntMatrix k = kernel_basis(system);
  return subgroup(f.source(), k.block(0, 0, ns, k.cols()));
}

GroupMap cokernel(const GroupMap &f) {
  const std::size_t nt = f.target().generator_count();
  Presentation pres(hconcat(standard_relations(f.target()), f.matrix()));
  IntMatrix proj(pres.group().generator_count(), nt);
  for (std::size_t j = 0; j < nt; ++j) proj.set_col(j, pres.to_canonical(unit_vector(nt, j)));
  return GroupMap(f.target(), pres.group(), proj);
}

GroupMap image(const GroupMap &f) { return subgroup(f.target(), f.matrix()); }

GroupMap lift_through(const GroupMap &f, const GroupMap &mono) {
  if (!(f.target() == mono.target())) throw SpectraError("lift_through: targets differ");
  const std::size_t n = f.source().generator_count();
  IntMatrix m(mono.source().generator_count(), n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = mono.preimage(f.matrix().col(j));
    if (!x) throw SpectraError("lift_through: image is not contained in the subgroup");
    m.set_col(j, *x);
  }
  return GroupMap(f.source(), mono.source(), m);
}

GroupMap descend_through(const GroupMap &f, const GroupMap &epi) {
  if (!(f.source() == epi.source())) throw SpectraError("descend_through: sources differ");
  if (!compose(f, kernel(epi)).is_zero()) throw SpectraError("descend_through: map does not vanish on the kernel");
  const std::size_t n = epi.target().generator_count();
  IntMatrix m(f.target().generator_count(), n);
  for (std::size_t j = 0; j < n; ++j) {
    auto y = epi.preimage(unit_vector(n, j));
    if (!y) throw SpectraError("descend_through: map is not surjective");
    m.set_col(j, f.apply(*y));
  }
  return GroupMap(epi.target(), f.target(), m);
}

FgAbGroup homology_at(const GroupMap &f, const GroupMap &g) {
  if (!compose(g, f).is_zero()) throw SpectraError("homology_at: composite is nonzero");
  GroupMap k = kernel(g);
  return cokernel(lift_through(f, k)).target();
}

bool is_exact(const GroupMap &f, const GroupMap &g) {
  if (!compose(g, f).is_zero()) return false;
  return homology_at(f, g).is_trivial();
}

namespace {

enum class Functor { hom, ext, tor, tensor };

// Value of a bifunctor on cyclic atoms; 0 encodes Z, 1 encodes the zero group.
Integer atom_value(Functor fn, const Integer &a, const Integer &b) {
  const bool af = a == 0, bf = b == 0;
  switch (fn) {
  case Functor::hom:
    if (af) return b;
    return bf ? Integer(1) : gcd(a, b);
  case Functor::ext:
    if (af) return 1;
    return bf ? a : gcd(a, b);
  case Functor::tor:
    if (af || bf) return 1;
    return gcd(a, b);
  case Functor::tensor:
    if (af) return b;
    if (bf) return a;
    return gcd(a, b);
  }
  return 1;
}

FgAbGroup bifunctor(Functor fn, const FgAbGroup &a, const FgAbGroup &b) {
  IntVector orders;
  for (const auto &x : a.generator_orders())
    for (const auto &y : b.generator_orders()) orders.push_back(atom_value(fn, x, y));
  return FgAbGroup::from_cyclic_orders(0, orders);
}

} // namespace

FgAbGroup hom(const FgAbGroup &a, const FgAbGroup &b) { return bifunctor(Functor::hom, a, b); }
FgAbGroup ext(const FgAbGroup &a, const FgAbGroup &b) { return bifunctor(Functor::ext, a, b); }
FgAbGroup tor(const FgAbGroup &a, const FgAbGroup &b) { return bifunctor(Functor::tor, a, b); }
FgAbGroup tensor(const FgAbGroup &a, const FgAbGroup &b) { return bifunctor(Functor::tensor, a, b); }

FgAbGroup mod_power(const FgAbGroup &a, const Integer &m) {
  if (m < 1) throw SpectraError("mod_power requires m >= 1");
  IntVector orders(a.rank(), m);
  for (const auto &d : a.torsion()) orders.push_back(gcd(d, m));
  return FgAbGroup::from_cyclic_orders(0, orders);
}

FgAbGroup ann_power(const FgAbGroup &a, const Integer &m) {
  if (m < 1) throw SpectraError("ann_power requires m >= 1");
  IntVector orders;
  for (const auto &d : a.torsion()) orders.push_back(gcd(d, m));
  return FgAbGroup::from_cyclic_orders(0, orders);
}

FgAbGroup localize_group(const FgAbGroup &a, const PrimeSet &q) {
  IntVector orders;
  for (const auto &d : a.torsion()) orders.push_back(q.strip(d));
  return FgAbGroup::from_cyclic_orders(a.rank(), orders);
}

IntVector p_primary_torsion(const FgAbGroup &a, std::uint64_t p) {
  IntVector out;
  const Integer prime(static_cast<unsigned long>(p));
  for (const auto &d : a.torsion()) {
    unsigned long v = valuation(d, p);
    if (v > 0) out.push_back(pow_ui(prime, v));
  }
  return out;
}

HomPresentation::HomPresentation(FgAbGroup source, FgAbGroup target)
    : source_(std::move(source)), target_(std::move(target)) {
  const IntVector a = source_.generator_orders();
  const IntVector b = target_.generator_orders();
  unit_ = IntMatrix(b.size(), a.size());
  IntVector orders;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      Integer unit, order;
      if (a[j] == 0) {
        unit = 1;
        order = b[i];
      } else if (b[i] == 0) {
        unit = 0;
        order = 1;
      } else {
        order = gcd(a[j], b[i]);
        unit = b[i] / order;
      }
      unit_(i, j) = unit;
      orders.push_back(order);
    }
  IntMatrix rel(orders.size(), 0);
  std::vector<IntVector> cols;
  for (std::size_t k = 0; k < orders.size(); ++k)
    if (orders[k] != 0) {
      IntVector c(orders.size());
      c[k] = orders[k];
      cols.push_back(std::move(c));
    }
  rel = IntMatrix(orders.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) rel.set_col(c, cols[c]);
  presentation_ = Presentation(std::move(rel));
}

IntVector HomPresentation::coordinates(const IntMatrix &matrix) const {
  GroupMap checked(source_, target_, matrix);
  const IntVector b = target_.generator_orders();
  const std::size_t na = source_.generator_count();
  IntVector ambient(b.size() * na);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Integer &entry = checked.matrix()(i, j);
      if (unit_(i, j) == 0) continue;
      if (!divides(unit_(i, j), entry)) throw InvariantError("HomPresentation: entry not a multiple of the unit");
      ambient[i * na + j] = exact_div(entry, unit_(i, j));
    }
  return presentation_.to_canonical(ambient);
}

IntMatrix HomPresentation::generator(std::size_t k) const {
  IntVector amb = presentation_.generator(k);
  const std::size_t na = source_.generator_count();
  IntMatrix m(target_.generator_count(), na);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < na; ++j) m(i, j) = amb[i * na + j] * unit_(i, j);
  return GroupMap(source_, target_, m).matrix();
}

} // namespace spectra
