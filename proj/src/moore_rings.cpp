#include "spectra/moore_rings.hpp"

#include <sstream>

namespace spectra {

namespace {

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

std::string column_text(const IntMatrix &m, std::size_t j) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? "," : "") + m(i, j).get_str();
  return s + ")";
}

// Checks that coker(relations) is Z generated by the class of t_top, and
// that `phi` kills every relation. Returns the report or throws.
QuotientReport certify_free_quotient(IntMatrix relations, std::size_t top, const std::vector<Rational> &phi,
                                     const std::string &label) {
  QuotientReport rep;
  Presentation pres(relations);
  rep.cokernel = pres.group();
  if (!(rep.cokernel == FgAbGroup::free(1)))
    throw InvariantError(label + ": cokernel is " + rep.cokernel.to_string() + ", expected Z");
  IntVector g = pres.to_canonical(unit_vector(relations.rows(), top));
  if (abs(g[0]) != 1) throw InvariantError(label + ": t_" + std::to_string(top) + " does not generate the cokernel");
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < relations.rows(); ++i) s += Rational(relations(i, j)) * phi[i];
    if (s != 0) throw InvariantError(label + ": phi does not vanish on relation " + column_text(relations, j));
  }
  rep.relations = std::move(relations);
  rep.generator_degree = top;
  rep.generator_image = phi[top];
  return rep;
}

} // namespace

IntVector TruncatedDpRing::multiply(const IntVector &a, const IntVector &b) const {
  const std::size_t n = truncation();
  if (a.size() != n + 1 || b.size() != n + 1) throw SpectraError("TruncatedDpRing: element has wrong length");
  IntVector out(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    if (a[r] == 0) continue;
    for (std::size_t s = 0; r + s <= n; ++s)
      if (b[s] != 0) out[r + s] += a[r] * b[s] * constants_.m(r, s);
  }
  return out;
}

Rational TruncatedDpRing::phi(const IntVector &a) const {
  if (a.size() != truncation() + 1) throw SpectraError("TruncatedDpRing: element has wrong length");
  Rational s = 0;
  for (std::size_t r = 0; r < a.size(); ++r) s += Rational(a[r], constants_.m(r));
  s.canonicalize();
  return s;
}

IntVector TruncatedDpRing::basis(std::size_t r) const { return unit_vector(truncation() + 1, r); }

IntMatrix dp_relation_matrix(const PrimeSet &q, std::size_t n) {
  if (n < 1) throw SpectraError("dp_relation_matrix needs N >= 1");
  DpConstants c = dp_constants(q, n);
  IntMatrix m(n + 1, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = 1;
    m(r + 1, r) = -c.m(1, r);
  }
  return m;
}

QuotientReport dp_quotient(const PrimeSet &q, std::size_t n) {
  DpConstants c = dp_constants(q, n);
  std::vector<Rational> phi;
  for (std::size_t r = 0; r <= n; ++r) phi.emplace_back(Integer(1), c.m(r));
  return certify_free_quotient(dp_relation_matrix(q, n), n, phi, "dp_quotient(" + q.to_string() + ", " + std::to_string(n) + ")");
}

QuotientReport s_inv_p_quotient(std::uint64_t p, std::size_t n) {
  if (!is_prime(p)) throw SpectraError("s_inv_p_quotient: not a prime: " + std::to_string(p));
  const Integer P(static_cast<unsigned long>(p));
  IntMatrix m(n + 1, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = 1;
    m(r + 1, r) = -P;
  }
  std::vector<Rational> phi;
  for (std::size_t r = 0; r <= n; ++r) phi.emplace_back(Integer(1), pow_ui(P, r));
  return certify_free_quotient(std::move(m), n, phi, "s_inv_p_quotient(" + std::to_string(p) + ", " + std::to_string(n) + ")");
}

QuotientReport s_mod_p_inf_quotient(std::uint64_t p, std::size_t n) {
  if (!is_prime(p)) throw SpectraError("s_mod_p_inf_quotient: not a prime: " + std::to_string(p));
  const Integer P(static_cast<unsigned long>(p));
  const std::string label = "s_mod_p_inf_quotient(" + std::to_string(p) + ", " + std::to_string(n) + ")";
  IntMatrix m(n + 1, n + 1);
  m(0, 0) = -P;
  for (std::size_t r = 1; r <= n; ++r) {
    m(r - 1, r) = 1;
    m(r, r) = -P;
  }
  if (matrix_rank(m) != n + 1) throw InvariantError(label + ": matrix is not injective");
  Presentation pres(m);
  const Integer order = pow_ui(P, n + 1);
  if (!(pres.group() == FgAbGroup::cyclic(order)))
    throw InvariantError(label + ": cokernel is " + pres.group().to_string() + ", expected Z/" + order.get_str());
  IntVector g = pres.to_canonical(unit_vector(n + 1, n));
  if (gcd(g[0], P) != 1) throw InvariantError(label + ": t^N does not generate the cokernel");
  // t^r -> p^{-1-r} mod Z kills every relation
  for (std::size_t j = 0; j <= n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i <= n; ++i) s += Rational(m(i, j), pow_ui(P, i + 1));
    s.canonicalize();
    if (s.get_den() != 1) throw InvariantError(label + ": embedding does not vanish on relation " + column_text(m, j));
  }
  QuotientReport rep;
  rep.relations = std::move(m);
  rep.cokernel = pres.group();
  rep.generator_degree = n;
  rep.generator_image = Rational(Integer(1), order);
  return rep;
}

PolyModule::PolyModule(IntVector coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string PolyModule::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << (c_[k] < 0 ? " - " : " + ");
    else if (c_[k] < 0) os << "-";
    Integer a = abs(c_[k]);
    if (k == 0 || a != 1) os << a;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

PolyModule truncated_division(const PolyModule &f) {
  const IntVector &c = f.coefficients();
  if (c.size() <= 1) return PolyModule();
  return PolyModule(IntVector(c.begin() + 1, c.end()));
}

PolyModule multiply_by_t(const PolyModule &f) {
  if (f.coefficients().empty()) return PolyModule();
  IntVector c(1, Integer(0));
  c.insert(c.end(), f.coefficients().begin(), f.coefficients().end());
  return PolyModule(std::move(c));
}

IntMatrix truncated_division_matrix(std::size_t n) {
  IntMatrix m(n, n + 1);
  for (std::size_t r = 1; r <= n; ++r) m(r - 1, r) = 1;
  return m;
}

} // namespace spectra
