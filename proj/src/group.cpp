#include "spectra/group.hpp"

#include <sstream>

namespace spectra {

FgAbGroup::FgAbGroup(std::size_t rank, IntVector torsion) : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw SpectraError("torsion factor must be >= 2, got " + torsion_[i].get_str());
    if (i > 0 && !divides(torsion_[i - 1], torsion_[i]))
      throw SpectraError("torsion factors must form a divisor chain: " + torsion_[i - 1].get_str() +
                         " does not divide " + torsion_[i].get_str());
  }
}

FgAbGroup FgAbGroup::cyclic(const Integer &n) { return from_cyclic_orders(0, {n}); }

FgAbGroup FgAbGroup::from_cyclic_orders(std::size_t rank, const IntVector &orders) {
  IntVector t;
  for (const auto &o : orders) {
    if (o == 0) ++rank;
    else if (abs(o) != 1) t.push_back(abs(o));
  }
  // pairwise gcd/lcm sweep: after pass i, t[i] divides every later entry
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Integer g = gcd(t[i], t[j]);
      Integer l = lcm(t[i], t[j]);
      t[i] = g;
      t[j] = l;
    }
  IntVector chain;
  for (auto &d : t)
    if (d != 1) chain.push_back(d);
  return FgAbGroup(rank, std::move(chain));
}

IntVector FgAbGroup::generator_orders() const {
  IntVector o(rank_, Integer(0));
  o.insert(o.end(), torsion_.begin(), torsion_.end());
  return o;
}

Integer FgAbGroup::order() const {
  if (rank_ != 0) throw SpectraError("order of an infinite group");
  Integer n = 1;
  for (const auto &d : torsion_) n *= d;
  return n;
}

Integer FgAbGroup::exponent() const {
  if (rank_ != 0) return 0;
  return torsion_.empty() ? Integer(1) : torsion_.back();
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << "Z";
    if (rank_ > 1) os << "^" << rank_;
    first = false;
  }
  for (const auto &d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

FgAbGroup direct_sum(const FgAbGroup &a, const FgAbGroup &b) {
  IntVector orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FgAbGroup::from_cyclic_orders(a.rank() + b.rank(), orders);
}

} // namespace spectra
