#include "spectra/ring.hpp"

#include <algorithm>
#include <sstream>

namespace spectra {

namespace {

std::vector<std::uint64_t> checked_primes(std::vector<std::uint64_t> primes) {
  for (auto q : primes)
    if (!is_prime(q)) throw SpectraError("not a prime: " + std::to_string(q));
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

Integer remove_prime(Integer n, std::uint64_t q) {
  while (mpz_divisible_ui_p(n.get_mpz_t(), q))
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
  return n;
}

} // namespace

PrimeSet PrimeSet::finite(std::vector<std::uint64_t> primes) {
  PrimeSet s;
  s.listed_ = checked_primes(std::move(primes));
  return s;
}

PrimeSet PrimeSet::all_except(std::vector<std::uint64_t> primes) {
  PrimeSet s;
  s.cofinite_ = true;
  s.listed_ = checked_primes(std::move(primes));
  return s;
}

bool PrimeSet::contains(std::uint64_t q) const {
  bool listed = std::binary_search(listed_.begin(), listed_.end(), q);
  return cofinite_ ? !listed : listed;
}

Integer PrimeSet::factor_of(const Integer &n) const {
  if (n == 0) throw SpectraError("factor_of(0)");
  Integer m = abs(n);
  if (!cofinite_) {
    Integer rest = m;
    for (auto q : listed_) rest = remove_prime(rest, q);
    return m / rest;
  }
  // complement: keep everything except the listed primes
  Integer kept = m;
  for (auto q : listed_) kept = remove_prime(kept, q);
  return kept;
}

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  if (cofinite_) os << "all primes except ";
  os << "{";
  for (std::size_t i = 0; i < listed_.size(); ++i) os << (i ? "," : "") << listed_[i];
  os << "}";
  return os.str();
}

BaseRing BaseRing::inverted(std::vector<std::uint64_t> primes) {
  return inverted(PrimeSet::finite(std::move(primes)));
}

BaseRing BaseRing::inverted(const PrimeSet &primes) {
  BaseRing r;
  if (primes.is_empty()) return r;
  if (primes.is_cofinite() && primes.listed().size() == 1) return local_at(primes.listed().front());
  if (primes.is_cofinite())
    throw SpectraError("only finite sets or the complement of a single prime can be inverted");
  r.kind_ = Kind::inverted;
  r.inverted_ = primes;
  return r;
}

BaseRing BaseRing::local_at(std::uint64_t p) {
  if (!is_prime(p)) throw SpectraError("local_at: not a prime: " + std::to_string(p));
  BaseRing r;
  r.kind_ = Kind::local_at;
  r.p_ = p;
  r.inverted_ = PrimeSet::all_except({p});
  return r;
}

BaseRing BaseRing::field_mod(std::uint64_t p) {
  if (!is_prime(p)) throw SpectraError("field_mod: not a prime: " + std::to_string(p));
  BaseRing r;
  r.kind_ = Kind::field_mod;
  r.p_ = p;
  return r;
}

bool BaseRing::is_unit(const Integer &n) const {
  if (n == 0) return false;
  switch (kind_) {
  case Kind::integers: return abs(n) == 1;
  case Kind::field_mod: return !mpz_divisible_ui_p(n.get_mpz_t(), p_);
  default: return inverted_.supports(n);
  }
}

bool BaseRing::contains(const Rational &q) const {
  const Integer &den = q.get_den();
  switch (kind_) {
  case Kind::integers: return den == 1;
  case Kind::field_mod: return !mpz_divisible_ui_p(den.get_mpz_t(), p_);
  default: return inverted_.supports(den);
  }
}

Integer BaseRing::normalize(const Integer &n) const {
  if (n == 0) return 0;
  switch (kind_) {
  case Kind::integers: return abs(n);
  case Kind::field_mod: return mpz_divisible_ui_p(n.get_mpz_t(), p_) ? Integer(0) : Integer(1);
  default: return inverted_.strip(n);
  }
}

Rational BaseRing::unit_part(const Integer &n) const {
  if (n == 0) throw SpectraError("unit_part(0)");
  if (kind_ == Kind::field_mod) return Rational(mod_nonneg(n, Integer(static_cast<unsigned long>(p_))));
  Rational u(n, normalize(n));
  u.canonicalize();
  return u;
}

bool BaseRing::is_base_change_of(const BaseRing &from) const {
  if (*this == from) return true;
  auto inverted_in_target = [&](std::uint64_t q) {
    switch (kind_) {
    case Kind::integers: return false;
    case Kind::field_mod: return q != p_;
    default: return inverted_.contains(q);
    }
  };
  switch (from.kind_) {
  case Kind::integers: return true;
  case Kind::field_mod: return false;
  case Kind::local_at:
    // Z_(p) -> F_p is the only proper target
    return kind_ == Kind::field_mod && p_ == from.p_;
  case Kind::inverted:
    if (kind_ == Kind::integers) return false;
    for (auto q : from.inverted_.listed())
      if (!inverted_in_target(q)) return false;
    return true;
  }
  return false;
}

std::string BaseRing::to_string() const {
  switch (kind_) {
  case Kind::integers: return "Z";
  case Kind::field_mod: return "F_" + std::to_string(p_);
  case Kind::local_at: return "Z_(" + std::to_string(p_) + ")";
  case Kind::inverted: {
    std::string s = "Z[1/";
    const auto &ps = inverted_.listed();
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
    return s + "]";
  }
  }
  return "?";
}

} // namespace spectra
