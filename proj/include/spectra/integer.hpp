#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spectra {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised for contract violations: malformed input, mismatched shapes,
/// maps whose endpoints do not line up.
class SpectraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant check fails; carries a certificate.
class InvariantError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Integer gcd(const Integer &a, const Integer &b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer &a, const Integer &b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool divides(const Integer &d, const Integer &n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient rounded toward zero.
inline Integer tdiv(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Exact division; the caller guarantees b | a.
inline Integer exact_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least nonnegative residue.
inline Integer mod_nonneg(const Integer &a, const Integer &m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

inline Integer pow_ui(const Integer &base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Multiplicative inverse modulo m; throws if none exists.
inline Integer inverse_mod(const Integer &a, const Integer &m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw SpectraError("inverse_mod: " + a.get_str() + " is not invertible mod " + m.get_str());
  return r;
}

/// p-adic valuation of a nonzero integer.
inline unsigned long valuation(Integer n, unsigned long p) {
  if (n == 0) throw SpectraError("valuation of zero");
  unsigned long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

/// Parses a decimal integer; throws SpectraError on malformed text.
inline Integer parse_integer(std::string_view text) {
  Integer z;
  std::string s(text);
  if (s.empty() || z.set_str(s, 10) != 0)
    throw SpectraError("not a decimal integer: '" + s + "'");
  return z;
}

/// Parses "a" or "a/b" in lowest terms.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw SpectraError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer &z) { return z.get_str(); }

inline std::string to_string(const Rational &q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool fits_u64(const Integer &z) { return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 63; }

inline std::uint64_t to_u64(const Integer &z) {
  if (!fits_u64(z)) throw SpectraError("integer out of range: " + z.get_str());
  return static_cast<std::uint64_t>(z.get_ui());
}

} // namespace spectra
