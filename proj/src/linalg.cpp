#include "spectra/linalg.hpp"

#include <utility>

namespace spectra {

namespace {

// Euclidean structure of the base ring as seen by the elimination loop.
class Euclid {
public:
  explicit Euclid(const BaseRing &ring) : ring_(ring) {
    if (ring.is_field()) modulus_ = Integer(static_cast<unsigned long>(ring.prime()));
  }

  bool field() const { return modulus_ != 0; }

  Integer canon(const Integer &x) const { return field() ? mod_nonneg(x, modulus_) : x; }

  Integer norm(const Integer &x) const {
    if (x == 0) return 0;
    switch (ring_.kind()) {
    case BaseRing::Kind::integers: return abs(x);
    case BaseRing::Kind::field_mod: return 1;
    default: return ring_.normalize(x);
    }
  }

  // (s, q) with s a unit and norm(s*a - q*b) < norm(b).
  std::pair<Integer, Integer> step(const Integer &a, const Integer &b) const {
    switch (ring_.kind()) {
    case BaseRing::Kind::integers: return {Integer(1), tdiv(a, b)};
    case BaseRing::Kind::field_mod: return {b, a};
    default: {
      Integer bn = ring_.normalize(b);
      Integer unit = exact_div(b, bn);
      return {unit, tdiv(a, bn)};
    }
    }
  }

  bool pivot_divides(const Integer &pivot, const Integer &x) const {
    if (field()) return true;
    return divides(norm(pivot), x);
  }

private:
  BaseRing ring_;
  Integer modulus_ = 0;
};

struct Elimination {
  IntMatrix U, U_inv, V, V_inv, D;
  std::size_t rank = 0;
};

class Eliminator {
public:
  Eliminator(const IntMatrix &a, const BaseRing &ring, bool track_inverse)
      : ring_(ring), track_(track_inverse) {
    e_.D = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) e_.D(i, j) = ring_.canon(a(i, j));
    e_.U = IntMatrix::identity(a.rows());
    e_.V = IntMatrix::identity(a.cols());
    if (track_) {
      e_.U_inv = IntMatrix::identity(a.rows());
      e_.V_inv = IntMatrix::identity(a.cols());
    }
  }

  Elimination run() {
    IntMatrix &A = e_.D;
    const std::size_t m = A.rows(), n = A.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        if (!clear_column(t)) continue;
        if (!clear_row(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
    }
    e_.rank = t;
    return std::move(e_);
  }

private:
  // Moves the smallest-norm nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    IntMatrix &A = e_.D;
    bool found = false;
    Integer best;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < A.rows(); ++i)
      for (std::size_t j = t; j < A.cols(); ++j) {
        if (A(i, j) == 0) continue;
        Integer nv = ring_.norm(A(i, j));
        if (!found || nv < best) {
          found = true;
          best = nv;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Returns false when a smaller pivot was swapped in and the pass restarts.
  bool clear_column(std::size_t t) {
    IntMatrix &A = e_.D;
    for (std::size_t i = t + 1; i < A.rows(); ++i) {
      if (A(i, t) == 0) continue;
      auto [s, q] = ring_.step(A(i, t), A(t, t));
      combine_rows(i, s, t, q);
      if (A(i, t) != 0) {
        swap_rows(t, i);
        return false;
      }
    }
    return true;
  }

  bool clear_row(std::size_t t) {
    IntMatrix &A = e_.D;
    for (std::size_t j = t + 1; j < A.cols(); ++j) {
      if (A(t, j) == 0) continue;
      auto [s, q] = ring_.step(A(t, j), A(t, t));
      combine_cols(j, s, t, q);
      if (A(t, j) != 0) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }

  // If the pivot fails to divide some trailing entry, folds that row into
  // row t so the next row pass produces a smaller pivot.
  bool fix_divisibility(std::size_t t) {
    IntMatrix &A = e_.D;
    for (std::size_t i = t + 1; i < A.rows(); ++i)
      for (std::size_t j = t + 1; j < A.cols(); ++j)
        if (!ring_.pivot_divides(A(t, t), A(i, j))) {
          add_row(t, i);
          return true;
        }
    return false;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    e_.D.swap_rows(a, b);
    e_.U.swap_rows(a, b);
    if (track_) e_.U_inv.swap_cols(a, b);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    e_.D.swap_cols(a, b);
    e_.V.swap_cols(a, b);
    if (track_) e_.V_inv.swap_rows(a, b);
  }

  // row_i := s row_i - q row_t
  void combine_rows(std::size_t i, const Integer &s, std::size_t t, const Integer &q) {
    e_.D.combine_rows(i, s, t, q);
    e_.U.combine_rows(i, s, t, q);
    if (ring_.field()) {
      canon_row(e_.D, i);
      canon_row(e_.U, i);
    }
    // inverse tracking only happens over Z, where s == 1
    if (track_) e_.U_inv.combine_cols(t, Integer(1), i, -q);
  }

  void combine_cols(std::size_t j, const Integer &s, std::size_t t, const Integer &q) {
    e_.D.combine_cols(j, s, t, q);
    e_.V.combine_cols(j, s, t, q);
    if (ring_.field()) {
      canon_col(e_.D, j);
      canon_col(e_.V, j);
    }
    if (track_) e_.V_inv.combine_rows(t, Integer(1), j, -q);
  }

  // row_t := row_t + row_i
  void add_row(std::size_t t, std::size_t i) {
    e_.D.combine_rows(t, Integer(1), i, Integer(-1));
    e_.U.combine_rows(t, Integer(1), i, Integer(-1));
    if (ring_.field()) {
      canon_row(e_.D, t);
      canon_row(e_.U, t);
    }
    if (track_) e_.U_inv.combine_cols(i, Integer(1), t, Integer(1));
  }

  void canon_row(IntMatrix &M, std::size_t i) const {
    for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = ring_.canon(M(i, j));
  }
  void canon_col(IntMatrix &M, std::size_t j) const {
    for (std::size_t i = 0; i < M.rows(); ++i) M(i, j) = ring_.canon(M(i, j));
  }

  Euclid ring_;
  bool track_;
  Elimination e_;
};

} // namespace

IntegralSmith integral_smith(const IntMatrix &a) {
  Elimination e = Eliminator(a, BaseRing::integers(), true).run();
  // make the diagonal positive
  for (std::size_t i = 0; i < e.rank; ++i) {
    if (e.D(i, i) < 0) {
      e.D(i, i) = -e.D(i, i);
      for (std::size_t k = 0; k < e.V.rows(); ++k) e.V(k, i) = -e.V(k, i);
      for (std::size_t k = 0; k < e.V_inv.cols(); ++k) e.V_inv(i, k) = -e.V_inv(i, k);
    }
  }
  IntegralSmith s;
  s.U = std::move(e.U);
  s.U_inv = std::move(e.U_inv);
  s.V = std::move(e.V);
  s.V_inv = std::move(e.V_inv);
  s.D = std::move(e.D);
  s.rank = e.rank;
  return s;
}

SmithForm smith_normal_form(const IntMatrix &a, const BaseRing &ring) {
  Elimination e = Eliminator(a, ring, false).run();
  SmithForm sf;
  sf.U = to_rational(e.U);
  sf.V = to_rational(e.V);
  sf.D = IntMatrix(a.rows(), a.cols());
  const bool field = ring.is_field();
  const Integer p = field ? Integer(static_cast<unsigned long>(ring.prime())) : Integer(0);
  for (std::size_t i = 0; i < e.rank; ++i) {
    const Integer &d = e.D(i, i);
    Integer normal = ring.normalize(d);
    if (field) {
      Integer inv = inverse_mod(d, p);
      for (std::size_t k = 0; k < sf.V.rows(); ++k)
        sf.V(k, i) = Rational(mod_nonneg(e.V(k, i) * inv, p));
    } else {
      Rational unit(d, normal);
      unit.canonicalize();
      for (std::size_t k = 0; k < sf.V.rows(); ++k) {
        sf.V(k, i) /= unit;
        sf.V(k, i).canonicalize();
      }
    }
    sf.D(i, i) = normal;
    sf.invariant_factors.push_back(normal);
  }
  return sf;
}

std::size_t matrix_rank(const IntMatrix &a, const BaseRing &ring) {
  return Eliminator(a, ring, false).run().rank;
}

IntMatrix kernel_basis(const IntMatrix &a, const BaseRing &ring) {
  Elimination e = Eliminator(a, ring, false).run();
  const std::size_t n = a.cols();
  return e.V.block(0, e.rank, n, n - e.rank);
}

IntMatrix image_basis(const IntMatrix &a) {
  IntegralSmith s = integral_smith(a);
  IntMatrix basis(a.rows(), s.rank);
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t k = 0; k < a.rows(); ++k) basis(k, i) = s.U_inv(k, i) * s.D(i, i);
  return basis;
}

FgAbGroup cokernel_invariants(const IntMatrix &a, const BaseRing &ring) {
  SmithForm sf = smith_normal_form(a, ring);
  IntVector torsion;
  for (const auto &d : sf.invariant_factors)
    if (d != 1) torsion.push_back(d);
  return FgAbGroup(a.rows() - sf.rank(), torsion);
}

std::optional<RatVector> solve(const IntMatrix &a, const RatVector &b, const BaseRing &ring) {
  if (b.size() != a.rows())
    throw SpectraError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                       std::to_string(a.rows()));
  for (const auto &x : b)
    if (!ring.contains(x)) throw SpectraError("solve: right-hand side entry " + to_string(x) + " is not in " + ring.to_string());
  SmithForm sf = smith_normal_form(a, ring);
  const std::size_t r = sf.rank();
  RatVector c = sf.U * b;
  RatVector y(a.cols());
  if (ring.is_field()) {
    const Integer p(static_cast<unsigned long>(ring.prime()));
    auto residue = [&](const Rational &q) {
      return mod_nonneg(q.get_num() * inverse_mod(q.get_den(), p), p);
    };
    for (std::size_t i = r; i < c.size(); ++i)
      if (residue(c[i]) != 0) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i) y[i] = Rational(residue(c[i]));
    RatVector x = sf.V * y;
    for (auto &xi : x) xi = Rational(residue(xi));
    return x;
  }
  for (std::size_t i = r; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i) {
    y[i] = c[i] / Rational(sf.D(i, i));
    y[i].canonicalize();
    if (!ring.contains(y[i])) return std::nullopt;
  }
  RatVector x = sf.V * y;
  for (auto &xi : x) xi.canonicalize();
  return x;
}

std::optional<IntVector> solve_integral(const IntMatrix &a, const IntVector &b) {
  if (b.size() != a.rows()) throw SpectraError("solve_integral: shape mismatch");
  return solve_integral(integral_smith(a), b);
}

std::optional<IntVector> solve_integral(const IntegralSmith &s, const IntVector &b) {
  if (b.size() != s.U.cols()) throw SpectraError("solve_integral: shape mismatch");
  IntVector c = s.U * b;
  for (std::size_t i = s.rank; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  IntVector y(s.V.rows());
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (!divides(s.D(i, i), c[i])) return std::nullopt;
    y[i] = exact_div(c[i], s.D(i, i));
  }
  return s.V * y;
}

IntMatrix reduce_mod(const IntMatrix &a, const Integer &p) {
  IntMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = mod_nonneg(a(i, j), p);
  return r;
}

Integer determinant(const IntMatrix &a) {
  if (a.rows() != a.cols()) throw SpectraError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

} // namespace spectra
