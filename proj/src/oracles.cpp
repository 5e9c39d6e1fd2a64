#include "spectra/oracles.hpp"

#include <set>

namespace spectra::oracle {

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur,
             std::vector<std::vector<std::size_t>> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

// Block diagonal copy of `m`, `count` times.
IntMatrix repeat_diag(const IntMatrix &m, std::size_t count) {
  IntMatrix out(m.rows() * count, m.cols() * count);
  for (std::size_t c = 0; c < count; ++c) out.set_block(c * m.rows(), c * m.cols(), m);
  return out;
}

// Kronecker product M (x) I_g.
IntMatrix kron_identity(const IntMatrix &m, std::size_t g) {
  IntMatrix out(m.rows() * g, m.cols() * g);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t k = 0; k < g; ++k) out(i * g + k, j * g + k) = m(i, j);
  return out;
}

// The map B^n -> B^m induced by the ambient matrix, on canonical groups.
GroupMap induced_on_powers(const IntMatrix &ambient, const FgAbGroup &b, std::size_t n, std::size_t m) {
  IntMatrix rel = standard_resolution(b);
  Presentation src(repeat_diag(rel, n));
  Presentation tgt(repeat_diag(rel, m));
  return induced_map(src, tgt, ambient);
}

} // namespace

IntVector determinantal_invariant_factors(const IntMatrix &a) {
  IntVector out;
  Integer prev = 1;
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    for (const auto &rs : subsets(a.rows(), k))
      for (const auto &cs : subsets(a.cols(), k)) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(rs[i], cs[j]);
        g = gcd(g, determinant(minor));
      }
    if (g == 0) break;
    out.push_back(exact_div(g, prev));
    prev = g;
  }
  return out;
}

Integer quotient_order_mod(const IntMatrix &a, unsigned long n) {
  std::set<std::vector<unsigned long>> image;
  std::vector<unsigned long> coeff(a.cols(), 0);
  const Integer N(n);
  for (;;) {
    std::vector<unsigned long> v(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * coeff[j];
      v[i] = mod_nonneg(s, N).get_ui();
    }
    image.insert(std::move(v));
    std::size_t j = 0;
    while (j < coeff.size() && ++coeff[j] == n) coeff[j++] = 0;
    if (j == coeff.size()) break;
  }
  Integer total = pow_ui(N, a.rows());
  return total / Integer(static_cast<unsigned long>(image.size()));
}

std::vector<IntVector> elements(const FgAbGroup &g) {
  if (!g.is_finite()) throw SpectraError("elements of an infinite group");
  std::vector<IntVector> out;
  IntVector cur(g.generator_count());
  for (;;) {
    out.push_back(cur);
    std::size_t j = 0;
    while (j < cur.size()) {
      cur[j] += 1;
      if (cur[j] == g.torsion()[j]) cur[j++] = 0;
      else break;
    }
    if (j == cur.size()) break;
  }
  return out;
}

Integer count_homs(const FgAbGroup &a, const FgAbGroup &b) {
  if (!a.is_finite() || !b.is_finite()) throw SpectraError("count_homs needs finite groups");
  const auto elems = elements(b);
  Integer total = 1;
  // a homomorphism is a free choice of image for each generator subject to
  // the order condition; count admissible images per generator
  for (const auto &d : a.torsion()) {
    Integer ok = 0;
    for (const auto &x : elems) {
      bool killed = true;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!divides(b.torsion()[i], d * x[i])) killed = false;
      if (killed) ++ok;
    }
    total *= ok;
  }
  return total;
}

Integer count_killed(const FgAbGroup &a, const Integer &m) {
  Integer n = 0;
  for (const auto &x : elements(a)) {
    bool killed = true;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!divides(a.torsion()[i], m * x[i])) killed = false;
    if (killed) ++n;
  }
  return n;
}

IntMatrix standard_resolution(const FgAbGroup &a) {
  IntMatrix r(a.generator_count(), a.torsion().size());
  for (std::size_t t = 0; t < a.torsion().size(); ++t) r(a.rank() + t, t) = a.torsion()[t];
  return r;
}

FgAbGroup resolution_hom(const IntMatrix &r, const FgAbGroup &b) {
  const std::size_t g = b.generator_count();
  return kernel(induced_on_powers(kron_identity(r.transpose(), g), b, r.rows(), r.cols())).source();
}

FgAbGroup resolution_ext(const IntMatrix &r, const FgAbGroup &b) {
  const std::size_t g = b.generator_count();
  return cokernel(induced_on_powers(kron_identity(r.transpose(), g), b, r.rows(), r.cols())).target();
}

FgAbGroup resolution_tor(const IntMatrix &r, const FgAbGroup &b) {
  const std::size_t g = b.generator_count();
  return kernel(induced_on_powers(kron_identity(r, g), b, r.cols(), r.rows())).source();
}

FgAbGroup resolution_tensor(const IntMatrix &r, const FgAbGroup &b) {
  const std::size_t g = b.generator_count();
  return cokernel(induced_on_powers(kron_identity(r, g), b, r.cols(), r.rows())).target();
}

} // namespace spectra::oracle
