#include "distal/lattice.hpp"

#include <cstddef>

namespace distal {

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

std::pair<Integer, Integer> bezout(const Integer& p, const Integer& q) {
  Integer g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(),
             q.get_mpz_t());
  if (g != 1)
    fail(Errc::not_coprime, "bezout: gcd(" + integer_string(p) + ", " +
                                integer_string(q) + ") = " + integer_string(g));
  // u*p + v*q = 1, so p*r - q*s = 1 with r = u, s = -v.
  Integer r = u, s = -v;
  Integer ap = abs(p);
  if (ap > 1) {
    Integer s_canon;
    mpz_fdiv_r(s_canon.get_mpz_t(), s.get_mpz_t(), ap.get_mpz_t());
    Integer k = (s_canon - s) / ap;
    r += k * q * sign_of(p);
    s = s_canon;
  }
  return {r, s};
}

IntVector kernel_primitive_vector(const IntMatrix& m) {
  if (!m.is_square())
    fail(Errc::not_square, "kernel_primitive_vector: matrix is not square");
  const std::size_t n = m.rows();

  // Reduced row echelon form over the rationals, fixed pivot order.
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(m.at(i, j));

  std::vector<long> pivot_row_of_col(n, -1);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < n && prow < n; ++col) {
    std::size_t r = prow;
    while (r < n && a[r * n + col] == 0) ++r;
    if (r == n) continue;  // free column
    if (r != prow)
      for (std::size_t j = 0; j < n; ++j) std::swap(a[prow * n + j], a[r * n + j]);
    Rational inv_pivot = 1 / a[prow * n + col];
    for (std::size_t j = col; j < n; ++j) a[prow * n + j] *= inv_pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == prow || a[i * n + col] == 0) continue;
      Rational f = a[i * n + col];
      for (std::size_t j = col; j < n; ++j) a[i * n + j] -= f * a[prow * n + j];
    }
    pivot_row_of_col[col] = static_cast<long>(prow);
    ++prow;
  }

  std::size_t free_col = n;
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_row_of_col[col] < 0) {
      free_col = col;
      break;
    }
  if (free_col == n)
    fail(Errc::trivial_kernel, "kernel_primitive_vector: kernel is {0}");

  std::vector<Rational> v(n);
  v[free_col] = 1;
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_row_of_col[col] >= 0)
      v[col] = -a[static_cast<std::size_t>(pivot_row_of_col[col]) * n + free_col];

  // Clear denominators, divide by the gcd, fix the sign.
  Integer scale = 1;
  for (const Rational& x : v) scale = lcm(scale, Integer(x.get_den()));
  IntVector w(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = v[i] * Rational(scale);
    t.canonicalize();
    w[i] = Integer(t.get_num());
  }
  Integer g = gcd_of(w);
  for (Integer& x : w) x /= g;
  for (const Integer& x : w) {
    if (x == 0) continue;
    if (x < 0)
      for (Integer& y : w) y = -y;
    break;
  }
  return w;
}

UnimodularMatrix complete_to_unimodular(const IntVector& v) {
  const std::size_t d = v.size();
  if (d == 0) fail(Errc::invalid_argument, "cannot complete an empty vector");
  Integer g = gcd_of(v);
  if (g != 1)
    fail(Errc::not_primitive,
         "complete_to_unimodular: entries have gcd " + integer_string(g));
  if (d == 1) {
    if (v[0] != 1)
      fail(Errc::invalid_argument,
           "no 1x1 completion of (-1) has determinant +1");
    return UnimodularMatrix(IntMatrix::identity(1));
  }

  // Collapse the tail gcds bottom-up: at step i a 2x2 block E_i of
  // determinant 1 maps (v_i, gcd(v_{i+1..d})) to (gcd(v_{i..d}), 0).
  // The product of the E_i sends v to e_1, so P is the product of the
  // inverse blocks, applied as column operations on the identity.
  IntMatrix p = IntMatrix::identity(d);
  Integer run = v[d - 1];
  for (std::size_t step = d - 1; step-- > 0;) {
    const Integer& alpha = v[step];
    Integer beta = run;
    if (alpha == 0 && beta == 0) continue;
    Integer gg, x, y;
    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), alpha.get_mpz_t(),
               beta.get_mpz_t());
    Integer a2 = alpha / gg, b2 = beta / gg;
    // Right-multiply p by the inverse block [[a2, -y], [b2, x]] embedded at
    // columns (step, step+1).
    for (std::size_t row = 0; row < d; ++row) {
      Integer c0 = p.at(row, step), c1 = p.at(row, step + 1);
      p.at(row, step) = c0 * a2 + c1 * b2;
      p.at(row, step + 1) = c1 * x - c0 * y;
    }
    run = gg;
  }
  return UnimodularMatrix(std::move(p));
}

}  // namespace distal
