#include "distal/triangularize.hpp"

#include "distal/rng.hpp"

namespace distal {

namespace {

bool is_zero(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

bool nilpotent(const IntMatrix& n) {
  const std::size_t d = n.rows();
  IntMatrix power = n;
  for (std::size_t k = 1; k <= d; ++k) {
    if (is_zero(power)) return true;
    if (k < d) power = power * n;
  }
  return false;
}

IntMatrix shifted_by(const IntMatrix& a, int sign) {
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, i) -= sign;
  return out;
}

// Recursion on unipotent (sign +1) matrices; returns (P, B).
std::pair<IntMatrix, IntMatrix> triangularize_plus(const IntMatrix& m) {
  const std::size_t d = m.rows();
  if (d == 1) return {IntMatrix::identity(1), m};

  IntVector v = kernel_primitive_vector(shifted_by(m, 1));
  UnimodularMatrix p1 = complete_to_unimodular(v);
  IntMatrix c = unimodular_inverse(p1).matrix() * m * p1.matrix();
  // c fixes e_1, so its first column is e_1 and the lower-right block is
  // again unipotent.
  auto [pt, bt] = triangularize_plus(c.block(1, 1, d - 1, d - 1));

  IntMatrix p2 = IntMatrix::identity(d);
  p2.set_block(1, 1, pt);

  IntMatrix b = IntMatrix::identity(d);
  b.set_block(1, 1, bt);
  for (std::size_t j = 0; j + 1 < d; ++j) {
    Integer acc = 0;
    for (std::size_t t = 0; t + 1 < d; ++t) acc += c.at(0, 1 + t) * pt.at(t, j);
    b.at(0, 1 + j) = acc;
  }
  return {p1.matrix() * p2, b};
}

}  // namespace

UnipotentCertificate check_unipotent(const IntMatrix& a) {
  if (!a.is_square())
    fail(Errc::not_square, "check_unipotent: matrix is not square");
  Integer d = det(a);
  if (d != 1 && d != -1)
    fail(Errc::not_unimodular,
         "check_unipotent: determinant " + integer_string(d));
  if (nilpotent(shifted_by(a, 1))) return {1, a.rows()};
  if (nilpotent(shifted_by(a, -1))) return {-1, a.rows()};
  fail(Errc::not_unipotent, "matrix has an eigenvalue other than +-1");
}

std::pair<Integer, Integer> parabolic_fixed_point(const IntMatrix& m) {
  if (!m.is_square() || m.rows() != 2)
    fail(Errc::wrong_dimension, "parabolic_fixed_point needs a 2x2 matrix");
  UnipotentCertificate cert = check_unipotent(m);
  if (cert.sign != 1)
    fail(Errc::not_unipotent, "parabolic_fixed_point: eigenvalues are -1");
  const Integer& c = m.at(1, 0);
  if (c == 0)
    fail(Errc::already_triangular, "matrix is already upper triangular");
  Integer p = m.at(0, 0) - m.at(1, 1);
  Integer q = 2 * c;
  Integer g = gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

TriangularForm triangularize(const IntMatrix& a) {
  UnipotentCertificate cert = check_unipotent(a);
  IntMatrix m = cert.sign < 0 ? -a : a;
  auto [p, b] = triangularize_plus(m);
  if (cert.sign < 0) b = -b;
  return {UnimodularMatrix(std::move(p)), std::move(b), cert.sign};
}

IntMatrix random_unipotent(std::size_t d, std::uint64_t seed, long bound) {
  if (d < 2) fail(Errc::invalid_argument, "random_unipotent needs d >= 2");
  if (bound < 0) fail(Errc::invalid_argument, "random_unipotent needs bound >= 0");
  SplitMix64 rng(seed);

  IntMatrix u = IntMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      u.at(i, j) = rng.range(-bound, bound);

  IntMatrix q = IntMatrix::identity(d);
  IntMatrix q_inv = IntMatrix::identity(d);
  for (std::size_t step = 0; step < 2 * d; ++step) {
    std::size_t i = static_cast<std::size_t>(rng.below(d));
    std::size_t j = static_cast<std::size_t>(rng.below(d - 1));
    if (j >= i) ++j;
    long c = static_cast<long>(rng.range(1, 2));
    if (rng.below(2)) c = -c;
    // q *= (I + c E_ij); the inverse product accumulates on the left.
    IntMatrix shear = IntMatrix::identity(d);
    shear.at(i, j) = c;
    q = q * shear;
    shear.at(i, j) = -c;
    q_inv = shear * q_inv;
  }
  return q * u * q_inv;
}

}  // namespace distal
