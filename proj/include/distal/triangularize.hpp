#pragma once

#include <cstdint>
#include <utility>

#include "distal/lattice.hpp"

namespace distal {

// Witness that the characteristic polynomial of a matrix is (x - sign)^d.
struct UnipotentCertificate {
  int sign;  // +1 or -1, the common eigenvalue
  std::size_t dimension;
};

// Conjugation to upper-triangular normal form: inverse(P) * A * P = B with
// B upper triangular and every diagonal entry equal to sign. det(P) = +1.
struct TriangularForm {
  UnimodularMatrix P;
  IntMatrix B;
  int sign;
};

// Verifies that A is unimodular and that some sign in {+1, -1} makes
// (A - sign*I)^d vanish. Exact; no eigenvalue numerics involved.
UnipotentCertificate check_unipotent(const IntMatrix& a);

// Fixed direction of the parabolic Moebius transformation induced by a 2x2
// unipotent matrix [[a, b], [c, d]] with c != 0: the reduced fraction
// p/q = (a - d) / (2c) with q > 0. (A - I) annihilates (p, q).
std::pair<Integer, Integer> parabolic_fixed_point(const IntMatrix& a);

// Conjugates a (+-)unipotent matrix to upper-triangular form by recursive
// kernel-vector completion: find a primitive fixed vector of A, complete it
// to a unimodular P1, split off the first coordinate and recurse on the
// lower-right block. P is assembled as the product of the block-extended
// stages. Negative-unipotent input is handled by triangularizing -A and
// negating the resulting B.
TriangularForm triangularize(const IntMatrix& a);

// Deterministic test-instance generator: conjugates a random upper
// unipotent U (entries in [-bound, bound]) by a random product of
// elementary shear matrices. The result is unipotent by construction.
IntMatrix random_unipotent(std::size_t d, std::uint64_t seed, long bound);

}  // namespace distal
