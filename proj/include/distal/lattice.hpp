#pragma once

#include <utility>

#include "distal/matrix.hpp"

namespace distal {

// For coprime p, q returns (r, s) with p*r - q*s = 1. The pair is canonical:
// the extended-Euclid solution with s reduced into [0, |p|) whenever |p| > 1.
std::pair<Integer, Integer> bezout(const Integer& p, const Integer& q);

// Primitive integer kernel vector of a square singular matrix: m*v = 0,
// gcd of entries 1, first nonzero entry positive. The vector is the one
// attached to the first free column of the reduced echelon form with the
// fixed pivot rule (leftmost nonzero column, smallest row index), so the
// choice is deterministic even when the kernel has dimension > 1.
IntVector kernel_primitive_vector(const IntMatrix& m);

// Completes a primitive vector v to a matrix P with first column v and
// det(P) = +1. Works for every primitive vector via a chain of 2x2
// extended-gcd blocks collapsing the tail gcds; no pair of entries needs to
// be coprime on its own.
UnimodularMatrix complete_to_unimodular(const IntVector& v);

Integer gcd_of(const IntVector& v);

}  // namespace distal
