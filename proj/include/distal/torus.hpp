#pragma once

#include <cstdint>
#include <vector>

#include "distal/matrix.hpp"

namespace distal {

// Point of the d-torus with exact rational coordinates, each kept reduced
// and inside [0, 1).
class TorusPoint {
 public:
  explicit TorusPoint(std::vector<Rational> coords);
  static TorusPoint zero(std::size_t d);

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool operator==(const TorusPoint& o) const { return c_ == o.c_; }
  bool is_zero() const;

 private:
  std::vector<Rational> c_;
};

// Affine map x |-> A x + a on the d-torus, A integral with det +-1.
struct AffineTorusFlow {
  IntMatrix A;
  TorusPoint a;

  AffineTorusFlow(IntMatrix matrix, TorusPoint shift);
  std::size_t dim() const { return a.dim(); }
};

TorusPoint apply(const AffineTorusFlow& flow, const TorusPoint& x);

// n-fold application by stepping; exact at every step.
TorusPoint iterate(const AffineTorusFlow& flow, const TorusPoint& x,
                   std::uint64_t n);

// Same orbit point via binary exponentiation of the homogeneous matrix
// [[A, a], [0, 1]] with cleared denominators. O(log n) and independent of
// the stepping route, so the two can cross-check each other.
TorusPoint iterate_closed_form(const AffineTorusFlow& flow, const TorusPoint& x,
                               std::uint64_t n);

// T_{B,b} with B = inverse(P) A P, b = inverse(P) a mod 1. For h(x) = Px
// mod 1 the flows satisfy T_{A,a} o h = h o T_{B,b}.
AffineTorusFlow conjugate_flow(const AffineTorusFlow& flow,
                               const UnimodularMatrix& p);

struct FlowClass {
  enum class Kind { distal_unipotent, equicontinuous, positive_entropy };
  Kind kind;
  int sign = 0;              // set for distal_unipotent
  double log_modulus = 0.0;  // set for positive_entropy, > 0
};

// Eigenvalue trichotomy for d = 2 from trace and determinant alone:
// spectral radius > 1 gives positive entropy log(radius); double eigenvalue
// +-1 gives the distal unipotent class; the remaining unit-modulus cases
// are equicontinuous.
FlowClass classify_flow_2x2(const AffineTorusFlow& flow);

}  // namespace distal
