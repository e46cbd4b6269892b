#include "distal/torus.hpp"

#include <cmath>
#include <utility>

namespace distal {

TorusPoint::TorusPoint(std::vector<Rational> coords) : c_(std::move(coords)) {
  if (c_.empty()) fail(Errc::invalid_argument, "torus point needs dimension >= 1");
  for (Rational& x : c_) x = mod1(x);
}

TorusPoint TorusPoint::zero(std::size_t d) {
  return TorusPoint(std::vector<Rational>(d, Rational(0)));
}

bool TorusPoint::is_zero() const {
  for (const Rational& x : c_)
    if (x != 0) return false;
  return true;
}

AffineTorusFlow::AffineTorusFlow(IntMatrix matrix, TorusPoint shift)
    : A(std::move(matrix)), a(std::move(shift)) {
  if (!A.is_square() || A.rows() != a.dim())
    fail(Errc::dimension_mismatch, "flow matrix and shift dimensions differ");
  Integer d = det(A);
  if (d != 1 && d != -1)
    fail(Errc::not_unimodular, "flow matrix determinant " + integer_string(d));
}

TorusPoint apply(const AffineTorusFlow& flow, const TorusPoint& x) {
  if (x.dim() != flow.dim())
    fail(Errc::dimension_mismatch, "apply: point dimension mismatch");
  const std::size_t d = flow.dim();
  std::vector<Rational> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational acc = flow.a[i];
    for (std::size_t j = 0; j < d; ++j) acc += flow.A.at(i, j) * x[j];
    out[i] = acc;  // TorusPoint construction reduces mod 1
  }
  return TorusPoint(std::move(out));
}

TorusPoint iterate(const AffineTorusFlow& flow, const TorusPoint& x,
                   std::uint64_t n) {
  if (x.dim() != flow.dim())
    fail(Errc::dimension_mismatch, "iterate: point dimension mismatch");
  TorusPoint cur = x;
  for (std::uint64_t k = 0; k < n; ++k) cur = apply(flow, cur);
  return cur;
}

TorusPoint iterate_closed_form(const AffineTorusFlow& flow, const TorusPoint& x,
                               std::uint64_t n) {
  if (x.dim() != flow.dim())
    fail(Errc::dimension_mismatch, "iterate_closed_form: point dimension mismatch");
  const std::size_t d = flow.dim();

  // Integer homogeneous matrix m = den * [[A, a], [0, 1]].
  Integer den = 1;
  for (std::size_t i = 0; i < d; ++i) den = lcm(den, Integer(flow.a[i].get_den()));
  IntMatrix m(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = flow.A.at(i, j) * den;
    Rational scaled = flow.a[i] * Rational(den);
    scaled.canonicalize();
    m.at(i, d) = Integer(scaled.get_num());
  }
  m.at(d, d) = den;

  IntMatrix power = IntMatrix::identity(d + 1);
  IntMatrix base = m;
  std::uint64_t e = n;
  while (e > 0) {
    if (e & 1) power = power * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }

  Integer den_n;
  mpz_pow_ui(den_n.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
  std::vector<Rational> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational acc = make_rational(power.at(i, d), den_n);
    for (std::size_t j = 0; j < d; ++j)
      acc += make_rational(power.at(i, j), den_n) * x[j];
    out[i] = acc;
  }
  return TorusPoint(std::move(out));
}

AffineTorusFlow conjugate_flow(const AffineTorusFlow& flow,
                               const UnimodularMatrix& p) {
  if (p.dim() != flow.dim())
    fail(Errc::dimension_mismatch, "conjugate_flow: dimension mismatch");
  IntMatrix p_inv = unimodular_inverse(p).matrix();
  IntMatrix b = p_inv * flow.A * p.matrix();
  const std::size_t d = flow.dim();
  std::vector<Rational> shift(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < d; ++j) acc += p_inv.at(i, j) * flow.a[j];
    shift[i] = acc;
  }
  return AffineTorusFlow(std::move(b), TorusPoint(std::move(shift)));
}

FlowClass classify_flow_2x2(const AffineTorusFlow& flow) {
  if (flow.dim() != 2)
    fail(Errc::wrong_dimension, "classify_flow_2x2 needs a 2-torus flow");
  Integer tr = flow.A.at(0, 0) + flow.A.at(1, 1);
  Integer dt = det(flow.A);
  double t = tr.get_d();

  if (dt == 1) {
    if (tr == 2) return {FlowClass::Kind::distal_unipotent, 1, 0.0};
    if (tr == -2) return {FlowClass::Kind::distal_unipotent, -1, 0.0};
    if (tr > 2 || tr < -2) {
      double radius = (std::fabs(t) + std::sqrt(t * t - 4.0)) / 2.0;
      return {FlowClass::Kind::positive_entropy, 0, std::log(radius)};
    }
    return {FlowClass::Kind::equicontinuous, 0, 0.0};  // complex unit eigenvalues
  }
  // det = -1: eigenvalues are real with product -1.
  if (tr == 0) return {FlowClass::Kind::equicontinuous, 0, 0.0};  // +1 and -1
  double radius = (std::fabs(t) + std::sqrt(t * t + 4.0)) / 2.0;
  return {FlowClass::Kind::positive_entropy, 0, std::log(radius)};
}

}  // namespace distal
