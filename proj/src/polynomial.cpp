#include "distal/polynomial.hpp"

#include <utility>

namespace distal {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : c_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::monomial(std::size_t degree,
                                                const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::evaluate(const Integer& n) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * Rational(n) + c_[i];
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (Rational& c : c_) c *= s;
  return *this;
}

RationalPolynomial RationalPolynomial::shifted(long delta) const {
  // Horner form of p(n + delta).
  RationalPolynomial out;
  RationalPolynomial lin({Rational(delta), Rational(1)});
  for (std::size_t i = c_.size(); i-- > 0;) {
    out = out * lin;
    out += RationalPolynomial::constant(c_[i]);
  }
  return out;
}

RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
  a += b;
  return a;
}

RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
  a -= b;
  return a;
}

RationalPolynomial operator*(const Rational& s, RationalPolynomial a) {
  a *= s;
  return a;
}

RationalPolynomial operator*(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j)
      out[i + j] += a.coefficients()[i] * b.coefficients()[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial discrete_sum(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  const std::size_t m = static_cast<std::size_t>(p.degree());

  // Finite differences at 0 give the binomial-basis coefficients:
  // p(k) = sum_j b_j C(k, j).
  std::vector<Rational> diffs(m + 1);
  for (std::size_t k = 0; k <= m; ++k) diffs[k] = p.evaluate(Integer(k));
  std::vector<Rational> b(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    b[j] = diffs[0];
    for (std::size_t k = 0; k + 1 + j <= m; ++k) diffs[k] = diffs[k + 1] - diffs[k];
  }

  // sum_{k=0}^{n-1} C(k, j) = C(n, j+1), so
  // sum_{k=1}^{n-1} p(k) = sum_j b_j C(n, j+1) - p(0).
  RationalPolynomial out = RationalPolynomial::constant(-b[0]);
  for (std::size_t j = 0; j <= m; ++j) {
    if (b[j] == 0) continue;
    RationalPolynomial binom = RationalPolynomial::constant(b[j]);
    Rational fact = 1;
    for (std::size_t t = 0; t <= j; ++t) {
      binom = binom * RationalPolynomial({Rational(-static_cast<long>(t)), Rational(1)});
      fact *= Rational(static_cast<long>(t + 1));
    }
    binom *= 1 / fact;
    out += binom;
  }
  return out;
}

Rational evaluate_mod1(const RationalPolynomial& p, const Integer& n) {
  return mod1(p.evaluate(n));
}

}  // namespace distal
