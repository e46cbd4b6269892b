#pragma once

#include <vector>

#include "distal/numeric.hpp"

namespace distal {

// Polynomial with exact rational coefficients, stored in the monomial basis
// in ascending degree. The zero polynomial has an empty coefficient list and
// degree -1; otherwise the trailing coefficient is nonzero.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(std::size_t degree, const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational evaluate(const Integer& n) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& s);

  // Substitution n -> n + delta.
  RationalPolynomial shifted(long delta) const;

  bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b);
RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b);
RationalPolynomial operator*(const Rational& s, RationalPolynomial a);
RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

// Antidifference: returns q with q(n) = sum_{k=1}^{n-1} p(k) for every
// integer n >= 1 (and as a polynomial identity for all n). Computed through
// the binomial-coefficient basis, so coefficients stay exact; the degree
// goes up by one.
RationalPolynomial discrete_sum(const RationalPolynomial& p);

// Exact p(n) reduced into [0, 1).
Rational evaluate_mod1(const RationalPolynomial& p, const Integer& n);

}  // namespace distal
