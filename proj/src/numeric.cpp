#include "distal/numeric.hpp"

namespace distal {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_coprime: return "NotCoprime";
    case Errc::not_square: return "NotSquare";
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::trivial_kernel: return "TrivialKernel";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::not_unipotent: return "NotUnipotent";
    case Errc::already_triangular: return "AlreadyTriangular";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::wrong_dimension: return "WrongDimension";
    case Errc::not_upper_unipotent: return "NotUpperUnipotent";
    case Errc::insufficient_precision: return "InsufficientPrecision";
    case Errc::engine_unavailable: return "EngineUnavailable";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(Errc::invalid_argument, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer rational_floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational mod1(const Rational& r) {
  Rational out = r - Rational(rational_floor(r));
  out.canonicalize();
  return out;
}

Integer parse_integer(const std::string& text) {
  Integer n;
  if (text.empty() || mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0)
    fail(Errc::invalid_argument, "invalid integer literal: '" + text + "'");
  return n;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(Errc::invalid_argument, "zero denominator in '" + text + "'");
  return make_rational(num, den);
}

std::string integer_string(const Integer& n) { return n.get_str(); }

std::string rational_string(const Rational& r) { return r.get_str(); }

}  // namespace distal
