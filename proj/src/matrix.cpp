#include "distal/matrix.hpp"

#include <utility>

namespace distal {

IntMatrix IntMatrix::identity(std::size_t d) {
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                           std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_)
    fail(Errc::invalid_argument, "block exceeds matrix bounds");
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_)
    fail(Errc::invalid_argument, "block exceeds matrix bounds");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    fail(Errc::dimension_mismatch, "matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::dimension_mismatch, "matrix sum dimension mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::dimension_mismatch, "matrix difference dimension mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = -a.at(i, j);
  return out;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = s * a.at(i, j);
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size())
    fail(Errc::dimension_mismatch, "matrix-vector dimension mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * v[j];
  return out;
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) fail(Errc::not_square, "det: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    // One-step Bareiss update; divisions by the previous pivot are exact.
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k * n + k];
  }
  return sign > 0 ? a[n * n - 1] : Integer(-a[n * n - 1]);
}

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_square())
    fail(Errc::not_square, "unimodular matrix must be square");
  Integer d = det(m_);
  if (d != 1 && d != -1)
    fail(Errc::not_unimodular,
         "matrix has determinant " + integer_string(d) + ", expected +-1");
  det_ = (d == 1) ? 1 : -1;
}

namespace {

Integer minor_det(const IntMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  if (n == 1) return 1;
  IntMatrix sub(n - 1, n - 1);
  for (std::size_t i = 0, si = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, sj = 0; j < n; ++j) {
      if (j == skip_col) continue;
      sub.at(si, sj) = m.at(i, j);
      ++sj;
    }
    ++si;
  }
  return det(sub);
}

}  // namespace

UnimodularMatrix unimodular_inverse(const UnimodularMatrix& u) {
  const IntMatrix& m = u.matrix();
  const std::size_t n = m.rows();
  // inverse = adjugate / det = adjugate * det since det is +-1
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer c = minor_det(m, i, j);
      if ((i + j) % 2 == 1) c = -c;
      inv.at(j, i) = u.determinant() > 0 ? c : Integer(-c);
    }
  return UnimodularMatrix(std::move(inv));
}

}  // namespace distal
