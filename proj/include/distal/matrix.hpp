#pragma once

#include <cstddef>
#include <vector>

#include "distal/numeric.hpp"

namespace distal {

using IntVector = std::vector<Integer>;

// Dense integer matrix, row-major, exact arithmetic throughout.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0)
      fail(Errc::invalid_argument, "matrix dimensions must be positive");
  }

  static IntMatrix identity(std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& m);
  IntMatrix transpose() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Integer& s, const IntMatrix& a);
IntVector operator*(const IntMatrix& a, const IntVector& v);

// Exact determinant by Bareiss fraction-free elimination with row pivoting.
Integer det(const IntMatrix& m);

// Square integer matrix with determinant +1 or -1, checked at construction.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(IntMatrix m);

  const IntMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  int determinant() const { return det_; }

  bool operator==(const UnimodularMatrix& o) const { return m_ == o.m_; }

 private:
  IntMatrix m_;
  int det_;
};

// Exact inverse; unimodularity makes the adjugate route integral.
UnimodularMatrix unimodular_inverse(const UnimodularMatrix& u);

}  // namespace distal
