// Dense matrices over Q for the knitting computations and the test oracles.
// Sizes here are tiny (a handful of rows), so nothing clever is attempted.
#pragma once

#include "ccfrieze/laurent.hpp"

#include <vector>

namespace ccfrieze::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix operator*(const Matrix& b) const;
  Matrix transpose() const;
  // Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

std::size_t rank(Matrix m);

// Basis of {v : m v = 0}, as the columns of the result.
Matrix null_space(const Matrix& m);

// Rows form a basis of {p : p^T m = 0}.  With m the relations among
// generators, the result is the projection onto the cokernel.
Matrix cokernel_projection(const Matrix& m);

bool is_invertible(const Matrix& m);

}  // namespace ccfrieze::linalg
