#pragma once

#include <vector>

#include "arr/rational.hpp"

namespace arr {

// Dense rational matrix, row-major. All elimination is exact.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
  static RatMatrix from_int_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::size_t rank() const;

  // Reduced row echelon form; pivot_cols receives the pivot column indices.
  RatMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

  // Basis of the right kernel (solutions of Ax = 0), one vector per
  // free column, in ascending free-column order.
  std::vector<std::vector<Rat>> kernel_basis() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

std::size_t mat_rank(const RatMatrix& m);

// Primitive integer vector proportional to v with positive leading nonzero
// entry. Throws on the zero vector.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

// Deterministic integer basis of ker(h) for a nonzero integer covector h,
// returned as dim x (dim-1) matrix columns. Column j is built from the
// pivot (first nonzero entry of h) and the j-th non-pivot coordinate,
// scaled primitive.
std::vector<std::vector<Int>> integer_kernel_basis(const std::vector<Int>& h);

// Rank of a set of integer covectors.
std::size_t rank_of_int_rows(const std::vector<std::vector<Int>>& rows);

}  // namespace arr
