#include "arr/matrix.hpp"

#include <stdexcept>

namespace arr {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return m;
}

std::size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (m.at(r, col) != 0) { pivot = r; break; }
    }
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const Rat inv = Rat(1) / m.at(rank, col);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col) * inv;
      m.at(r, col) = 0;
      for (std::size_t j = col + 1; j < cols_; ++j) {
        if (m.at(rank, j) != 0) m.at(r, j) -= f * m.at(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

RatMatrix RatMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
  RatMatrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (m.at(r, col) != 0) { pivot = r; break; }
    }
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const Rat inv = Rat(1) / m.at(rank, col);
    for (std::size_t j = 0; j < cols_; ++j) m.at(rank, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const Rat f = m.at(r, col);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (m.at(rank, j) != 0) m.at(r, j) -= f * m.at(rank, j);
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  if (pivot_cols) *pivot_cols = pivots;
  return m;
}

std::vector<std::vector<Rat>> RatMatrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -r.at(i, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t mat_rank(const RatMatrix& m) { return m.rank(); }

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  bool all_zero = true;
  for (const auto& q : v) {
    if (q != 0) { all_zero = false; break; }
  }
  if (all_zero) throw std::invalid_argument("cannot normalize the zero vector");
  Int lcm_den(1);
  for (const auto& q : v) {
    Int d = q.get_den();
    Int g = gcd(lcm_den, d);
    lcm_den = lcm_den / g * d;
  }
  std::vector<Int> w;
  w.reserve(v.size());
  for (const auto& q : v) {
    Rat scaled = q * Rat(lcm_den);
    w.push_back(scaled.get_num());
  }
  Int g(0);
  for (const auto& z : w) g = gcd(g, z);
  for (auto& z : w) z /= g;
  for (const auto& z : w) {
    if (z != 0) {
      if (z < 0) {
        for (auto& y : w) y = -y;
      }
      break;
    }
  }
  return w;
}

std::vector<std::vector<Int>> integer_kernel_basis(const std::vector<Int>& h) {
  int dim = static_cast<int>(h.size());
  int pivot = -1;
  for (int i = 0; i < dim; ++i) {
    if (h[i] != 0) { pivot = i; break; }
  }
  if (pivot < 0) throw std::invalid_argument("zero covector has full kernel");
  std::vector<std::vector<Int>> cols;
  for (int j = 0; j < dim; ++j) {
    if (j == pivot) continue;
    // h[pivot]*e_j - h[j]*e_pivot lies in ker(h).
    std::vector<Rat> v(dim, Rat(0));
    v[j] = Rat(h[pivot]);
    v[pivot] = Rat(-h[j]);
    cols.push_back(primitive_integer_vector(v));
  }
  return cols;
}

std::size_t rank_of_int_rows(const std::vector<std::vector<Int>>& rows) {
  return RatMatrix::from_int_rows(rows).rank();
}

}  // namespace arr
