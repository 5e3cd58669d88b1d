#include <doctest.h>

#include "arr/matrix.hpp"

using namespace arr;

TEST_CASE("mat_rank basics") {
  RatMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(mat_rank(id) == 3);

  RatMatrix zero(4, 2);
  CHECK(mat_rank(zero) == 0);

  RatMatrix dep = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  CHECK(mat_rank(dep) == 1);
}

TEST_CASE("kernel basis solves Ax = 0") {
  RatMatrix m = RatMatrix::from_rows({{Rat(1), Rat(2), Rat(-1)}});
  auto basis = m.kernel_basis();
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    Rat acc = v[0] + Rat(2) * v[1] - v[2];
    CHECK(acc == 0);
  }
}

TEST_CASE("primitive integer normalization") {
  auto v = primitive_integer_vector({Rat(0), Rat(-2, 3), Rat(2, 3)});
  CHECK(v == std::vector<Int>{0, 1, -1});
  auto w = primitive_integer_vector({Rat(2), Rat(-4), Rat(0)});
  CHECK(w == std::vector<Int>{1, -2, 0});
  auto u = primitive_integer_vector({Rat(1), Rat(-1, 2), Rat(0)});
  CHECK(u == std::vector<Int>{2, -1, 0});
  CHECK_THROWS_AS(primitive_integer_vector({Rat(0), Rat(0)}), std::invalid_argument);
}

TEST_CASE("integer kernel basis of a covector") {
  std::vector<Int> h = {2, -3, 1};
  auto cols = integer_kernel_basis(h);
  REQUIRE(cols.size() == 2);
  for (const auto& c : cols) {
    Int acc = h[0] * c[0] + h[1] * c[1] + h[2] * c[2];
    CHECK(acc == 0);
  }
  CHECK(rank_of_int_rows(cols) == 2);
}
