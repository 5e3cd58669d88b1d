#include <doctest.h>

#include <random>

#include "arr/poly.hpp"

using namespace arr;

namespace {

MvPoly X() { return MvPoly::var(3, 0); }
MvPoly Y() { return MvPoly::var(3, 1); }
MvPoly Z() { return MvPoly::var(3, 2); }

// Deterministic random polynomial of bounded degree in 3 variables.
MvPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 5), expo(0, 2), coeff(-4, 4);
  MvPoly p(3);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m = {static_cast<std::uint32_t>(expo(rng)),
                  static_cast<std::uint32_t>(expo(rng)),
                  static_cast<std::uint32_t>(expo(rng))};
    p.add_term(m, Rat(coeff(rng)));
  }
  return p;
}

std::vector<Rat> random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rat> pt;
  for (int i = 0; i < 3; ++i) {
    Rat q(num(rng), den(rng));
    q.canonicalize();
    pt.push_back(q);
  }
  return pt;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  // (x+y)(x-y) = x^2 - y^2
  MvPoly lhs = (X() + Y()) * (X() - Y());
  MvPoly rhs = X() * X() - Y() * Y();
  CHECK(lhs == rhs);

  // p + 0 = p
  MvPoly p = X() * Y() - Z() * Rat(3);
  CHECK(p + MvPoly::zero(3) == p);

  // x - x = 0, with an empty term map
  CHECK((X() - X()).is_zero());
  CHECK((X() - X()).terms().empty());
}

TEST_CASE("arithmetic commutes with evaluation at random rational points") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    MvPoly a = random_poly(rng), b = random_poly(rng);
    auto pt = random_point(rng);
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST_CASE("poly_det on simple matrices") {
  MvPoly one = MvPoly::constant(3, Rat(1));
  MvPoly zero = MvPoly::zero(3);
  CHECK(poly_det({{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}) == one);
  CHECK(poly_det({{X(), zero, zero}, {zero, Y(), zero}, {zero, zero, Z()}}) ==
        X() * Y() * Z());
  // two equal rows
  CHECK(poly_det({{X(), Y(), Z()}, {X(), Y(), Z()}, {zero, one, zero}}).is_zero());
}

TEST_CASE("poly_det is alternating under row swaps") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<MvPoly>> m(3, std::vector<MvPoly>(3, MvPoly(3)));
    for (auto& row : m) {
      for (auto& e : row) e = random_poly(rng);
    }
    MvPoly d = poly_det(m);
    std::swap(m[0], m[2]);
    CHECK(poly_det(m) == -d);
  }
}

TEST_CASE("poly_det rejects non-square input") {
  CHECK_THROWS_AS(poly_det({{X(), Y()}}), std::invalid_argument);
}

TEST_CASE("reduce_mod_linear") {
  // x mod (x - y) -> y
  CHECK(reduce_mod_linear(X(), X() - Y()) == Y());
  // (x^2 - y^2) mod (x - y) -> 0
  CHECK(reduce_mod_linear(X() * X() - Y() * Y(), X() - Y()).is_zero());
  // x*y mod z -> x*y (z absent)
  CHECK(reduce_mod_linear(X() * Y(), Z()) == X() * Y());
  // modulus must be linear and nonzero
  CHECK_THROWS_AS(reduce_mod_linear(X(), MvPoly::zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(reduce_mod_linear(X(), X() * X()), std::invalid_argument);
}

TEST_CASE("reduction residue property: p - residue is divisible by l") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    MvPoly p = random_poly(rng);
    MvPoly l = X() * Rat(2) - Y() * Rat(3) + Z();
    MvPoly r = reduce_mod_linear(p, l);
    CHECK(reduce_mod_linear(p - r, l).is_zero());
  }
}

TEST_CASE("string rendering is stable") {
  MvPoly p = X() * X() - Y() * Rat(2);
  CHECK(p.str() == "x^2 - 2*y");
  CHECK(MvPoly::zero(3).str() == "0");
}
