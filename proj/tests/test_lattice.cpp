#include <doctest.h>

#include <random>
#include <set>

#include "arr/lattice.hpp"
#include "arr/matrix.hpp"

using namespace arr;

namespace {

// Independent oracle for the characteristic polynomial: the Whitney rank
// sum chi(t) = sum over subsets S of (-1)^|S| t^(dim - rank(S)). Exponential
// in |A| but completely independent of the lattice/Mobius code path.
CharPoly whitney_char_poly(const Arrangement& a) {
  int d = a.dim();
  std::vector<Int> coeffs(static_cast<std::size_t>(d) + 1, Int(0));
  std::size_t n = a.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::vector<Int>> rows;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) {
        rows.push_back(a.form(i).coeffs);
        ++bits;
      }
    }
    std::size_t r = rows.empty() ? 0 : rank_of_int_rows(rows);
    // contributes to t^{d-r}: descending storage index r
    coeffs[r] += (bits % 2 == 0) ? 1 : -1;
  }
  return CharPoly{coeffs};
}

CharPoly poly_from(std::vector<long> desc) {
  std::vector<Int> c;
  for (auto v : desc) c.emplace_back(v);
  return CharPoly{c};
}

Arrangement random_subarrangement(const Arrangement& a, std::mt19937& rng,
                                  std::size_t min_size = 1) {
  std::uniform_int_distribution<int> coin(0, 1);
  while (true) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& f : a.forms()) {
      if (coin(rng)) {
        std::vector<Rat> row;
        for (const auto& c : f.coeffs) row.emplace_back(c);
        rows.push_back(row);
      }
    }
    if (rows.size() >= min_size) return make_arrangement(a.dim(), rows);
  }
}

}  // namespace

TEST_CASE("flat enumeration on tiny arrangements") {
  CHECK(IntersectionLattice(family_boolean(2)).num_flats() == 4);
  // braid(3): ambient, three planes, the line x=y=z
  IntersectionLattice braid(family_braid(3));
  CHECK(braid.num_flats() == 5);
  CHECK(braid.rank() == 2);
}

TEST_CASE("flat counts per rank for the 3-dim family at alpha=-2") {
  IntersectionLattice lat(family_A(Rat(-2)));
  CHECK(lat.flats_of_rank(0).size() == 1);
  CHECK(lat.flats_of_rank(1).size() == 9);
  CHECK(lat.flats_of_rank(2).size() == 15);
  CHECK(lat.flats_of_rank(3).size() == 1);
  // supports of rank-1 flats are singletons and cover all hyperplanes
  std::set<std::size_t> seen;
  for (auto fi : lat.flats_of_rank(1)) {
    REQUIRE(lat.flat(fi).support.size() == 1);
    seen.insert(lat.flat(fi).support[0]);
  }
  CHECK(seen.size() == 9);
}

TEST_CASE("characteristic polynomials match the Whitney oracle") {
  for (const Arrangement& a :
       {family_boolean(3), family_braid(3), family_A(Rat(-2)), family_A(Rat(-1)),
        family_A(Rat(1)), family_A(Rat(1, 2))}) {
    CHECK(char_poly(a) == whitney_char_poly(a));
  }
}

TEST_CASE("known characteristic polynomials") {
  // boolean(3): (t-1)^3
  CHECK(char_poly(family_boolean(3)) == poly_from({1, -3, 3, -1}));
  // braid(3): t(t-1)(t-2) = t^3 - 3t^2 + 2t
  CHECK(char_poly(family_braid(3)) == poly_from({1, -3, 2, 0}));
  // A_{-2}: (t-1)(t-4)^2 = t^3 - 9t^2 + 24t - 16
  CHECK(char_poly(family_A(Rat(-2))) == poly_from({1, -9, 24, -16}));
  // B3: (t-1)(t-3)(t-5)
  CHECK(char_poly(family_A(Rat(-1))) == poly_from({1, -9, 23, -15}));
}

TEST_CASE("chamber counts via Zaslavsky") {
  CHECK(num_chambers(family_boolean(3)) == 8);
  CHECK(num_chambers(family_A(Rat(-1))) == 48);
  CHECK(num_chambers(family_A(Rat(-2))) == 50);
}

TEST_CASE("Poincare polynomial") {
  // boolean(3): (1+t)^3
  auto pi = poincare_poly(family_boolean(3));
  CHECK(pi == std::vector<Int>{1, 3, 3, 1});
  // empty arrangement: 1
  CHECK(poincare_poly(Arrangement(3, {})) == std::vector<Int>{1, 0, 0, 0});
  // A_{-2}: (1+t)(1+4t)^2 = 1 + 9t + 24t^2 + 16t^3
  CHECK(poincare_poly(family_A(Rat(-2))) == std::vector<Int>{1, 9, 24, 16});
}

TEST_CASE("Mobius alternation and chi(1) = 0") {
  for (const Arrangement& a : {family_A(Rat(-2)), family_B(Rat(-1)), family_braid(4)}) {
    IntersectionLattice lat(a);
    for (const auto& f : lat.flats()) {
      Int mu = f.mobius;
      if (f.rank % 2 == 1) mu = -mu;
      CHECK(mu > 0);  // (-1)^rank * mu > 0
    }
    if (!a.empty()) CHECK(char_poly(a).evaluate(Rat(1)) == 0);
  }
}

TEST_CASE("deletion-restriction recurrence on random subarrangements") {
  std::mt19937 rng(777);
  Arrangement base = family_B(Rat(-2));
  for (int trial = 0; trial < 12; ++trial) {
    Arrangement a = random_subarrangement(base, rng);
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    const LinearForm& h = a.form(pick(rng));
    CharPoly chi = char_poly(a);
    CharPoly chi_del = char_poly(delete_form(a, h));
    CharPoly chi_res = char_poly(restrict_to(a, h).restricted);
    // chi(a) = chi(a') - chi(a''), with a'' living one dimension lower.
    for (const Rat t : {Rat(2), Rat(-1), Rat(7), Rat(1, 3)}) {
      CHECK(chi.evaluate(t) == chi_del.evaluate(t) - chi_res.evaluate(t));
    }
  }
}

TEST_CASE("labeled lattice comparison") {
  Arrangement a = family_A(Rat(-2));
  std::vector<std::size_t> identity(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) identity[i] = i;
  CHECK(lattices_equal_labeled(a, a, identity));

  // natural bijection through the family listing order
  auto natural = [](const Rat& alpha, const Rat& beta) {
    Arrangement x = family_A(alpha), y = family_A(beta);
    auto fx = family_A_forms(alpha), fy = family_A_forms(beta);
    std::vector<std::size_t> bij(x.size());
    for (std::size_t i = 0; i < fx.size(); ++i) bij[x.index_of(fx[i])] = y.index_of(fy[i]);
    return std::make_tuple(x, y, bij);
  };
  {
    auto [x, y, bij] = natural(Rat(-2), Rat(-3));
    CHECK(lattices_equal_labeled(x, y, bij));
  }
  {
    auto [x, y, bij] = natural(Rat(-2), Rat(-1));
    CHECK_FALSE(lattices_equal_labeled(x, y, bij));
  }
  CHECK_THROWS_AS(lattices_equal_labeled(family_A(Rat(-2)), family_A(Rat(1)),
                                         std::vector<std::size_t>(9, 0)),
                  std::invalid_argument);
}

TEST_CASE("modular flats and supersolvability") {
  CHECK(is_supersolvable(family_boolean(3)));
  {
    IntersectionLattice lat(family_boolean(3));
    CHECK(lat.modular_flats().size() == lat.num_flats());
  }
  CHECK(is_supersolvable(family_braid(4)));
  CHECK_FALSE(is_supersolvable(family_A(Rat(-2))));
}

TEST_CASE("the degenerate 4-dim instance is the braid-on-5 pattern") {
  // At alpha = 0 the family collapses to the rank-4 braid pattern: flat
  // counts per rank are Stirling numbers {S(5,5-r)}, the lattice is
  // supersolvable, and chi = (t-1)(t-2)(t-3)(t-4).
  Arrangement b0 = family_B(Rat(0));
  IntersectionLattice lat(b0);
  CHECK(lat.flats_of_rank(0).size() == 1);
  CHECK(lat.flats_of_rank(1).size() == 10);
  CHECK(lat.flats_of_rank(2).size() == 25);
  CHECK(lat.flats_of_rank(3).size() == 15);
  CHECK(lat.flats_of_rank(4).size() == 1);
  CHECK(is_supersolvable(lat));
  CHECK(char_poly(lat) == poly_from({1, -10, 35, -50, 24}));
}

TEST_CASE("matroid isomorphism search") {
  // A_1 is the essentialized rank-3 braid pattern
  CHECK(matroid_isomorphic(family_A(Rat(1)), essentialize(family_braid(4))));
  CHECK_FALSE(matroid_isomorphic(family_A(Rat(-2)), family_A(Rat(-1))));
  CHECK(matroid_isomorphic(family_A(Rat(-2)), family_A(Rat(-3))));
}

TEST_CASE("integer root extraction") {
  // (t-1)(t-4)^2
  auto ex = extract_integer_roots(poly_from({1, -9, 24, -16}), 9);
  CHECK(ex.complete());
  CHECK(ex.roots == std::vector<std::size_t>{1, 4, 4});
  // (t-1)(t^2 - 3t + 3): non-integer quadratic factor stays
  auto bad = extract_integer_roots(poly_from({1, -4, 6, -3}), 4);
  CHECK_FALSE(bad.complete());
  CHECK(bad.roots == std::vector<std::size_t>{1});
  CHECK(bad.remainder == std::vector<Int>{1, -3, 3});
  // t^2(t-5): zero roots extracted as well
  auto zr = extract_integer_roots(poly_from({1, -5, 0, 0}), 5);
  CHECK(zr.complete());
  CHECK(zr.roots == std::vector<std::size_t>{0, 0, 5});
}
