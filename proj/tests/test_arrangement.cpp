#include <doctest.h>

#include <set>
#include <sstream>

#include "arr/arrangement.hpp"

using namespace arr;

namespace {

LinearForm lf(std::vector<long> v) {
  std::vector<Int> z;
  for (auto x : v) z.emplace_back(x);
  return LinearForm{z};
}

}  // namespace

TEST_CASE("normalize_form examples") {
  CHECK(normalize_form({Rat(0), Rat(-2, 3), Rat(2, 3)}) == lf({0, 1, -1}));
  CHECK(normalize_form({Rat(2), Rat(-4), Rat(0)}) == lf({1, -2, 0}));
  CHECK(normalize_form({Rat(1), Rat(-1, 2), Rat(0)}) == lf({2, -1, 0}));
}

TEST_CASE("family sizes collapse at special alpha") {
  CHECK(family_A(Rat(-2)).size() == 9);
  CHECK(family_A(Rat(1)).size() == 6);
  CHECK(family_A(Rat(0)).size() == 6);
  CHECK(family_A(Rat(1, 2)).size() == 9);
  CHECK(family_B(Rat(-2)).size() == 14);
  CHECK(family_B(Rat(0)).size() == 10);
  CHECK(family_B(Rat(1)).size() == 10);
}

TEST_CASE("family_A(-1) is the full B3 reflection set") {
  std::vector<std::vector<Int>> b3 = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
      {1, -1, 0}, {1, 1, 0}, {1, 0, -1},
      {1, 0, 1}, {0, 1, -1}, {0, 1, 1},
  };
  CHECK(family_A(Rat(-1)) == make_arrangement_int(3, b3));
}

TEST_CASE("family_A(-2) contains x + 2y") {
  CHECK(family_A(Rat(-2)).contains(lf({1, 2, 0})));
}

TEST_CASE("braid and boolean families") {
  CHECK(family_braid(3).size() == 3);
  CHECK(family_braid(4).size() == 6);
  CHECK(family_boolean(3) == make_arrangement_int(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(family_braid(0), std::invalid_argument);
}

TEST_CASE("make_arrangement is idempotent and rejects bad input") {
  Arrangement a = family_A(Rat(-2));
  std::vector<std::vector<Rat>> again;
  for (const auto& f : a.forms()) {
    std::vector<Rat> row;
    for (const auto& c : f.coeffs) row.emplace_back(c);
    again.push_back(row);
  }
  CHECK(make_arrangement(3, again) == a);
  CHECK(make_arrangement(3, {}).empty());
  CHECK_THROWS_AS(make_arrangement(3, {{Rat(0), Rat(0), Rat(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(make_arrangement(3, {{Rat(1), Rat(0)}}), std::invalid_argument);
}

TEST_CASE("delete_form removes one hyperplane and round-trips") {
  Arrangement b3 = family_boolean(3);
  Arrangement del = delete_form(b3, lf({0, 0, 1}));
  CHECK(del.size() == 2);
  CHECK_FALSE(del.contains(lf({0, 0, 1})));
  CHECK_THROWS_AS(delete_form(del, lf({0, 0, 1})), std::invalid_argument);

  Arrangement a = family_A(Rat(-2));
  for (const auto& h : a.forms()) {
    Arrangement d = delete_form(a, h);
    CHECK(d.size() == 8);
    // re-adding reproduces the original
    std::vector<std::vector<Rat>> rows;
    for (const auto& f : d.forms()) {
      std::vector<Rat> row;
      for (const auto& c : f.coeffs) row.emplace_back(c);
      rows.push_back(row);
    }
    std::vector<Rat> hrow;
    for (const auto& c : h.coeffs) hrow.emplace_back(c);
    rows.push_back(hrow);
    CHECK(make_arrangement(3, rows) == a);
  }
}

TEST_CASE("restriction basics") {
  Arrangement b3 = family_boolean(3);
  auto res = restrict_to(b3, lf({0, 0, 1}));
  CHECK(res.restricted.dim() == 2);
  CHECK(res.restricted.size() == 2);

  Arrangement braid3 = family_braid(3);
  auto r2 = restrict_to(braid3, braid3.form(0));
  CHECK(r2.restricted.size() == 1);
}

TEST_CASE("restriction provenance partitions the other forms") {
  Arrangement b = family_B(Rat(-2));
  for (const auto& h : b.forms()) {
    auto res = restrict_to(b, h);
    std::set<std::size_t> seen;
    std::size_t total = 0;
    for (const auto& [ri, sources] : res.provenance) {
      CHECK(ri < res.restricted.size());
      for (auto s : sources) {
        CHECK(seen.insert(s).second);  // disjoint
        ++total;
      }
    }
    CHECK(total == b.size() - 1);
  }
}

TEST_CASE("restriction of the B family matches the substitution oracle") {
  // Setting y = alpha*w in the 4-dimensional family and rewriting the other
  // 13 forms in coordinates (x, z, w) must reproduce the 3-dimensional
  // family pattern, independently of the kernel-basis embedding.
  const Rat alpha(-2);
  auto listed = family_B_forms(alpha);  // listed[13] is y - alpha*w
  std::vector<std::vector<Rat>> substituted;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (i == 13) continue;
    const auto& c = listed[i].coeffs;
    // (x,y,z,w) -> (x, alpha*w, z, w): coefficient of y folds onto w.
    std::vector<Rat> row = {Rat(c[0]), Rat(c[2]), Rat(c[3]) + alpha * Rat(c[1])};
    substituted.push_back(row);
  }
  Arrangement oracle = make_arrangement(3, substituted);
  CHECK(oracle.size() == 9);
  // The oracle set in coordinates (x,z,w) is exactly the 3-dim family.
  CHECK(oracle == family_A(alpha));
}

TEST_CASE("essentialize quotients away the common intersection") {
  Arrangement braid4 = family_braid(4);
  CHECK(braid4.rank() == 3);
  Arrangement ess = essentialize(braid4);
  CHECK(ess.dim() == 3);
  CHECK(ess.size() == 6);
  CHECK(ess.rank() == 3);
  // already essential: unchanged
  CHECK(essentialize(family_A(Rat(-2))) == family_A(Rat(-2)));
}

TEST_CASE("rank computations") {
  CHECK(family_braid(3).rank() == 2);
  CHECK(family_A(Rat(-2)).rank() == 3);
  CHECK(Arrangement(3, {}).rank() == 0);
}

TEST_CASE("defining polynomial") {
  Arrangement b3 = family_boolean(3);
  MvPoly q = b3.defining_polynomial();
  CHECK(q == MvPoly::var(3, 0) * MvPoly::var(3, 1) * MvPoly::var(3, 2));
  CHECK(Arrangement(3, {}).defining_polynomial() ==
        MvPoly::constant(3, Rat(1)));
  CHECK(family_A(Rat(-2)).defining_polynomial().total_degree() == 9);
}

TEST_CASE("text format round trip") {
  Arrangement a = family_A(Rat(1, 2));
  std::istringstream in(a.serialize());
  CHECK(parse_arrangement(in) == a);

  std::istringstream with_comments(
      "# comment\narrangement dim=2\n1 0\n# another\n0 1/3\n");
  Arrangement b = parse_arrangement(with_comments);
  CHECK(b.size() == 2);
  CHECK(b.contains(lf({0, 1})));

  std::istringstream bad("arrangement dim=2\n1 2 3\n");
  CHECK_THROWS_AS(parse_arrangement(bad), std::invalid_argument);
  std::istringstream nohdr("1 2\n");
  CHECK_THROWS_AS(parse_arrangement(nohdr), std::invalid_argument);
  std::istringstream zero("arrangement dim=2\n0 0\n");
  CHECK_THROWS_AS(parse_arrangement(zero), std::invalid_argument);
}
