#include "arr/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arr/matrix.hpp"

namespace arr {

namespace {

// Closure of a form index set: every form whose covector lies in the span.
std::vector<std::size_t> support_closure(const Arrangement& a,
                                         const std::vector<std::size_t>& s,
                                         std::size_t s_rank) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(s.size() + 1);
  for (auto i : s) rows.push_back(a.form(i).coeffs);
  std::vector<std::size_t> closed;
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (std::binary_search(s.begin(), s.end(), g)) {
      closed.push_back(g);
      continue;
    }
    rows.push_back(a.form(g).coeffs);
    if (rank_of_int_rows(rows) == s_rank) closed.push_back(g);
    rows.pop_back();
  }
  return closed;
}

}  // namespace

IntersectionLattice::IntersectionLattice(const Arrangement& a) : arr_(a) {
  // BFS by rank: extend each flat by one hyperplane outside its support,
  // close, dedup on the closed support set.
  std::map<std::vector<std::size_t>, std::size_t> rank_of_support;
  Flat bottom;
  bottom.support = {};
  bottom.rank = 0;
  std::vector<std::vector<std::size_t>> current = {bottom.support};
  rank_of_support[bottom.support] = 0;
  std::set<std::vector<std::size_t>> seen = {bottom.support};

  while (!current.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& sup : current) {
      std::size_t cur_rank = rank_of_support[sup];
      for (std::size_t h = 0; h < arr_.size(); ++h) {
        if (std::binary_search(sup.begin(), sup.end(), h)) continue;
        std::vector<std::vector<Int>> rows;
        for (auto i : sup) rows.push_back(arr_.form(i).coeffs);
        rows.push_back(arr_.form(h).coeffs);
        // h outside a closed support always raises the rank by one.
        std::size_t new_rank = rank_of_int_rows(rows);
        if (new_rank != cur_rank + 1)
          throw std::logic_error("support set was not closed");
        std::vector<std::size_t> base = sup;
        base.insert(std::lower_bound(base.begin(), base.end(), h), h);
        auto closed = support_closure(arr_, base, new_rank);
        if (seen.insert(closed).second) {
          rank_of_support[closed] = new_rank;
          next.push_back(closed);
        }
      }
    }
    current = std::move(next);
  }

  for (const auto& [sup, r] : rank_of_support) {
    Flat f;
    f.support = sup;
    f.rank = r;
    flats_.push_back(std::move(f));
    rank_ = std::max(rank_, r);
  }
  std::sort(flats_.begin(), flats_.end(), [](const Flat& x, const Flat& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.support < y.support;
  });
  for (std::size_t i = 0; i < flats_.size(); ++i) by_support_[flats_[i].support] = i;

  // Mobius values by recursive summation down the order. Strictly smaller
  // flats always have strictly smaller rank, so the rank-sorted prefix
  // covers everything below flat i.
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (i == 0) {
      flats_[i].mobius = 1;
      continue;
    }
    Int mu(0);
    for (std::size_t j = 0; j < i; ++j) {
      if (flats_[j].rank >= flats_[i].rank) break;
      if (leq(j, i)) mu -= flats_[j].mobius;
    }
    flats_[i].mobius = mu;
  }
}

std::vector<std::size_t> IntersectionLattice::flats_of_rank(std::size_t r) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (flats_[i].rank == r) out.push_back(i);
  }
  return out;
}

std::size_t IntersectionLattice::flat_by_support(
    const std::vector<std::size_t>& support) const {
  auto it = by_support_.find(support);
  if (it == by_support_.end()) throw std::invalid_argument("no flat with that support");
  return it->second;
}

bool IntersectionLattice::leq(std::size_t x, std::size_t y) const {
  const auto& sx = flats_[x].support;
  const auto& sy = flats_[y].support;
  return std::includes(sy.begin(), sy.end(), sx.begin(), sx.end());
}

std::size_t IntersectionLattice::meet(std::size_t x, std::size_t y) const {
  // Intersection of closed supports is closed.
  std::vector<std::size_t> inter;
  std::set_intersection(flats_[x].support.begin(), flats_[x].support.end(),
                        flats_[y].support.begin(), flats_[y].support.end(),
                        std::back_inserter(inter));
  return flat_by_support(inter);
}

std::size_t IntersectionLattice::join(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> uni;
  std::set_union(flats_[x].support.begin(), flats_[x].support.end(),
                 flats_[y].support.begin(), flats_[y].support.end(),
                 std::back_inserter(uni));
  std::vector<std::vector<Int>> rows;
  for (auto i : uni) rows.push_back(arr_.form(i).coeffs);
  std::size_t r = rows.empty() ? 0 : rank_of_int_rows(rows);
  return flat_by_support(support_closure(arr_, uni, r));
}

bool IntersectionLattice::is_modular_flat(std::size_t x) const {
  for (std::size_t y = 0; y < flats_.size(); ++y) {
    std::size_t m = meet(x, y), j = join(x, y);
    if (flats_[x].rank + flats_[y].rank != flats_[j].rank + flats_[m].rank)
      return false;
  }
  return true;
}

std::vector<std::size_t> IntersectionLattice::modular_flats() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (is_modular_flat(i)) out.push_back(i);
  }
  return out;
}

Rat CharPoly::evaluate(const Rat& t) const {
  Rat acc(0);
  for (const auto& c : coeffs) acc = acc * t + Rat(c);
  return acc;
}

std::string CharPoly::str() const {
  std::ostringstream os;
  std::size_t d = degree();
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Int& c = coeffs[i];
    if (c == 0) continue;
    std::size_t e = d - i;
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || e == 0) os << a.get_str();
    if (e > 0) {
      if (a != 1) os << "*";
      os << "t";
      if (e > 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  return os.str();
}

CharPoly char_poly(const IntersectionLattice& lat) {
  int d = lat.arrangement().dim();
  std::vector<Int> coeffs(static_cast<std::size_t>(d) + 1, Int(0));
  for (const auto& f : lat.flats()) {
    // t^{dim - rank}: position d - (d - rank) = rank in descending order.
    coeffs[f.rank] += f.mobius;
  }
  return CharPoly{std::move(coeffs)};
}

CharPoly char_poly(const Arrangement& a) { return char_poly(IntersectionLattice(a)); }

Int num_chambers(const Arrangement& a) {
  CharPoly chi = char_poly(a);
  Rat v = chi.evaluate(Rat(-1));
  Int r = v.get_num();
  if (a.dim() % 2 == 1) r = -r;
  return r;
}

std::vector<Int> poincare_poly(const Arrangement& a) {
  CharPoly chi = char_poly(a);
  int d = a.dim();
  // pi(t) = sum over flats mu * (-t)^rank; from chi: coefficient of
  // t^{d-r} is sum of mu over rank-r flats.
  std::vector<Int> pi(static_cast<std::size_t>(d) + 1, Int(0));
  for (std::size_t i = 0; i < chi.coeffs.size(); ++i) {
    std::size_t r = i;  // coeffs stored descending: coeffs[r] = sum mu at rank r
    Int c = chi.coeffs[i];
    if (r % 2 == 1) c = -c;
    pi[r] = c;
  }
  return pi;
}

bool lattices_equal_labeled(const Arrangement& a, const Arrangement& b,
                            const std::vector<std::size_t>& bijection) {
  if (a.size() != b.size())
    throw std::invalid_argument("labeled lattice comparison needs equal sizes");
  if (bijection.size() != a.size())
    throw std::invalid_argument("bijection must cover every form");
  {
    std::vector<bool> hit(b.size(), false);
    for (auto j : bijection) {
      if (j >= b.size() || hit[j]) throw std::invalid_argument("not a bijection");
      hit[j] = true;
    }
  }
  IntersectionLattice la(a), lb(b);
  if (la.num_flats() != lb.num_flats()) return false;
  std::set<std::vector<std::size_t>> target;
  for (const auto& f : lb.flats()) target.insert(f.support);
  for (const auto& f : la.flats()) {
    std::vector<std::size_t> mapped;
    mapped.reserve(f.support.size());
    for (auto i : f.support) mapped.push_back(bijection[i]);
    std::sort(mapped.begin(), mapped.end());
    if (!target.count(mapped)) return false;
  }
  return true;
}

namespace {

// can_reach_top(x): a chain of modular flats, one per rank, from x to the
// top flat. Memoized on the flat; the path below x does not matter.
bool modular_chain_from(const IntersectionLattice& lat, std::size_t x,
                        std::map<std::size_t, bool>& memo,
                        const std::vector<bool>& modular) {
  if (lat.flat(x).rank == lat.rank()) return true;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (std::size_t y = 0; y < lat.num_flats() && !ok; ++y) {
    if (lat.flat(y).rank != lat.flat(x).rank + 1) continue;
    if (!modular[y]) continue;
    if (!lat.leq(x, y)) continue;
    ok = modular_chain_from(lat, y, memo, modular);
  }
  memo[x] = ok;
  return ok;
}

}  // namespace

bool is_supersolvable(const IntersectionLattice& lat) {
  std::vector<bool> modular(lat.num_flats(), false);
  for (std::size_t i = 0; i < lat.num_flats(); ++i) modular[i] = lat.is_modular_flat(i);
  std::map<std::size_t, bool> memo;
  // Bottom flat is rank 0 and always modular.
  return modular_chain_from(lat, 0, memo, modular);
}

bool is_supersolvable(const Arrangement& a) {
  return is_supersolvable(IntersectionLattice(a));
}

namespace {

// Backtracking search for a lattice-preserving bijection. Pruning uses
// 3-subset ranks (collinearity pattern); the final candidate is verified
// with the full labeled-lattice check, so the result is exact.
struct IsoSearch {
  const Arrangement& a;
  const Arrangement& b;
  std::size_t n;
  std::vector<std::size_t> sigma;
  std::vector<bool> used;

  IsoSearch(const Arrangement& a_, const Arrangement& b_)
      : a(a_), b(b_), n(a_.size()), sigma(n, 0), used(n, false) {}

  std::size_t triple_rank(const Arrangement& arr, std::size_t i, std::size_t j,
                          std::size_t k) const {
    return rank_of_int_rows({arr.form(i).coeffs, arr.form(j).coeffs, arr.form(k).coeffs});
  }

  bool extend(std::size_t pos) {
    if (pos == n) return lattices_equal_labeled(a, b, sigma);
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i) {
        for (std::size_t j = i + 1; j < pos && ok; ++j) {
          if (triple_rank(a, i, j, pos) != triple_rank(b, sigma[i], sigma[j], cand))
            ok = false;
        }
      }
      if (!ok) continue;
      sigma[pos] = cand;
      used[cand] = true;
      if (extend(pos + 1)) return true;
      used[cand] = false;
    }
    return false;
  }
};

}  // namespace

bool matroid_isomorphic(const Arrangement& a, const Arrangement& b) {
  if (a.size() != b.size()) return false;
  if (a.rank() != b.rank()) return false;
  if (a.empty()) return true;
  IsoSearch search(a, b);
  return search.extend(0);
}

ChiRootExtraction extract_integer_roots(const CharPoly& chi, std::size_t max_root) {
  ChiRootExtraction out;
  out.remainder = chi.coeffs;
  for (std::size_t r = 0; r <= max_root && out.remainder.size() > 1;) {
    // Synthetic division by (t - r); accept only exact divisions.
    const Int root(static_cast<unsigned long>(r));
    std::vector<Int> q(out.remainder.size() - 1);
    Int carry(0);
    for (std::size_t i = 0; i + 1 < out.remainder.size(); ++i) {
      carry = out.remainder[i] + carry * root;
      q[i] = carry;
    }
    Int rem = out.remainder.back() + carry * root;
    if (rem == 0) {
      out.roots.push_back(r);
      out.remainder = std::move(q);
      // same r again: multiplicities
    } else {
      ++r;
    }
  }
  return out;
}

}  // namespace arr
