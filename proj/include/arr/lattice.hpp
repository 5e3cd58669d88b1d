#pragma once

#include <map>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/rational.hpp"

namespace arr {

// A flat of the intersection lattice, keyed by its closed support set
// (indices of all forms vanishing on the subspace).
struct Flat {
  std::vector<std::size_t> support;  // sorted, closure-complete
  std::size_t rank = 0;              // codimension of the subspace
  Int mobius = 0;                    // mu(ambient, this flat)
};

class IntersectionLattice {
 public:
  explicit IntersectionLattice(const Arrangement& a);

  const Arrangement& arrangement() const { return arr_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(std::size_t i) const { return flats_[i]; }
  std::size_t num_flats() const { return flats_.size(); }
  std::size_t rank() const { return rank_; }

  // Flats of a given rank, as indices into flats().
  std::vector<std::size_t> flats_of_rank(std::size_t r) const;

  // Index of the flat with the given closed support; throws if absent.
  std::size_t flat_by_support(const std::vector<std::size_t>& support) const;

  // Lattice order: x <= y iff support(x) is contained in support(y).
  bool leq(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const;
  std::size_t join(std::size_t x, std::size_t y) const;

  bool is_modular_flat(std::size_t x) const;
  std::vector<std::size_t> modular_flats() const;

 private:
  Arrangement arr_;
  std::vector<Flat> flats_;          // sorted by (rank, support)
  std::map<std::vector<std::size_t>, std::size_t> by_support_;
  std::size_t rank_ = 0;
};

// Characteristic polynomial chi(a, t); coefficients are exact integers,
// stored descending from t^dim, monic, degree = ambient dim.
struct CharPoly {
  std::vector<Int> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  Rat evaluate(const Rat& t) const;
  bool operator==(const CharPoly& o) const { return coeffs == o.coeffs; }
  std::string str() const;
};

CharPoly char_poly(const Arrangement& a);
CharPoly char_poly(const IntersectionLattice& lat);

// Zaslavsky: number of chambers of the real complement.
Int num_chambers(const Arrangement& a);

// Poincare polynomial pi(a, t) = (-t)^dim * chi(-1/t); coefficients
// ascending in t, all non-negative.
std::vector<Int> poincare_poly(const Arrangement& a);

// True iff mapping a's flat supports through the index bijection yields
// exactly b's flat supports. bijection[i] = index in b of a's form i.
bool lattices_equal_labeled(const Arrangement& a, const Arrangement& b,
                            const std::vector<std::size_t>& bijection);

bool is_supersolvable(const Arrangement& a);
bool is_supersolvable(const IntersectionLattice& lat);

// Searches for a form bijection making the labeled lattices equal
// (bounded backtracking; intended for |a| <= 14).
bool matroid_isomorphic(const Arrangement& a, const Arrangement& b);

// Extracts non-negative integer roots of chi by ascending trial division.
// Freeness-relevant roots are bounded by the hyperplane count, so the
// candidate range 0..n is exhaustive.
struct ChiRootExtraction {
  std::vector<std::size_t> roots;  // with multiplicity, ascending
  std::vector<Int> remainder;      // monic factor left over, descending coeffs
  bool complete() const { return remainder.size() == 1; }
};

ChiRootExtraction extract_integer_roots(const CharPoly& chi, std::size_t max_root);

}  // namespace arr
