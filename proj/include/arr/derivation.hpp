#pragma once

#include <string>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/poly.hpp"

namespace arr {

// theta = sum_i f_i d/dx_i, with homogeneous f_i of one common degree.
// The zero derivation is a member of every degree.
struct Derivation {
  std::vector<MvPoly> components;  // one per variable

  int nvars() const { return static_cast<int>(components.size()); }
  bool is_zero() const;
  // Common homogeneous degree of the nonzero components; -1 when zero.
  long degree() const;
  // All nonzero components homogeneous of equal degree?
  bool is_homogeneous() const;

  std::string str(const std::vector<std::string>& var_names = {}) const;
};

Derivation euler_derivation(int nvars);

MvPoly apply(const Derivation& theta, const MvPoly& p);

// theta(l_H) divisible by l_H for every H in a.
bool is_member(const Derivation& theta, const Arrangement& a);

enum class SaitoVerdict {
  IsBasis,
  DetZero,
  DetNotProportional,
  DegreeMismatch,
  MembershipFailure,
};

struct SaitoResult {
  SaitoVerdict verdict;
  Rat constant;        // det = constant * Q when IsBasis
  std::string detail;  // human-readable reason otherwise

  bool is_basis() const { return verdict == SaitoVerdict::IsBasis; }
};

// Saito's criterion: dim derivations are a basis of D(a) iff the
// determinant of their coefficient matrix is a nonzero scalar multiple of
// the defining polynomial.
SaitoResult saito_check(const Arrangement& a, const std::vector<Derivation>& thetas);

// The explicit degree-(1,4,4) basis printed for the 3-dimensional family,
// with alpha substituted verbatim.
std::vector<Derivation> terao_basis(const Rat& alpha);

struct GradedSlice {
  long degree = 0;
  std::size_t dimension = 0;
};

// Dimension of the degree-d slice of D(a): unknown monomial coefficients
// minus the rank of the divisibility constraint matrix.
GradedSlice derivation_dim(const Arrangement& a, long d);

// Hilbert function of a free module with the given exponents at degree d.
Int free_hilbert_dim(const std::vector<std::size_t>& exponents, int dim, long d);

}  // namespace arr
