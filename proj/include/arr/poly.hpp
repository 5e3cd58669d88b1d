#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arr/rational.hpp"

namespace arr {

// Exponent vector; length equals the variable count of the owning polynomial.
using Monomial = std::vector<std::uint32_t>;

// Multivariate polynomial over Q with a canonical term map: no zero
// coefficients are ever stored, the zero polynomial is the empty map.
class MvPoly {
 public:
  explicit MvPoly(int nvars = 0) : nvars_(nvars) {}

  static MvPoly zero(int nvars) { return MvPoly(nvars); }
  static MvPoly constant(int nvars, const Rat& c);
  // The variable x_i as a polynomial.
  static MvPoly var(int nvars, int i);
  // c0*x_0 + ... + c_{d-1}*x_{d-1}
  static MvPoly linear(const std::vector<Rat>& coeffs);
  static MvPoly linear_int(const std::vector<Int>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);
  Rat coeff(const Monomial& m) const;

  MvPoly operator-() const;
  MvPoly operator+(const MvPoly& o) const;
  MvPoly operator-(const MvPoly& o) const;
  MvPoly operator*(const MvPoly& o) const;
  MvPoly operator*(const Rat& c) const;
  bool operator==(const MvPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // -1 for the zero polynomial.
  long total_degree() const;
  // True when all terms share the same total degree (zero counts as
  // homogeneous of any degree).
  bool is_homogeneous() const;

  MvPoly derivative(int var) const;
  Rat evaluate(const std::vector<Rat>& point) const;

  // Substitutes variable `var` by the polynomial `value` (same nvars).
  MvPoly substitute(int var, const MvPoly& value) const;

  // Degree-1 homogeneous with at least one nonzero coefficient?
  bool is_nonzero_linear_form() const;
  // Reads off the coefficient vector of a linear form.
  std::vector<Rat> linear_coeffs() const;

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  int nvars_;
  std::map<Monomial, Rat> terms_;
};

// Eliminates the pivot variable of `l` (first variable with nonzero
// coefficient) from `p` by substituting the solution of l = 0.
// p is divisible by l iff the result is zero.
MvPoly reduce_mod_linear(const MvPoly& p, const MvPoly& l);

// Exact determinant of a square polynomial matrix (cofactor expansion
// with memoized minors keyed on column subsets).
MvPoly poly_det(const std::vector<std::vector<MvPoly>>& m);

// Default variable names: x,y,z,w for nvars <= 4, else x1..xn.
std::vector<std::string> default_var_names(int nvars);

}  // namespace arr
