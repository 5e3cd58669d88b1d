#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arr/poly.hpp"
#include "arr/rational.hpp"

namespace arr {

// Canonical hyperplane covector: primitive integer entries, first nonzero
// entry positive. Two proportional forms always canonicalize identically.
struct LinearForm {
  std::vector<Int> coeffs;

  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
  bool operator<(const LinearForm& o) const;

  MvPoly poly() const { return MvPoly::linear_int(coeffs); }
  std::string str(const std::vector<std::string>& var_names = {}) const;
};

LinearForm normalize_form(const std::vector<Rat>& v);
LinearForm normalize_form_int(const std::vector<Int>& v);

// Central arrangement: ambient dimension plus a strictly sorted,
// deduplicated list of canonical forms. Value type; compare by ==.
class Arrangement {
 public:
  Arrangement() : dim_(0) {}
  Arrangement(int dim, std::vector<LinearForm> sorted_forms);

  int dim() const { return dim_; }
  std::size_t size() const { return forms_.size(); }
  bool empty() const { return forms_.empty(); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& form(std::size_t i) const { return forms_[i]; }

  bool contains(const LinearForm& h) const;
  // Index of h among the sorted forms; throws if absent.
  std::size_t index_of(const LinearForm& h) const;

  std::size_t rank() const;
  MvPoly defining_polynomial() const;

  bool operator==(const Arrangement& o) const {
    return dim_ == o.dim_ && forms_ == o.forms_;
  }
  bool operator<(const Arrangement& o) const;

  // Canonical serialization, also the text file format.
  std::string serialize() const;

 private:
  int dim_;
  std::vector<LinearForm> forms_;
};

Arrangement make_arrangement(int dim, const std::vector<std::vector<Rat>>& raw_forms);
Arrangement make_arrangement_int(int dim, const std::vector<std::vector<Int>>& raw_forms);

// The two one-parameter families. *_forms returns the canonical forms in
// the order the family lists them (duplicates retained for degenerate
// alpha), so positional claims about the listing stay testable.
Arrangement family_A(const Rat& alpha);
std::vector<LinearForm> family_A_forms(const Rat& alpha);
Arrangement family_B(const Rat& alpha);
std::vector<LinearForm> family_B_forms(const Rat& alpha);

Arrangement family_braid(int d);
Arrangement family_boolean(int d);

// a with h removed; throws if h is not a member.
Arrangement delete_form(const Arrangement& a, const LinearForm& h);

struct RestrictionResult {
  Arrangement restricted;                       // lives in dim-1
  std::vector<std::vector<Int>> embedding;      // dim x (dim-1), columns span ker h
  // restricted form index -> indices (into a.forms()) of originals inducing it
  std::map<std::size_t, std::set<std::size_t>> provenance;
};

RestrictionResult restrict_to(const Arrangement& a, const LinearForm& h);

// Quotient onto the span of the forms: a rank-r arrangement in dimension r
// with the same matroid. Identity when already essential.
Arrangement essentialize(const Arrangement& a);

// Text format: line 1 "arrangement dim=<d>", then one form per line as
// whitespace-separated rationals; '#' starts a comment.
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement_file(const std::string& path);

}  // namespace arr
