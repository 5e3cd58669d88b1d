#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/derivation.hpp"
#include "arr/lattice.hpp"

namespace arr {

using ExponentMultiset = std::vector<std::size_t>;  // sorted ascending

// One node of an Addition-Deletion proof DAG. "step" nodes certify an
// arrangement from its deletion and restriction children; leaves are the
// empty or rank<=2 base cases.
struct ADNode {
  std::string id;
  Arrangement arrangement;
  std::string kind;  // "empty" | "rank_le_2" | "step"
  ExponentMultiset exponents;
  LinearForm chosen;            // step only
  std::string deleted_child;    // step only
  std::string restricted_child; // step only
};

struct SaitoWitness {
  std::vector<Derivation> derivations;
  Rat constant;
};

struct ChiRootsWitness {
  CharPoly chi;
  std::vector<std::size_t> roots;  // extracted with multiplicity, ascending
  std::vector<Int> remainder;      // nonconstant monic factor, descending coeffs
};

struct HilbertMismatchWitness {
  ExponentMultiset candidate_exponents;  // full chi root multiset
  long degree = 0;
  Int expected;       // free Hilbert function value
  Int computed;       // actual derivation-space dimension
};

// Machine-checkable freeness evidence. Exactly one witness is populated,
// matching witness_kind.
struct FreenessCertificate {
  std::string verdict;       // "free" | "not_free"
  Arrangement arrangement;
  std::string witness_kind;  // "addition_deletion" | "saito" | "chi_roots" | "hilbert_mismatch"
  ExponentMultiset exponents;  // free verdicts only

  std::vector<ADNode> nodes;  // addition_deletion
  std::string root_id;        // addition_deletion
  std::optional<SaitoWitness> saito;
  std::optional<ChiRootsWitness> chi_roots;
  std::optional<HilbertMismatchWitness> hilbert;

  std::string to_json() const;
  static FreenessCertificate from_json(const std::string& text);
};

// Exponents of a free rank<=2 arrangement: {1, n-1} padded with zeros.
ExponentMultiset low_rank_exponents(int dim, std::size_t n);

// Depth-first Addition-Deletion search with memoization on canonical
// arrangements. nullopt = inconclusive (budget exhausted or no proof).
std::optional<FreenessCertificate> prove_free_AD(const Arrangement& a,
                                                 long budget = 10000);

// Non-freeness via chi integer-root analysis, then Hilbert-function
// comparison against the root multiset. nullopt = inconclusive.
std::optional<FreenessCertificate> prove_nonfree(const Arrangement& a);

struct VerifyResult {
  bool ok = false;
  std::string failure;  // first failing claim when !ok

  explicit operator bool() const { return ok; }
};

// Re-checks every claim locally; no search.
VerifyResult verify_certificate(const FreenessCertificate& cert);

enum class FreeStatus { Free, NotFree, Unknown };

struct DecideOptions {
  long budget = 10000;
  // Tried through saito_check when the AD search is inconclusive.
  std::vector<std::vector<Derivation>> candidate_bases;
};

struct DecideResult {
  FreeStatus status = FreeStatus::Unknown;
  ExponentMultiset exponents;  // Free only
  std::optional<FreenessCertificate> certificate;
};

DecideResult decide(const Arrangement& a, const DecideOptions& opts = {});

}  // namespace arr
