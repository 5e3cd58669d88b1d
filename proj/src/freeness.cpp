#include "arr/freeness.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arr {

using json = nlohmann::ordered_json;

ExponentMultiset low_rank_exponents(int dim, std::size_t n) {
  ExponentMultiset e(static_cast<std::size_t>(dim), 0);
  if (dim >= 1 && n >= 1) e[0] = 1;
  if (dim >= 2 && n >= 2) e[1] = n - 1;
  std::sort(e.begin(), e.end());
  return e;
}

namespace {

// Multiset difference big - small; nullopt if small is not contained.
std::optional<ExponentMultiset> multiset_subtract(const ExponentMultiset& big,
                                                  const ExponentMultiset& small) {
  ExponentMultiset out;
  std::size_t i = 0, j = 0;
  while (i < big.size()) {
    if (j < small.size() && big[i] == small[j]) {
      ++i;
      ++j;
    } else if (j < small.size() && small[j] < big[i]) {
      return std::nullopt;
    } else {
      out.push_back(big[i]);
      ++i;
    }
  }
  if (j != small.size()) return std::nullopt;
  return out;
}

// Addition step bookkeeping: from exp(A') and exp(A|H), infer exp(A).
std::optional<ExponentMultiset> addition_exponents(const ExponentMultiset& deleted,
                                                   const ExponentMultiset& restricted,
                                                   std::size_t n_hyperplanes) {
  auto diff = multiset_subtract(deleted, restricted);
  if (!diff || diff->size() != 1) return std::nullopt;
  std::size_t e = (*diff)[0] + 1;
  ExponentMultiset result = restricted;
  result.insert(std::lower_bound(result.begin(), result.end(), e), e);
  std::size_t sum = 0;
  for (auto v : result) sum += v;
  if (sum != n_hyperplanes) return std::nullopt;
  return result;
}

class ADProver {
 public:
  explicit ADProver(long budget) : budget_(budget) {}

  // chi integer-root multiset, or nullopt when chi does not fully factor
  // (such arrangements are not free and can never occur in a proof).
  const std::optional<ExponentMultiset>& chi_roots_of(const Arrangement& a,
                                                      const std::string& key) {
    auto it = chi_memo_.find(key);
    if (it != chi_memo_.end()) return it->second;
    auto extraction = extract_integer_roots(char_poly(a), a.size());
    std::optional<ExponentMultiset> roots;
    if (extraction.complete())
      roots = ExponentMultiset(extraction.roots.begin(), extraction.roots.end());
    return chi_memo_.emplace(key, std::move(roots)).first->second;
  }

  std::optional<FreenessCertificate> prove(const Arrangement& a) {
    Result r = go(a);
    if (!r.proved) return std::nullopt;
    FreenessCertificate cert;
    cert.verdict = "free";
    cert.arrangement = a;
    cert.witness_kind = "addition_deletion";
    cert.exponents = r.exponents;
    cert.root_id = r.node_id;
    // Keep only nodes reachable from the root.
    std::set<std::string> keep;
    std::vector<std::string> work = {r.node_id};
    while (!work.empty()) {
      std::string id = work.back();
      work.pop_back();
      if (!keep.insert(id).second) continue;
      const ADNode& n = node_by_id_.at(id);
      if (n.kind == "step") {
        work.push_back(n.deleted_child);
        work.push_back(n.restricted_child);
      }
    }
    for (const auto& n : nodes_) {
      if (keep.count(n.id)) cert.nodes.push_back(n);
    }
    return cert;
  }

 private:
  struct Result {
    bool proved = false;
    bool complete = true;  // false when the failure may be budget-induced
    ExponentMultiset exponents;
    std::string node_id;
  };

  Result go(const Arrangement& a) {
    const std::string key = a.serialize();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (budget_ <= 0) return {false, false, {}, {}};
    --budget_;

    Result res;
    if (a.empty()) {
      res = {true, true, ExponentMultiset(static_cast<std::size_t>(a.dim()), 0),
             new_node(a, "empty", ExponentMultiset(static_cast<std::size_t>(a.dim()), 0))};
      memo_[key] = res;
      return res;
    }
    if (a.rank() <= 2) {
      auto e = low_rank_exponents(a.dim(), a.size());
      res = {true, true, e, new_node(a, "rank_le_2", e)};
      memo_[key] = res;
      return res;
    }

    // Terao-factorization gate: a free arrangement's chi splits over the
    // non-negative integers, so nodes without full root multisets admit no
    // proof at all. The same gate filters candidate hyperplanes before any
    // recursion: both children's root multisets must already satisfy the
    // exponent bookkeeping.
    const auto& roots = chi_roots_of(a, key);
    if (!roots) {
      res = {false, true, {}, {}};
      memo_[key] = res;
      return res;
    }

    // Heuristic: hyperplanes whose restriction is smallest first; ties in
    // canonical form order.
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (restriction size, index)
    std::vector<RestrictionResult> restrictions(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      restrictions[i] = restrict_to(a, a.form(i));
      order.emplace_back(restrictions[i].restricted.size(), i);
    }
    std::sort(order.begin(), order.end());

    bool all_complete = true;
    for (const auto& [_, i] : order) {
      const Arrangement& res_arr = restrictions[i].restricted;
      const auto& res_roots = chi_roots_of(res_arr, res_arr.serialize());
      if (!res_roots) continue;
      auto diff = multiset_subtract(*roots, *res_roots);
      if (!diff || diff->size() != 1 || (*diff)[0] == 0) continue;
      // Required deletion exponents: roots with e replaced by e - 1.
      ExponentMultiset required = *res_roots;
      std::size_t e1 = (*diff)[0] - 1;
      required.insert(std::lower_bound(required.begin(), required.end(), e1), e1);
      Arrangement del = delete_form(a, a.form(i));
      const std::string del_key = del.serialize();
      const auto& del_roots = chi_roots_of(del, del_key);
      if (!del_roots || *del_roots != required) continue;

      Result rd = go(del);
      if (!rd.proved) {
        all_complete = all_complete && rd.complete;
        continue;
      }
      Result rr = go(res_arr);
      if (!rr.proved) {
        all_complete = all_complete && rr.complete;
        continue;
      }
      auto exps = addition_exponents(rd.exponents, rr.exponents, a.size());
      if (!exps) continue;
      ADNode node;
      node.arrangement = a;
      node.kind = "step";
      node.exponents = *exps;
      node.chosen = a.form(i);
      node.deleted_child = rd.node_id;
      node.restricted_child = rr.node_id;
      node.id = "n" + std::to_string(nodes_.size());
      nodes_.push_back(node);
      node_by_id_[node.id] = node;
      res = {true, true, *exps, node.id};
      memo_[key] = res;
      return res;
    }
    res = {false, all_complete, {}, {}};
    if (all_complete) memo_[key] = res;
    return res;
  }

  std::string new_node(const Arrangement& a, const std::string& kind,
                       const ExponentMultiset& exps) {
    ADNode node;
    node.id = "n" + std::to_string(nodes_.size());
    node.arrangement = a;
    node.kind = kind;
    node.exponents = exps;
    nodes_.push_back(node);
    node_by_id_[node.id] = node;
    return node.id;
  }

  long budget_;
  std::map<std::string, Result> memo_;
  std::map<std::string, std::optional<ExponentMultiset>> chi_memo_;
  std::vector<ADNode> nodes_;
  std::map<std::string, ADNode> node_by_id_;
};

}  // namespace

std::optional<FreenessCertificate> prove_free_AD(const Arrangement& a, long budget) {
  ADProver prover(budget);
  return prover.prove(a);
}

std::optional<FreenessCertificate> prove_nonfree(const Arrangement& a) {
  CharPoly chi = char_poly(a);
  auto extraction = extract_integer_roots(chi, a.size());
  if (!extraction.complete()) {
    FreenessCertificate cert;
    cert.verdict = "not_free";
    cert.arrangement = a;
    cert.witness_kind = "chi_roots";
    cert.chi_roots = ChiRootsWitness{chi, extraction.roots, extraction.remainder};
    return cert;
  }
  ExponentMultiset candidate(extraction.roots.begin(), extraction.roots.end());
  std::size_t max_e = candidate.empty() ? 0 : candidate.back();
  for (long d = 0; d <= static_cast<long>(max_e) + 1; ++d) {
    Int expected = free_hilbert_dim(candidate, a.dim(), d);
    GradedSlice slice = derivation_dim(a, d);
    Int computed(static_cast<unsigned long>(slice.dimension));
    if (computed != expected) {
      FreenessCertificate cert;
      cert.verdict = "not_free";
      cert.arrangement = a;
      cert.witness_kind = "hilbert_mismatch";
      cert.hilbert = HilbertMismatchWitness{candidate, d, expected, computed};
      return cert;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

json arrangement_to_json(const Arrangement& a) {
  json forms = json::array();
  for (const auto& f : a.forms()) {
    json row = json::array();
    for (const auto& c : f.coeffs) row.push_back(c.get_str());
    forms.push_back(row);
  }
  return json{{"dim", a.dim()}, {"forms", forms}};
}

Arrangement arrangement_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : j.at("forms")) {
    std::vector<Rat> v;
    for (const auto& c : row) v.push_back(parse_rational_or_throw(c.get<std::string>()));
    rows.push_back(std::move(v));
  }
  Arrangement a = make_arrangement(dim, rows);
  if (a.size() != j.at("forms").size())
    throw std::invalid_argument("arrangement forms not canonical in certificate");
  return a;
}

json form_to_json(const LinearForm& f) {
  json row = json::array();
  for (const auto& c : f.coeffs) row.push_back(c.get_str());
  return row;
}

LinearForm form_from_json(const json& j) {
  std::vector<Int> v;
  for (const auto& c : j) v.emplace_back(c.get<std::string>());
  return LinearForm{v};
}

json poly_to_json(const MvPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (auto e : m) exps.push_back(e);
    terms.push_back(json{{"coeff", to_string(c)}, {"exps", exps}});
  }
  return json{{"nvars", p.nvars()}, {"terms", terms}};
}

MvPoly poly_from_json(const json& j) {
  MvPoly p(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& e : t.at("exps")) m.push_back(e.get<std::uint32_t>());
    p.add_term(m, parse_rational_or_throw(t.at("coeff").get<std::string>()));
  }
  return p;
}

json int_vec_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(z.get_str());
  return out;
}

std::vector<Int> int_vec_from_json(const json& j) {
  std::vector<Int> out;
  for (const auto& c : j) out.emplace_back(c.get<std::string>());
  return out;
}

}  // namespace

std::string FreenessCertificate::to_json() const {
  json j;
  j["schema"] = "freeness-certificate/1";
  j["verdict"] = verdict;
  j["arrangement"] = arrangement_to_json(arrangement);
  if (verdict == "free") j["exponents"] = exponents;
  json w;
  w["kind"] = witness_kind;
  if (witness_kind == "addition_deletion") {
    w["root"] = root_id;
    json ns = json::array();
    for (const auto& n : nodes) {
      json nj;
      nj["id"] = n.id;
      nj["kind"] = n.kind;
      nj["arrangement"] = arrangement_to_json(n.arrangement);
      nj["exponents"] = n.exponents;
      if (n.kind == "step") {
        nj["chosen"] = form_to_json(n.chosen);
        nj["deleted"] = n.deleted_child;
        nj["restricted"] = n.restricted_child;
      }
      ns.push_back(nj);
    }
    w["nodes"] = ns;
  } else if (witness_kind == "saito") {
    json ds = json::array();
    for (const auto& t : saito->derivations) {
      json comps = json::array();
      for (const auto& p : t.components) comps.push_back(poly_to_json(p));
      ds.push_back(comps);
    }
    w["derivations"] = ds;
    w["constant"] = to_string(saito->constant);
  } else if (witness_kind == "chi_roots") {
    w["chi"] = int_vec_to_json(chi_roots->chi.coeffs);
    w["extracted_roots"] = chi_roots->roots;
    w["remainder"] = int_vec_to_json(chi_roots->remainder);
    w["admitted_rules"] = json::array({"terao_factorization"});
  } else if (witness_kind == "hilbert_mismatch") {
    w["candidate_exponents"] = hilbert->candidate_exponents;
    w["degree"] = hilbert->degree;
    w["expected"] = to_string(Rat(hilbert->expected));
    w["computed"] = to_string(Rat(hilbert->computed));
    w["admitted_rules"] = json::array({"terao_factorization"});
  }
  j["witness"] = w;
  return j.dump(2) + "\n";
}

FreenessCertificate FreenessCertificate::from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema").get<std::string>() != "freeness-certificate/1")
    throw std::invalid_argument("unknown certificate schema");
  FreenessCertificate cert;
  cert.verdict = j.at("verdict").get<std::string>();
  cert.arrangement = arrangement_from_json(j.at("arrangement"));
  if (j.contains("exponents"))
    cert.exponents = j.at("exponents").get<ExponentMultiset>();
  const json& w = j.at("witness");
  cert.witness_kind = w.at("kind").get<std::string>();
  if (cert.witness_kind == "addition_deletion") {
    cert.root_id = w.at("root").get<std::string>();
    for (const auto& nj : w.at("nodes")) {
      ADNode n;
      n.id = nj.at("id").get<std::string>();
      n.kind = nj.at("kind").get<std::string>();
      n.arrangement = arrangement_from_json(nj.at("arrangement"));
      n.exponents = nj.at("exponents").get<ExponentMultiset>();
      if (n.kind == "step") {
        n.chosen = form_from_json(nj.at("chosen"));
        n.deleted_child = nj.at("deleted").get<std::string>();
        n.restricted_child = nj.at("restricted").get<std::string>();
      }
      cert.nodes.push_back(std::move(n));
    }
  } else if (cert.witness_kind == "saito") {
    SaitoWitness sw;
    for (const auto& dj : w.at("derivations")) {
      Derivation t;
      for (const auto& pj : dj) t.components.push_back(poly_from_json(pj));
      sw.derivations.push_back(std::move(t));
    }
    sw.constant = parse_rational_or_throw(w.at("constant").get<std::string>());
    cert.saito = std::move(sw);
  } else if (cert.witness_kind == "chi_roots") {
    ChiRootsWitness cw;
    cw.chi.coeffs = int_vec_from_json(w.at("chi"));
    cw.roots = w.at("extracted_roots").get<std::vector<std::size_t>>();
    cw.remainder = int_vec_from_json(w.at("remainder"));
    cert.chi_roots = std::move(cw);
  } else if (cert.witness_kind == "hilbert_mismatch") {
    HilbertMismatchWitness hw;
    hw.candidate_exponents = w.at("candidate_exponents").get<ExponentMultiset>();
    hw.degree = w.at("degree").get<long>();
    hw.expected = Int(w.at("expected").get<std::string>());
    hw.computed = Int(w.at("computed").get<std::string>());
    cert.hilbert = std::move(hw);
  } else {
    throw std::invalid_argument("unknown witness kind: " + cert.witness_kind);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

VerifyResult fail(const std::string& claim) { return {false, claim}; }

VerifyResult verify_ad(const FreenessCertificate& cert) {
  if (cert.verdict != "free") return fail("addition_deletion witness requires verdict 'free'");
  std::map<std::string, const ADNode*> by_id;
  for (const auto& n : cert.nodes) {
    if (by_id.count(n.id)) return fail("duplicate node id " + n.id);
    by_id[n.id] = &n;
  }
  auto root = by_id.find(cert.root_id);
  if (root == by_id.end()) return fail("root node missing");
  if (!(root->second->arrangement == cert.arrangement))
    return fail("root node arrangement differs from certified arrangement");
  if (root->second->exponents != cert.exponents)
    return fail("root exponents differ from certified exponents");

  for (const auto& n : cert.nodes) {
    if (n.exponents.size() != static_cast<std::size_t>(n.arrangement.dim()))
      return fail(n.id + ": exponent multiset size != ambient dim");
    if (!std::is_sorted(n.exponents.begin(), n.exponents.end()))
      return fail(n.id + ": exponents not sorted");
    if (n.kind == "empty") {
      if (!n.arrangement.empty()) return fail(n.id + ": 'empty' node is nonempty");
      for (auto e : n.exponents)
        if (e != 0) return fail(n.id + ": empty arrangement must have zero exponents");
    } else if (n.kind == "rank_le_2") {
      if (n.arrangement.rank() > 2) return fail(n.id + ": rank exceeds 2");
      if (n.exponents != low_rank_exponents(n.arrangement.dim(), n.arrangement.size()))
        return fail(n.id + ": base-case exponents incorrect");
    } else if (n.kind == "step") {
      if (!n.arrangement.contains(n.chosen))
        return fail(n.id + ": chosen form not in arrangement");
      auto del_it = by_id.find(n.deleted_child);
      auto res_it = by_id.find(n.restricted_child);
      if (del_it == by_id.end() || res_it == by_id.end())
        return fail(n.id + ": missing child node");
      Arrangement expect_del = delete_form(n.arrangement, n.chosen);
      if (!(del_it->second->arrangement == expect_del))
        return fail(n.id + ": deleted child arrangement mismatch");
      Arrangement expect_res = restrict_to(n.arrangement, n.chosen).restricted;
      if (!(res_it->second->arrangement == expect_res))
        return fail(n.id + ": restricted child arrangement mismatch");
      auto exps = addition_exponents(del_it->second->exponents,
                                     res_it->second->exponents, n.arrangement.size());
      if (!exps) return fail(n.id + ": exponent bookkeeping fails");
      if (*exps != n.exponents) return fail(n.id + ": claimed exponents do not match step");
    } else {
      return fail(n.id + ": unknown node kind '" + n.kind + "'");
    }
  }
  // Acyclicity: children must certify strictly smaller data. Walk from the
  // root with a visited bound.
  std::set<std::string> visiting;
  std::function<VerifyResult(const std::string&, std::size_t)> walk =
      [&](const std::string& id, std::size_t depth) -> VerifyResult {
    if (depth > cert.nodes.size()) return fail("node graph has a cycle");
    const ADNode* n = by_id.at(id);
    if (n->kind == "step") {
      auto r1 = walk(n->deleted_child, depth + 1);
      if (!r1.ok) return r1;
      return walk(n->restricted_child, depth + 1);
    }
    return {true, ""};
  };
  return walk(cert.root_id, 0);
}

VerifyResult verify_saito(const FreenessCertificate& cert) {
  if (cert.verdict != "free") return fail("saito witness requires verdict 'free'");
  if (!cert.saito) return fail("saito witness missing");
  SaitoResult r = saito_check(cert.arrangement, cert.saito->derivations);
  if (!r.is_basis()) return fail("saito criterion fails: " + r.detail);
  if (r.constant != cert.saito->constant)
    return fail("recorded constant differs from recomputed determinant ratio");
  ExponentMultiset degs;
  for (const auto& t : cert.saito->derivations) {
    long d = t.degree();
    degs.push_back(d < 0 ? 0 : static_cast<std::size_t>(d));
  }
  std::sort(degs.begin(), degs.end());
  if (degs != cert.exponents) return fail("exponents do not match the basis degrees");
  return {true, ""};
}

VerifyResult verify_chi_roots(const FreenessCertificate& cert) {
  if (cert.verdict != "not_free") return fail("chi_roots witness requires verdict 'not_free'");
  if (!cert.chi_roots) return fail("chi_roots witness missing");
  CharPoly chi = char_poly(cert.arrangement);
  if (!(chi.coeffs == cert.chi_roots->chi.coeffs))
    return fail("recorded chi differs from recomputed chi");
  auto extraction = extract_integer_roots(chi, cert.arrangement.size());
  if (extraction.roots != cert.chi_roots->roots)
    return fail("recorded root transcript differs from recomputation");
  if (!(extraction.remainder == cert.chi_roots->remainder))
    return fail("recorded remainder differs from recomputation");
  if (extraction.complete())
    return fail("chi fully factors over non-negative integers; no obstruction");
  return {true, ""};
}

VerifyResult verify_hilbert(const FreenessCertificate& cert) {
  if (cert.verdict != "not_free")
    return fail("hilbert_mismatch witness requires verdict 'not_free'");
  if (!cert.hilbert) return fail("hilbert witness missing");
  CharPoly chi = char_poly(cert.arrangement);
  auto extraction = extract_integer_roots(chi, cert.arrangement.size());
  if (!extraction.complete())
    return fail("chi does not fully factor; hilbert witness inapplicable");
  ExponentMultiset roots(extraction.roots.begin(), extraction.roots.end());
  if (roots != cert.hilbert->candidate_exponents)
    return fail("candidate exponents differ from chi roots");
  Int expected = free_hilbert_dim(cert.hilbert->candidate_exponents,
                                  cert.arrangement.dim(), cert.hilbert->degree);
  if (expected != cert.hilbert->expected)
    return fail("recorded expected dimension is wrong");
  GradedSlice slice = derivation_dim(cert.arrangement, cert.hilbert->degree);
  Int computed(static_cast<unsigned long>(slice.dimension));
  if (computed != cert.hilbert->computed)
    return fail("recorded computed dimension is wrong");
  if (expected == computed) return fail("no mismatch at the recorded degree");
  return {true, ""};
}

}  // namespace

VerifyResult verify_certificate(const FreenessCertificate& cert) {
  try {
    if (cert.witness_kind == "addition_deletion") return verify_ad(cert);
    if (cert.witness_kind == "saito") return verify_saito(cert);
    if (cert.witness_kind == "chi_roots") return verify_chi_roots(cert);
    if (cert.witness_kind == "hilbert_mismatch") return verify_hilbert(cert);
    return fail("unknown witness kind '" + cert.witness_kind + "'");
  } catch (const std::exception& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  }
}

DecideResult decide(const Arrangement& a, const DecideOptions& opts) {
  DecideResult out;
  auto check_free = [&](const FreenessCertificate& cert) {
    // Terao-factorization consistency: chi's integer roots must equal the
    // exponents of every Free verdict.
    std::size_t sum = 0;
    for (auto e : cert.exponents) sum += e;
    if (sum != a.size())
      throw std::logic_error("free verdict violates exponent sum invariant");
    auto extraction = extract_integer_roots(char_poly(a), a.size());
    ExponentMultiset roots(extraction.roots.begin(), extraction.roots.end());
    if (!extraction.complete() || roots != cert.exponents)
      throw std::logic_error("free verdict contradicts chi factorization");
  };

  if (auto cert = prove_free_AD(a, opts.budget)) {
    check_free(*cert);
    out.status = FreeStatus::Free;
    out.exponents = cert->exponents;
    out.certificate = std::move(cert);
    return out;
  }
  for (const auto& basis : opts.candidate_bases) {
    if (static_cast<int>(basis.size()) != a.dim()) continue;
    SaitoResult r = saito_check(a, basis);
    if (!r.is_basis()) continue;
    FreenessCertificate cert;
    cert.verdict = "free";
    cert.arrangement = a;
    cert.witness_kind = "saito";
    cert.saito = SaitoWitness{basis, r.constant};
    ExponentMultiset degs;
    for (const auto& t : basis) {
      long d = t.degree();
      degs.push_back(d < 0 ? 0 : static_cast<std::size_t>(d));
    }
    std::sort(degs.begin(), degs.end());
    cert.exponents = degs;
    check_free(cert);
    out.status = FreeStatus::Free;
    out.exponents = cert.exponents;
    out.certificate = std::move(cert);
    return out;
  }
  if (auto cert = prove_nonfree(a)) {
    out.status = FreeStatus::NotFree;
    out.certificate = std::move(cert);
    return out;
  }
  out.status = FreeStatus::Unknown;
  return out;
}

}  // namespace arr
