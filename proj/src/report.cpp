#include "arr/report.hpp"

#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "arr/chambers.hpp"
#include "arr/derivation.hpp"
#include "arr/lattice.hpp"

namespace arr {

using json = nlohmann::ordered_json;

Arrangement AnalyzeInput::build() const {
  if (!file_path.empty()) return parse_arrangement_file(file_path);
  if (family == "A") return family_A(*alpha);
  if (family == "B") return family_B(*alpha);
  if (family == "braid") return family_braid(family_size);
  if (family == "boolean") return family_boolean(family_size);
  throw std::invalid_argument("unknown input selector");
}

std::string AnalyzeInput::describe() const {
  if (!file_path.empty()) return "file:" + file_path;
  if (family == "A" || family == "B")
    return family + "(alpha=" + to_string(*alpha) + ")";
  return family + "(" + std::to_string(family_size) + ")";
}

namespace {

json forms_json(const Arrangement& a) {
  json out = json::array();
  for (const auto& f : a.forms()) {
    json row = json::array();
    for (const auto& c : f.coeffs) row.push_back(c.get_str());
    out.push_back(row);
  }
  return out;
}

std::string chi_factored_str(const Arrangement& a, const CharPoly& chi) {
  auto extraction = extract_integer_roots(chi, a.size());
  if (!extraction.complete()) return chi.str();
  std::ostringstream os;
  std::size_t i = 0;
  while (i < extraction.roots.size()) {
    std::size_t j = i;
    while (j < extraction.roots.size() && extraction.roots[j] == extraction.roots[i]) ++j;
    if (i) os << "*";
    if (extraction.roots[i] == 0) os << "t";
    else os << "(t - " << extraction.roots[i] << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string freeness_summary(const DecideResult& r) {
  if (r.status == FreeStatus::Free) {
    std::ostringstream os;
    os << "free {";
    for (std::size_t i = 0; i < r.exponents.size(); ++i) {
      if (i) os << ",";
      os << r.exponents[i];
    }
    os << "}";
    return os.str();
  }
  if (r.status == FreeStatus::NotFree)
    return "not_free (" + r.certificate->witness_kind + ")";
  return "unknown";
}

bool is_special_alpha(const Rat& alpha) {
  return alpha == 0 || alpha == 1 || alpha == -1;
}

}  // namespace

AnalyzeOutcome analyze(const AnalyzeInput& input, const AnalyzeOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Arrangement a = input.build();

  json rep;
  rep["schema"] = "run-report/1";
  rep["tool"] = "arrtool";
  rep["version"] = kToolVersion;
  {
    json in;
    if (!input.file_path.empty()) {
      in["file"] = input.file_path;
    } else {
      in["family"] = input.family;
      if (input.alpha) in["alpha"] = to_string(*input.alpha);
      if (input.family == "braid" || input.family == "boolean")
        in["d"] = input.family_size;
    }
    rep["input"] = in;
  }
  {
    json aj;
    aj["dim"] = a.dim();
    aj["num_forms"] = a.size();
    aj["rank"] = a.rank();
    aj["forms"] = forms_json(a);
    rep["arrangement"] = aj;
  }

  IntersectionLattice lat(a);
  CharPoly chi = char_poly(lat);
  {
    json lj;
    lj["num_flats"] = lat.num_flats();
    json per_rank = json::array();
    for (std::size_t r = 0; r <= lat.rank(); ++r)
      per_rank.push_back(lat.flats_of_rank(r).size());
    lj["flats_per_rank"] = per_rank;
    json cj;
    json coeffs = json::array();
    for (const auto& c : chi.coeffs) coeffs.push_back(c.get_str());
    cj["coeffs_desc"] = coeffs;
    cj["str"] = chi.str();
    cj["factored"] = chi_factored_str(a, chi);
    lj["char_poly"] = cj;
    lj["num_chambers"] = num_chambers(a).get_str();
    json pj = json::array();
    for (const auto& c : poincare_poly(a)) pj.push_back(c.get_str());
    lj["poincare_asc"] = pj;
    lj["supersolvable"] = is_supersolvable(lat);
    rep["lattice"] = lj;
  }

  DecideOptions dopts;
  dopts.budget = opts.budget;
  if (input.family == "A" && input.alpha && !is_special_alpha(*input.alpha)) {
    dopts.candidate_bases.push_back(terao_basis(-*input.alpha));
    dopts.candidate_bases.push_back(terao_basis(*input.alpha));
  }
  DecideResult dec = decide(a, dopts);
  {
    json fj;
    fj["status"] = dec.status == FreeStatus::Free      ? "free"
                   : dec.status == FreeStatus::NotFree ? "not_free"
                                                       : "unknown";
    if (dec.status == FreeStatus::Free) fj["exponents"] = dec.exponents;
    if (dec.certificate) {
      fj["witness_kind"] = dec.certificate->witness_kind;
      fj["certificate"] = json::parse(dec.certificate->to_json());
    }
    rep["freeness"] = fj;
  }

  // The printed degree-(1,4,4) basis, checked under both sign conventions.
  if (input.family == "A" && input.alpha && !is_special_alpha(*input.alpha)) {
    json sj = json::array();
    for (const Rat& basis_alpha : {Rat(-*input.alpha), *input.alpha}) {
      SaitoResult r = saito_check(a, terao_basis(basis_alpha));
      json e;
      e["basis_alpha"] = to_string(basis_alpha);
      e["is_basis"] = r.is_basis();
      if (r.is_basis()) e["constant"] = to_string(r.constant);
      else e["reason"] = r.detail;
      sj.push_back(e);
    }
    rep["saito_conventions"] = sj;
  }

  // Low-rank arrangements are aspherical outright; no chamber work needed.
  if (a.rank() <= 2) {
    Kpi1Verdict v = kpi1_verdict(a);
    json kj;
    kj["status"] = kpi1_status_str(v.status);
    kj["reason"] = kpi1_reason_str(v.reason);
    rep["kpi1"] = kj;
  }

  // Chamber-level analysis for essential rank-3 geometry.
  if (a.rank() == 3) {
    Arrangement e3 = a.dim() == 3 ? a : essentialize(a);
    json cj;
    cj["essentialized"] = a.dim() != 3;
    auto chambers = enumerate_chambers(e3);
    cj["count"] = chambers.size();
    bool simplicial = is_simplicial(e3);
    cj["simplicial"] = simplicial;
    auto tris = find_simple_triangles(e3);
    cj["num_simple_triangles"] = tris.size();
    json tj = json::array();
    auto names = default_var_names(3);
    for (const auto& t : tris) {
      json one;
      one["walls"] = t.walls;
      json wf = json::array();
      for (auto w : t.walls) wf.push_back(e3.form(w).str(names));
      one["wall_forms"] = wf;
      tj.push_back(one);
    }
    cj["simple_triangles"] = tj;
    rep["chambers"] = cj;

    Kpi1Verdict v = kpi1_verdict(e3);
    json kj;
    kj["status"] = kpi1_status_str(v.status);
    kj["reason"] = kpi1_reason_str(v.reason);
    if (v.status == Kpi1Status::Unknown) {
      kj["note"] =
          "no simplicial/supersolvable/simple-triangle evidence at this "
          "instance; the engine decides nothing further";
    }
    rep["kpi1"] = kj;
  }

  if (opts.with_timing) {
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    rep["timing_ms"] = dt;
  }

  AnalyzeOutcome out;
  out.report_json = rep.dump(2) + "\n";
  out.freeness = std::move(dec);
  return out;
}

SweepRow sweep_row(const std::string& family, const Rat& alpha, long budget) {
  SweepRow row;
  row.alpha = alpha;
  try {
    Arrangement a = family == "A" ? family_A(alpha) : family_B(alpha);
    CharPoly chi = char_poly(a);
    row.chi = chi_factored_str(a, chi);
    row.chambers = num_chambers(a);
    DecideOptions dopts;
    dopts.budget = budget;
    if (family == "A" && !is_special_alpha(alpha)) {
      dopts.candidate_bases.push_back(terao_basis(-alpha));
      dopts.candidate_bases.push_back(terao_basis(alpha));
    }
    DecideResult dec = decide(a, dopts);
    row.freeness = freeness_summary(dec);
    if (a.rank() == 3 && a.dim() == 3) {
      Kpi1Verdict v = kpi1_verdict(a);
      row.kpi1 = kpi1_status_str(v.status) + "(" + kpi1_reason_str(v.reason) + ")";
    } else {
      row.kpi1 = "-";
    }
  } catch (const std::exception& e) {
    row.failed = true;
    row.error = e.what();
  }
  return row;
}

std::string format_sweep_table(const std::string& family,
                               const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family " << family << " sweep (" << rows.size() << " values)\n";
  os << std::left << std::setw(9) << "alpha" << "  " << std::setw(26) << "freeness"
     << "  " << std::setw(34) << "chi" << "  " << std::setw(10) << "chambers"
     << "  kpi1\n";
  os << std::string(100, '-') << "\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(9) << to_string(r.alpha) << "  ";
    if (r.failed) {
      os << "ERROR: " << r.error << "\n";
      continue;
    }
    os << std::setw(26) << r.freeness << "  " << std::setw(34) << r.chi << "  "
       << std::setw(10) << r.chambers.get_str() << "  " << r.kpi1 << "\n";
  }
  return os.str();
}

}  // namespace arr
