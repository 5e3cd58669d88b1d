#include "arr/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "arr/matrix.hpp"

namespace arr {

bool LinearForm::operator<(const LinearForm& o) const {
  if (coeffs.size() != o.coeffs.size()) return coeffs.size() < o.coeffs.size();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    int c = cmp(coeffs[i], o.coeffs[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string LinearForm::str(const std::vector<std::string>& var_names) const {
  return poly().str(var_names);
}

LinearForm normalize_form(const std::vector<Rat>& v) {
  return LinearForm{primitive_integer_vector(v)};
}

LinearForm normalize_form_int(const std::vector<Int>& v) {
  std::vector<Rat> r;
  r.reserve(v.size());
  for (const auto& z : v) r.emplace_back(z);
  return normalize_form(r);
}

Arrangement::Arrangement(int dim, std::vector<LinearForm> sorted_forms)
    : dim_(dim), forms_(std::move(sorted_forms)) {
  if (dim_ < 0) throw std::invalid_argument("negative dimension");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (static_cast<int>(forms_[i].coeffs.size()) != dim_)
      throw std::invalid_argument("form length != ambient dimension");
    if (i > 0 && !(forms_[i - 1] < forms_[i]))
      throw std::invalid_argument("forms not strictly sorted");
  }
}

bool Arrangement::contains(const LinearForm& h) const {
  return std::binary_search(forms_.begin(), forms_.end(), h);
}

std::size_t Arrangement::index_of(const LinearForm& h) const {
  auto it = std::lower_bound(forms_.begin(), forms_.end(), h);
  if (it == forms_.end() || !(*it == h))
    throw std::invalid_argument("form not in arrangement");
  return static_cast<std::size_t>(it - forms_.begin());
}

std::size_t Arrangement::rank() const {
  if (forms_.empty()) return 0;
  std::vector<std::vector<Int>> rows;
  rows.reserve(forms_.size());
  for (const auto& f : forms_) rows.push_back(f.coeffs);
  return rank_of_int_rows(rows);
}

MvPoly Arrangement::defining_polynomial() const {
  MvPoly q = MvPoly::constant(dim_, Rat(1));
  for (const auto& f : forms_) q = q * f.poly();
  return q;
}

bool Arrangement::operator<(const Arrangement& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  return forms_ < o.forms_;
}

std::string Arrangement::serialize() const {
  std::ostringstream os;
  os << "arrangement dim=" << dim_ << "\n";
  for (const auto& f : forms_) {
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
      if (j) os << " ";
      os << f.coeffs[j].get_str();
    }
    os << "\n";
  }
  return os.str();
}

Arrangement make_arrangement(int dim, const std::vector<std::vector<Rat>>& raw_forms) {
  std::vector<LinearForm> forms;
  forms.reserve(raw_forms.size());
  for (const auto& v : raw_forms) {
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("form length != ambient dimension");
    forms.push_back(normalize_form(v));
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return Arrangement(dim, std::move(forms));
}

Arrangement make_arrangement_int(int dim, const std::vector<std::vector<Int>>& raw_forms) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(raw_forms.size());
  for (const auto& v : raw_forms) {
    std::vector<Rat> r;
    r.reserve(v.size());
    for (const auto& z : v) r.emplace_back(z);
    rows.push_back(std::move(r));
  }
  return make_arrangement(dim, rows);
}

namespace {

std::vector<std::vector<Rat>> family_A_raw(const Rat& alpha) {
  const Rat o(1), z(0), a = alpha;
  // {x, y, z, x-y, x-z, y-z, x-ay, x-az, y-az}
  return {
      {o, z, z}, {z, o, z}, {z, z, o},
      {o, -o, z}, {o, z, -o}, {z, o, -o},
      {o, -a, z}, {o, z, -a}, {z, o, -a},
  };
}

std::vector<std::vector<Rat>> family_B_raw(const Rat& alpha) {
  const Rat o(1), z(0), a = alpha;
  // {x, y, z, w, x-y, x-z, x-w, y-z, y-w, z-w, x-az, y-az, x-aw, y-aw}
  return {
      {o, z, z, z}, {z, o, z, z}, {z, z, o, z}, {z, z, z, o},
      {o, -o, z, z}, {o, z, -o, z}, {o, z, z, -o},
      {z, o, -o, z}, {z, o, z, -o}, {z, z, o, -o},
      {o, z, -a, z}, {z, o, -a, z}, {o, z, z, -a}, {z, o, z, -a},
  };
}

}  // namespace

Arrangement family_A(const Rat& alpha) { return make_arrangement(3, family_A_raw(alpha)); }

std::vector<LinearForm> family_A_forms(const Rat& alpha) {
  std::vector<LinearForm> out;
  for (const auto& v : family_A_raw(alpha)) out.push_back(normalize_form(v));
  return out;
}

Arrangement family_B(const Rat& alpha) { return make_arrangement(4, family_B_raw(alpha)); }

std::vector<LinearForm> family_B_forms(const Rat& alpha) {
  std::vector<LinearForm> out;
  for (const auto& v : family_B_raw(alpha)) out.push_back(normalize_form(v));
  return out;
}

Arrangement family_braid(int d) {
  if (d < 1) throw std::invalid_argument("braid family needs d >= 1");
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      std::vector<Int> v(d, Int(0));
      v[i] = 1;
      v[j] = -1;
      rows.push_back(std::move(v));
    }
  }
  return make_arrangement_int(d, rows);
}

Arrangement family_boolean(int d) {
  if (d < 1) throw std::invalid_argument("boolean family needs d >= 1");
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < d; ++i) {
    std::vector<Int> v(d, Int(0));
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return make_arrangement_int(d, rows);
}

Arrangement delete_form(const Arrangement& a, const LinearForm& h) {
  std::size_t idx = a.index_of(h);
  std::vector<LinearForm> forms = a.forms();
  forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(idx));
  return Arrangement(a.dim(), std::move(forms));
}

RestrictionResult restrict_to(const Arrangement& a, const LinearForm& h) {
  if (a.dim() < 2) throw std::invalid_argument("restriction needs dim >= 2");
  std::size_t h_idx = a.index_of(h);
  RestrictionResult res;
  res.embedding = integer_kernel_basis(h.coeffs);
  const int sub_dim = a.dim() - 1;

  // Pull each other form back through the embedding, then canonicalize.
  std::map<LinearForm, std::set<std::size_t>> classes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h_idx) continue;
    std::vector<Int> pulled(sub_dim, Int(0));
    for (int j = 0; j < sub_dim; ++j) {
      Int acc(0);
      for (int k = 0; k < a.dim(); ++k) acc += a.form(i).coeffs[k] * res.embedding[j][k];
      pulled[j] = acc;
    }
    bool zero = std::all_of(pulled.begin(), pulled.end(), [](const Int& z) { return z == 0; });
    if (zero)
      throw std::logic_error("form degenerated to zero under restriction");
    classes[normalize_form_int(pulled)].insert(i);
  }

  std::vector<LinearForm> forms;
  forms.reserve(classes.size());
  for (const auto& [f, _] : classes) forms.push_back(f);
  res.restricted = Arrangement(sub_dim, std::move(forms));
  for (const auto& [f, origin] : classes) {
    res.provenance[res.restricted.index_of(f)] = origin;
  }
  return res;
}

Arrangement essentialize(const Arrangement& a) {
  std::size_t r = a.rank();
  if (static_cast<int>(r) == a.dim()) return a;
  if (r == 0) return Arrangement(0, {});
  std::vector<std::vector<Rat>> rows;
  for (const auto& f : a.forms()) {
    std::vector<Rat> row;
    for (const auto& z : f.coeffs) row.emplace_back(z);
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  RatMatrix basis = RatMatrix::from_rows(rows).rref(&pivots);
  // Every form is a combination of the RREF basis rows; with unit pivots
  // the coordinates can be read off at the pivot columns.
  std::vector<std::vector<Rat>> coords;
  for (const auto& row : rows) {
    std::vector<Rat> c(r, Rat(0));
    for (std::size_t i = 0; i < r; ++i) c[i] = row[pivots[i]];
    coords.push_back(std::move(c));
  }
  return make_arrangement(static_cast<int>(r), coords);
}

Arrangement parse_arrangement(std::istream& in) {
  std::string line;
  int dim = -1;
  std::vector<std::vector<Rat>> rows;
  bool header_seen = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!header_seen) {
      if (tokens.size() != 2 || tokens[0] != "arrangement" ||
          tokens[1].rfind("dim=", 0) != 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'arrangement dim=<d>' header");
      try {
        dim = std::stoi(tokens[1].substr(4));
      } catch (...) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad dimension");
      }
      if (dim < 1) throw std::invalid_argument("dimension must be positive");
      header_seen = true;
      continue;
    }
    if (static_cast<int>(tokens.size()) != dim)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(dim) + " entries");
    std::vector<Rat> row;
    for (const auto& t : tokens) {
      auto q = parse_rational(t);
      if (!q)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": bad rational '" + t + "'");
      row.push_back(*q);
    }
    bool zero = std::all_of(row.begin(), row.end(), [](const Rat& q) { return q == 0; });
    if (zero)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": zero form");
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw std::invalid_argument("missing 'arrangement dim=<d>' header");
  return make_arrangement(dim, rows);
}

Arrangement parse_arrangement_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  return parse_arrangement(f);
}

}  // namespace arr
