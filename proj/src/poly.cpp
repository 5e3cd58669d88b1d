#include "arr/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arr {

MvPoly MvPoly::constant(int nvars, const Rat& c) {
  MvPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MvPoly MvPoly::var(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  MvPoly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rat(1));
  return p;
}

MvPoly MvPoly::linear(const std::vector<Rat>& coeffs) {
  MvPoly p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

MvPoly MvPoly::linear_int(const std::vector<Int>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) c.emplace_back(z);
  return linear(c);
}

void MvPoly::add_term(const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw std::invalid_argument("monomial length != variable count");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MvPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

MvPoly MvPoly::operator-() const {
  MvPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MvPoly MvPoly::operator+(const MvPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  MvPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MvPoly MvPoly::operator-(const MvPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  MvPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MvPoly MvPoly::operator*(const MvPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  MvPoly r(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MvPoly MvPoly::operator*(const Rat& c) const {
  MvPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

long MvPoly::total_degree() const {
  long deg = -1;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (auto e : m) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

bool MvPoly::is_homogeneous() const {
  long deg = -1;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (auto e : m) d += e;
    if (deg == -1) deg = d;
    else if (d != deg) return false;
  }
  return true;
}

MvPoly MvPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
  MvPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Rat(m[var]));
  }
  return r;
}

Rat MvPoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point dimension mismatch");
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

MvPoly MvPoly::substitute(int var, const MvPoly& value) const {
  if (value.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
  MvPoly r(nvars_);
  std::vector<MvPoly> powers;  // powers[e] = value^e
  powers.push_back(MvPoly::constant(nvars_, Rat(1)));
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[var] = 0;
    MvPoly base(nvars_);
    base.add_term(rest, c);
    r = r + base * powers[e];
  }
  return r;
}

bool MvPoly::is_nonzero_linear_form() const {
  if (terms_.empty()) return false;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (auto e : m) d += e;
    if (d != 1) return false;
  }
  return true;
}

std::vector<Rat> MvPoly::linear_coeffs() const {
  if (!is_nonzero_linear_form()) throw std::invalid_argument("not a nonzero linear form");
  std::vector<Rat> c(nvars_, Rat(0));
  for (const auto& [m, k] : terms_) {
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 1) c[i] = k;
    }
  }
  return c;
}

std::vector<std::string> default_var_names(int nvars) {
  static const char* xyzw[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) {
    if (nvars <= 4) names.push_back(xyzw[i]);
    else names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

std::string MvPoly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names = var_names.empty() ? default_var_names(nvars_) : var_names;
  std::ostringstream os;
  bool first = true;
  // Iterate in reverse map order so higher-degree-first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool is_const = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    if (a != 1 || is_const) {
      os << to_string(a);
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

MvPoly reduce_mod_linear(const MvPoly& p, const MvPoly& l) {
  if (!l.is_nonzero_linear_form())
    throw std::invalid_argument("reduce_mod_linear: modulus must be a nonzero linear form");
  if (p.nvars() != l.nvars())
    throw std::invalid_argument("reduce_mod_linear: variable count mismatch");
  std::vector<Rat> c = l.linear_coeffs();
  int pivot = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) { pivot = static_cast<int>(i); break; }
  }
  // Solve l = 0 for the pivot: x_p = -(1/c_p) * sum_{j != p} c_j x_j.
  MvPoly repl(p.nvars());
  for (int j = 0; j < p.nvars(); ++j) {
    if (j == pivot || c[j] == 0) continue;
    repl = repl + MvPoly::var(p.nvars(), j) * (-c[j] / c[pivot]);
  }
  return p.substitute(pivot, repl);
}

namespace {

MvPoly det_rec(const std::vector<std::vector<MvPoly>>& m, std::uint32_t cols,
               int row, std::map<std::uint32_t, MvPoly>& memo, int nvars) {
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  int n = static_cast<int>(m.size());
  MvPoly acc(nvars);
  int parity = 0;
  for (int j = 0; j < n; ++j) {
    if (!(cols & (1u << j))) continue;
    if (row == n - 1) {
      acc = m[row][j];
      break;
    }
    MvPoly minor = det_rec(m, cols & ~(1u << j), row + 1, memo, nvars);
    MvPoly term = m[row][j] * minor;
    acc = (parity % 2 == 0) ? acc + term : acc - term;
    ++parity;
  }
  memo.emplace(cols, acc);
  return acc;
}

}  // namespace

MvPoly poly_det(const std::vector<std::vector<MvPoly>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  int nvars = m[0].empty() ? 0 : m[0][0].nvars();
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("poly_det: matrix not square");
    for (const auto& e : row) {
      if (e.nvars() != nvars)
        throw std::invalid_argument("poly_det: entries disagree on variable count");
    }
  }
  if (n > 31) throw std::invalid_argument("poly_det: dimension too large");
  std::map<std::uint32_t, MvPoly> memo;
  return det_rec(m, (1u << n) - 1, 0, memo, nvars);
}

}  // namespace arr
