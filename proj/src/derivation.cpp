#include "arr/derivation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "arr/matrix.hpp"

namespace arr {

bool Derivation::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const MvPoly& p) { return p.is_zero(); });
}

long Derivation::degree() const {
  long deg = -1;
  for (const auto& p : components) {
    if (!p.is_zero()) deg = std::max(deg, p.total_degree());
  }
  return deg;
}

bool Derivation::is_homogeneous() const {
  long deg = -1;
  for (const auto& p : components) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    long d = p.total_degree();
    if (deg == -1) deg = d;
    else if (d != deg) return false;
  }
  return true;
}

std::string Derivation::str(const std::vector<std::string>& var_names) const {
  std::vector<std::string> names =
      var_names.empty() ? default_var_names(nvars()) : var_names;
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    if (components[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << components[i].str(names) << ")*d/d" << names[i];
  }
  if (first) os << "0";
  return os.str();
}

Derivation euler_derivation(int nvars) {
  Derivation theta;
  for (int i = 0; i < nvars; ++i) theta.components.push_back(MvPoly::var(nvars, i));
  return theta;
}

MvPoly apply(const Derivation& theta, const MvPoly& p) {
  if (theta.nvars() != p.nvars())
    throw std::invalid_argument("apply: dimension mismatch");
  MvPoly acc(p.nvars());
  for (int i = 0; i < theta.nvars(); ++i) {
    if (theta.components[i].is_zero()) continue;
    acc = acc + theta.components[i] * p.derivative(i);
  }
  return acc;
}

bool is_member(const Derivation& theta, const Arrangement& a) {
  if (theta.nvars() != a.dim())
    throw std::invalid_argument("is_member: dimension mismatch");
  for (const auto& h : a.forms()) {
    MvPoly l = h.poly();
    if (!reduce_mod_linear(apply(theta, l), l).is_zero()) return false;
  }
  return true;
}

SaitoResult saito_check(const Arrangement& a, const std::vector<Derivation>& thetas) {
  const int d = a.dim();
  if (static_cast<int>(thetas.size()) != d)
    throw std::invalid_argument("saito_check: need exactly dim derivations");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (thetas[i].nvars() != d)
      throw std::invalid_argument("saito_check: derivation dimension mismatch");
    if (!is_member(thetas[i], a)) {
      return {SaitoVerdict::MembershipFailure, Rat(0),
              "derivation " + std::to_string(i + 1) + " is not in D(A)"};
    }
  }
  std::vector<std::vector<MvPoly>> m;
  for (const auto& t : thetas) m.push_back(t.components);
  MvPoly det = poly_det(m);
  if (det.is_zero()) return {SaitoVerdict::DetZero, Rat(0), "determinant vanishes"};
  MvPoly q = a.defining_polynomial();
  if (det.total_degree() != q.total_degree()) {
    return {SaitoVerdict::DegreeMismatch, Rat(0),
            "det degree " + std::to_string(det.total_degree()) + " != |A| = " +
                std::to_string(q.total_degree())};
  }
  // Proportionality by exact division: match leading coefficients in the
  // canonical term order, subtract, require zero.
  const auto& lead = *det.terms().begin();
  Rat qc = q.coeff(lead.first);
  if (qc == 0)
    return {SaitoVerdict::DetNotProportional, Rat(0), "term support differs from Q"};
  Rat c = lead.second / qc;
  if ((det - q * c).is_zero()) {
    // degree bookkeeping: a homogeneous basis must have degrees summing
    // to the number of hyperplanes
    long sum = 0;
    bool homogeneous = true;
    for (const auto& t : thetas) {
      if (!t.is_homogeneous()) homogeneous = false;
      else if (!t.is_zero()) sum += t.degree();
    }
    if (homogeneous && sum != static_cast<long>(a.size()))
      throw std::logic_error("saito_check: basis degrees do not sum to |A|");
    return {SaitoVerdict::IsBasis, c, ""};
  }
  return {SaitoVerdict::DetNotProportional, Rat(0), "det is not a scalar multiple of Q"};
}

std::vector<Derivation> terao_basis(const Rat& alpha) {
  const int n = 3;
  const Rat a = alpha;
  MvPoly x = MvPoly::var(n, 0), y = MvPoly::var(n, 1), z = MvPoly::var(n, 2);
  MvPoly zero(n);

  Derivation t1 = euler_derivation(n);

  // theta2 = x(x-z)(x+az)(x+ay) d/dx + y(y-z)(y+az)(x+ay) d/dy
  Derivation t2;
  t2.components = {x * (x - z) * (x + z * a) * (x + y * a),
                   y * (y - z) * (y + z * a) * (x + y * a), zero};

  // theta3 = x(x-z)(x+az)(x+(a-1)y-az) d/dx + a*y(y-z)(y+az)(x-z) d/dy
  Derivation t3;
  t3.components = {x * (x - z) * (x + z * a) * (x + y * (a - 1) - z * a),
                   (y * (y - z) * (y + z * a) * (x - z)) * a, zero};

  return {t1, t2, t3};
}

namespace {

// All monomials of total degree d in nvars variables, in map order.
std::vector<Monomial> monomials_of_degree(int nvars, long d) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  // Recursive enumeration, lexicographic by exponent vector.
  std::function<void(int, long)> rec = [&](int var, long left) {
    if (var == nvars - 1) {
      cur[var] = static_cast<std::uint32_t>(left);
      out.push_back(cur);
      return;
    }
    for (long e = 0; e <= left; ++e) {
      cur[var] = static_cast<std::uint32_t>(e);
      rec(var + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GradedSlice derivation_dim(const Arrangement& a, long d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const int dim = a.dim();
  const auto mons = monomials_of_degree(dim, d);
  const std::size_t per_comp = mons.size();
  const std::size_t unknowns = per_comp * static_cast<std::size_t>(dim);
  if (a.empty() || unknowns == 0) {
    return {d, unknowns};
  }

  std::map<Monomial, std::size_t> mon_index;
  for (std::size_t i = 0; i < mons.size(); ++i) mon_index[mons[i]] = i;

  // Rows: for each hyperplane and each residual monomial, one linear
  // constraint over the unknown coefficients u_{comp,mon}.
  std::vector<std::vector<Rat>> rows;
  for (const auto& h : a.forms()) {
    MvPoly l = h.poly();
    // reduce c_i * m mod l depends on m only; precompute per monomial.
    std::vector<MvPoly> reduced(per_comp, MvPoly(dim));
    for (std::size_t mi = 0; mi < per_comp; ++mi) {
      MvPoly m(dim);
      m.add_term(mons[mi], Rat(1));
      reduced[mi] = reduce_mod_linear(m, l);
    }
    // Collect the residual monomials that actually occur.
    std::map<Monomial, std::size_t> residual_index;
    for (const auto& r : reduced) {
      for (const auto& [m, c] : r.terms()) {
        residual_index.emplace(m, residual_index.size());
      }
    }
    if (residual_index.empty()) continue;
    std::vector<std::vector<Rat>> block(residual_index.size(),
                                        std::vector<Rat>(unknowns, Rat(0)));
    for (int comp = 0; comp < dim; ++comp) {
      const Rat ci(h.coeffs[comp]);
      if (ci == 0) continue;
      for (std::size_t mi = 0; mi < per_comp; ++mi) {
        for (const auto& [m, c] : reduced[mi].terms()) {
          block[residual_index[m]][static_cast<std::size_t>(comp) * per_comp + mi] +=
              ci * c;
        }
      }
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }

  std::size_t r = rows.empty() ? 0 : RatMatrix::from_rows(rows).rank();
  return {d, unknowns - r};
}

Int free_hilbert_dim(const std::vector<std::size_t>& exponents, int dim, long d) {
  Int acc(0);
  for (auto e : exponents) {
    long k = d - static_cast<long>(e);
    if (k < 0) continue;
    acc += binomial(k + dim - 1, dim - 1);
  }
  return acc;
}

}  // namespace arr
