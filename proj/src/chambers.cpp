#include "arr/chambers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arr/lattice.hpp"
#include "arr/matrix.hpp"

namespace arr {

std::optional<std::vector<Rat>> strict_feasible(
    const std::vector<std::vector<Rat>>& rows, int dim) {
  if (dim < 1) throw std::invalid_argument("strict_feasible: dim must be >= 1");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != dim)
      throw std::invalid_argument("strict_feasible: row length != dim");
  }
  // stages[j] = constraints over variables 0..j.
  std::vector<std::vector<std::vector<Rat>>> stages(dim);
  stages[dim - 1] = rows;
  auto zero_prefix = [](const std::vector<Rat>& r, int upto) {
    for (int i = 0; i <= upto; ++i) {
      if (r[i] != 0) return false;
    }
    return true;
  };
  for (int j = dim - 1; j >= 1; --j) {
    std::vector<std::vector<Rat>> next;
    std::vector<const std::vector<Rat>*> pos, neg;
    for (const auto& r : stages[j]) {
      if (zero_prefix(r, j)) return std::nullopt;  // 0 > 0
      if (r[j] > 0) pos.push_back(&r);
      else if (r[j] < 0) neg.push_back(&r);
      else next.push_back(std::vector<Rat>(r.begin(), r.begin() + j));
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        // Positive combination cancelling variable j.
        std::vector<Rat> comb(static_cast<std::size_t>(j), Rat(0));
        const Rat wp = -(*q)[j], wq = (*p)[j];
        for (int i = 0; i < j; ++i) comb[static_cast<std::size_t>(i)] = wp * (*p)[i] + wq * (*q)[i];
        next.push_back(std::move(comb));
      }
    }
    stages[j - 1] = std::move(next);
  }
  // Base: rows over x0 alone.
  int want = 0;
  for (const auto& r : stages[0]) {
    if (r[0] == 0) return std::nullopt;
    int s = sign(r[0]);
    if (want == 0) want = s;
    else if (want != s) return std::nullopt;
  }
  std::vector<Rat> x(static_cast<std::size_t>(dim), Rat(0));
  x[0] = Rat(want == 0 ? 1 : want);
  for (int j = 1; j < dim; ++j) {
    bool has_lower = false, has_upper = false;
    Rat lower(0), upper(0);
    for (const auto& r : stages[j]) {
      if (r[j] == 0) continue;
      Rat rest(0);
      for (int i = 0; i < j; ++i) rest += r[i] * x[static_cast<std::size_t>(i)];
      Rat bound = -rest / r[j];
      if (r[j] > 0) {
        if (!has_lower || bound > lower) lower = bound;
        has_lower = true;
      } else {
        if (!has_upper || bound < upper) upper = bound;
        has_upper = true;
      }
    }
    if (has_lower && has_upper) {
      if (!(lower < upper)) throw std::logic_error("elimination invariant violated");
      x[static_cast<std::size_t>(j)] = (lower + upper) / 2;
    } else if (has_lower) {
      x[static_cast<std::size_t>(j)] = lower + 1;
    } else if (has_upper) {
      x[static_cast<std::size_t>(j)] = upper - 1;
    }
  }
  return x;
}

namespace {

Rat eval_form(const LinearForm& f, const std::vector<Rat>& p) {
  Rat acc(0);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) acc += Rat(f.coeffs[i]) * p[i];
  return acc;
}

std::vector<Int> cross3(const std::vector<Int>& a, const std::vector<Int>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

std::vector<Int> primitive_int(std::vector<Int> v) {
  Int g(0);
  for (const auto& z : v) g = gcd(g, z);
  if (g == 0) throw std::invalid_argument("zero vector");
  for (auto& z : v) z /= g;
  for (const auto& z : v) {
    if (z != 0) {
      if (z < 0) {
        for (auto& y : v) y = -y;
      }
      break;
    }
  }
  return v;
}

Int eval_int_form(const std::vector<Int>& f, const std::vector<Int>& d) {
  Int acc(0);
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * d[i];
  return acc;
}

void require_rank3(const Arrangement& a, const char* who) {
  if (a.dim() != 3 || a.rank() != 3 || a.empty())
    throw std::invalid_argument(std::string(who) +
                                ": needs an essential rank-3 arrangement in dimension 3");
}

std::vector<std::size_t> compute_walls(const Arrangement& a,
                                       const std::vector<int>& signs) {
  std::vector<std::size_t> walls;
  const int dim = a.dim();
  for (std::size_t k = 0; k < a.size(); ++k) {
    // Flip constraint k to equality: parametrize ker(l_k) and require the
    // remaining strict system inside that plane.
    auto basis = integer_kernel_basis(a.form(k).coeffs);
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == k) continue;
      std::vector<Rat> row;
      for (const auto& col : basis) {
        row.emplace_back(Rat(eval_int_form(a.form(i).coeffs, col)) * signs[i]);
      }
      rows.push_back(std::move(row));
    }
    if (strict_feasible(rows, dim - 1)) walls.push_back(k);
  }
  return walls;
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const Arrangement& a) {
  require_rank3(a, "enumerate_chambers");
  struct Partial {
    std::vector<int> signs;
    std::vector<Rat> witness;
  };
  std::vector<Partial> current;
  {
    std::vector<Rat> w;
    for (const auto& c : a.form(0).coeffs) w.emplace_back(c);
    std::vector<Rat> wn;
    for (const auto& c : a.form(0).coeffs) wn.emplace_back(-c);
    current.push_back({{+1}, w});
    current.push_back({{-1}, wn});
  }
  for (std::size_t k = 1; k < a.size(); ++k) {
    std::vector<Partial> next;
    for (const auto& ch : current) {
      std::vector<std::vector<Rat>> base;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rat> row;
        for (const auto& c : a.form(i).coeffs) row.emplace_back(Rat(c) * ch.signs[i]);
        base.push_back(std::move(row));
      }
      int s = sign(eval_form(a.form(k), ch.witness));
      for (int side : {+1, -1}) {
        std::vector<int> signs = ch.signs;
        signs.push_back(side);
        if (side == s) {
          next.push_back({std::move(signs), ch.witness});
          continue;
        }
        auto rows = base;
        std::vector<Rat> row;
        for (const auto& c : a.form(k).coeffs) row.emplace_back(Rat(c) * side);
        rows.push_back(std::move(row));
        if (auto w = strict_feasible(rows, a.dim())) {
          next.push_back({std::move(signs), *w});
        }
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(),
            [](const Partial& x, const Partial& y) { return x.signs < y.signs; });
  std::vector<Chamber> out;
  out.reserve(current.size());
  for (auto& ch : current) {
    Chamber c;
    c.walls = compute_walls(a, ch.signs);
    c.signs = std::move(ch.signs);
    c.witness = std::move(ch.witness);
    out.push_back(std::move(c));
  }
  return out;
}

bool is_simplicial(const Arrangement& a) {
  require_rank3(a, "is_simplicial");
  for (const auto& ch : enumerate_chambers(a)) {
    if (ch.walls.size() != 3) return false;
    if (rank_of_int_rows({a.form(ch.walls[0]).coeffs, a.form(ch.walls[1]).coeffs,
                          a.form(ch.walls[2]).coeffs}) != 3)
      return false;
  }
  return true;
}

std::vector<TriangleReport> find_simple_triangles(const Arrangement& a) {
  require_rank3(a, "find_simple_triangles");
  auto chambers = enumerate_chambers(a);
  std::vector<TriangleReport> out;
  for (std::size_t ci = 0; ci < chambers.size(); ++ci) {
    const auto& ch = chambers[ci];
    if (ch.walls.size() != 3) continue;
    TriangleReport rep;
    rep.chamber_index = ci;
    rep.walls = ch.walls;
    bool simple = true;
    for (std::size_t p = 0; p < 3 && simple; ++p) {
      for (std::size_t q = p + 1; q < 3 && simple; ++q) {
        std::size_t i = ch.walls[p], j = ch.walls[q];
        auto dir = cross3(a.form(i).coeffs, a.form(j).coeffs);
        bool zero = std::all_of(dir.begin(), dir.end(),
                                [](const Int& z) { return z == 0; });
        if (zero) {  // parallel wall normals: no genuine vertex line
          simple = false;
          break;
        }
        TriangleVertex v;
        v.direction = primitive_int(dir);
        for (std::size_t m = 0; m < a.size(); ++m) {
          if (eval_int_form(a.form(m).coeffs, v.direction) == 0) v.support.push_back(m);
        }
        if (v.support != std::vector<std::size_t>{std::min(i, j), std::max(i, j)})
          simple = false;
        rep.vertices.push_back(std::move(v));
      }
    }
    if (simple) out.push_back(std::move(rep));
  }
  return out;
}

Kpi1Verdict kpi1_verdict(const Arrangement& a) {
  if (a.rank() <= 2) return {Kpi1Status::KPi1, Kpi1Reason::Simplicial, {}};
  require_rank3(a, "kpi1_verdict");
  bool simplicial = is_simplicial(a);
  auto triangles = find_simple_triangles(a);
  // Deligne and Hattori cannot both apply; seeing both is a bug.
  if (a.size() >= 4 && simplicial && !triangles.empty())
    throw std::logic_error("kpi1_verdict: simplicial arrangement with a simple triangle");
  if (simplicial) return {Kpi1Status::KPi1, Kpi1Reason::Simplicial, {}};
  if (is_supersolvable(a)) return {Kpi1Status::KPi1, Kpi1Reason::Supersolvable, {}};
  if (a.size() >= 4 && !triangles.empty())
    return {Kpi1Status::NotKPi1, Kpi1Reason::SimpleTriangle, std::move(triangles)};
  return {Kpi1Status::Unknown, Kpi1Reason::None, {}};
}

std::string kpi1_status_str(Kpi1Status s) {
  switch (s) {
    case Kpi1Status::KPi1: return "kpi1";
    case Kpi1Status::NotKPi1: return "not_kpi1";
    default: return "unknown";
  }
}

std::string kpi1_reason_str(Kpi1Reason r) {
  switch (r) {
    case Kpi1Reason::Simplicial: return "simplicial";
    case Kpi1Reason::Supersolvable: return "supersolvable";
    case Kpi1Reason::SimpleTriangle: return "simple_triangle";
    default: return "none";
  }
}

// ---------------------------------------------------------------------------
// SVG plotting

namespace {

struct ChartPoint {
  Rat s, t;
};

// Integer point with l . p = 1 (l primitive), by chaining extended gcds.
std::vector<Int> unit_value_point(const std::vector<Int>& l) {
  std::vector<Int> coeff(l.size(), Int(0));
  Int g(0);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == 0) continue;
    if (g == 0) {
      // g = |l_i|, combination = sign * e_i
      coeff[i] = l[i] > 0 ? 1 : -1;
      g = abs(l[i]);
      continue;
    }
    Int s, t, g2;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               l[i].get_mpz_t());
    for (auto& c : coeff) c *= s;
    coeff[i] += t;
    g = g2;
  }
  if (g != 1) throw std::logic_error("primitive form without unimodular point");
  return coeff;
}

struct Chart {
  std::vector<Int> p0;                    // l_inf(p0) = 1
  std::vector<std::vector<Int>> basis;    // two kernel columns u, v
  const LinearForm* infinity;

  // Chart coordinates of the projective point with direction d
  // (requires l_inf(d) != 0).
  ChartPoint project(const std::vector<Int>& d) const {
    Int denom = eval_int_form(infinity->coeffs, d);
    // target = d/denom - p0, solve [u v] (s,t)^T = target
    std::vector<Rat> target(3);
    for (int i = 0; i < 3; ++i) {
      Rat q(d[i], denom);
      q.canonicalize();
      target[i] = q - Rat(p0[i]);
    }
    const auto& u = basis[0];
    const auto& v = basis[1];
    for (int r1 = 0; r1 < 3; ++r1) {
      for (int r2 = r1 + 1; r2 < 3; ++r2) {
        Int det = u[r1] * v[r2] - u[r2] * v[r1];
        if (det == 0) continue;
        Rat s = (target[r1] * Rat(v[r2]) - target[r2] * Rat(v[r1])) / Rat(det);
        Rat t = (Rat(u[r1]) * target[r2] - Rat(u[r2]) * target[r1]) / Rat(det);
        return {s, t};
      }
    }
    throw std::logic_error("kernel basis is singular");
  }
};

struct AffineLine {
  // a*s + b*t + c = 0 in chart coordinates
  Rat a, b, c;
  std::size_t form_index;
};

struct Box {
  Rat minx, maxx, miny, maxy;
  void include(const ChartPoint& p) {
    minx = std::min(minx, p.s);
    maxx = std::max(maxx, p.s);
    miny = std::min(miny, p.t);
    maxy = std::max(maxy, p.t);
  }
};

// Clip a*s + b*t + c = 0 to the box; the two extreme intersection points,
// or nothing when the line misses the box.
std::optional<std::pair<ChartPoint, ChartPoint>> clip_line(const AffineLine& L,
                                                           const Box& box) {
  std::vector<ChartPoint> pts;
  auto push = [&](const Rat& s, const Rat& t) {
    if (s < box.minx || s > box.maxx || t < box.miny || t > box.maxy) return;
    for (const auto& p : pts) {
      if (p.s == s && p.t == t) return;
    }
    pts.push_back({s, t});
  };
  if (L.a != 0) {
    push((-L.c - L.b * box.miny) / L.a, box.miny);
    push((-L.c - L.b * box.maxy) / L.a, box.maxy);
  }
  if (L.b != 0) {
    push(box.minx, (-L.c - L.a * box.minx) / L.b);
    push(box.maxx, (-L.c - L.a * box.maxx) / L.b);
  }
  if (pts.size() < 2) return std::nullopt;
  // Extremes along the direction (-b, a).
  auto key = [&](const ChartPoint& p) -> Rat { return Rat(-L.b * p.s + L.a * p.t); };
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (key(pts[i]) < key(pts[lo])) lo = i;
    if (key(pts[i]) > key(pts[hi])) hi = i;
  }
  return std::make_pair(pts[lo], pts[hi]);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  // avoid "-0.00"
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

}  // namespace

std::string plot_svg(const Arrangement& a, std::size_t infinity_index,
                     const PlotOptions& opts) {
  require_rank3(a, "plot_svg");
  if (infinity_index >= a.size())
    throw std::invalid_argument("plot_svg: infinity form not in arrangement");

  Chart chart;
  chart.infinity = &a.form(infinity_index);
  chart.p0 = unit_value_point(chart.infinity->coeffs);
  chart.basis = integer_kernel_basis(chart.infinity->coeffs);

  // Affine line per remaining form.
  std::vector<AffineLine> lines;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == infinity_index) continue;
    const auto& f = a.form(i).coeffs;
    AffineLine L;
    L.a = Rat(eval_int_form(f, chart.basis[0]));
    L.b = Rat(eval_int_form(f, chart.basis[1]));
    L.c = Rat(eval_int_form(f, chart.p0));
    L.form_index = i;
    lines.push_back(std::move(L));
  }

  // Vertices: rank-2 flats with direction off the infinity hyperplane.
  IntersectionLattice lat(a);
  std::vector<ChartPoint> vertices;
  for (auto fi : lat.flats_of_rank(2)) {
    const auto& sup = lat.flat(fi).support;
    auto dir = primitive_int(
        cross3(a.form(sup[0]).coeffs, a.form(sup[1]).coeffs));
    if (eval_int_form(chart.infinity->coeffs, dir) == 0) continue;
    vertices.push_back(chart.project(dir));
  }

  // Simple triangles, one per antipodal pair, all vertices finite.
  auto triangles = find_simple_triangles(a);
  std::set<std::vector<std::size_t>> seen_walls;
  struct ShadedTriangle {
    std::vector<std::size_t> walls;
    std::vector<ChartPoint> corners;
  };
  std::vector<ShadedTriangle> shaded;
  for (const auto& tri : triangles) {
    if (!seen_walls.insert(tri.walls).second) continue;
    bool finite = true;
    std::vector<ChartPoint> corners;
    for (const auto& v : tri.vertices) {
      if (eval_int_form(chart.infinity->coeffs, v.direction) == 0) {
        finite = false;
        break;
      }
      corners.push_back(chart.project(v.direction));
    }
    if (finite) shaded.push_back({tri.walls, std::move(corners)});
  }

  // View box over everything drawable.
  Box box{Rat(-1), Rat(1), Rat(-1), Rat(1)};
  bool seeded = false;
  for (const auto& p : vertices) {
    if (!seeded) {
      box = Box{p.s, p.s, p.t, p.t};
      seeded = true;
    } else {
      box.include(p);
    }
  }
  for (const auto& tr : shaded) {
    for (const auto& p : tr.corners) box.include(p);
  }
  // Pad: a quarter of the span (at least 1) on every side.
  Rat spanx = box.maxx - box.minx, spany = box.maxy - box.miny;
  Rat pad = (spanx > spany ? spanx : spany) / 4;
  if (pad < 1) pad = 1;
  box.minx -= pad;
  box.maxx += pad;
  box.miny -= pad;
  box.maxy += pad;
  // A line can still miss the box (no finite vertex on it); widen towards
  // its closest point to the box center.
  for (const auto& L : lines) {
    if (clip_line(L, box)) continue;
    Rat cx = (box.minx + box.maxx) / 2, cy = (box.miny + box.maxy) / 2;
    Rat nn = L.a * L.a + L.b * L.b;
    Rat d = (L.a * cx + L.b * cy + L.c) / nn;
    box.include({cx - d * L.a, cy - d * L.b});
    box.minx -= pad;
    box.maxx += pad;
    box.miny -= pad;
    box.maxy += pad;
  }

  const double W = opts.width, H = opts.height, margin = 20.0;
  double sx = (W - 2 * margin) / Rat(box.maxx - box.minx).get_d();
  double sy = (H - 2 * margin) / Rat(box.maxy - box.miny).get_d();
  double scale = std::min(sx, sy);
  auto px = [&](const ChartPoint& p) {
    double x = margin + Rat(p.s - box.minx).get_d() * scale;
    double y = H - margin - Rat(p.t - box.miny).get_d() * scale;
    return std::make_pair(x, y);
  };

  auto names = default_var_names(3);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
      << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width << " "
      << opts.height << "\">\n";
  svg << "  <!-- chart with " << a.form(infinity_index).str(names)
      << " = 0 at infinity -->\n";
  svg << "  <g id=\"triangles\">\n";
  for (const auto& tr : shaded) {
    svg << "    <polygon class=\"simple-triangle\" data-walls=\"";
    for (std::size_t i = 0; i < tr.walls.size(); ++i) {
      if (i) svg << ",";
      svg << tr.walls[i];
    }
    svg << "\" points=\"";
    for (std::size_t i = 0; i < tr.corners.size(); ++i) {
      auto [x, y] = px(tr.corners[i]);
      if (i) svg << " ";
      svg << fmt(x) << "," << fmt(y);
    }
    svg << "\" fill=\"#f4a9a0\" stroke=\"none\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <g id=\"lines\" stroke=\"#20304c\" stroke-width=\"1.5\">\n";
  for (const auto& L : lines) {
    auto seg = clip_line(L, box);
    if (!seg) throw std::logic_error("plot_svg: line escaped the view box");
    auto [p1, p2] = *seg;
    auto [x1, y1] = px(p1);
    auto [x2, y2] = px(p2);
    svg << "    <line data-form=\"" << L.form_index << "\" x1=\"" << fmt(x1)
        << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
        << "\"><title>" << a.form(L.form_index).str(names) << " = 0</title></line>\n";
  }
  svg << "  </g>\n";
  svg << "  <g id=\"vertices\" fill=\"#b3342c\">\n";
  for (const auto& p : vertices) {
    auto [x, y] = px(p);
    svg << "    <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\"/>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace arr
