#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/rational.hpp"

namespace arr {

// Exact witness search for strict homogeneous systems: returns a rational
// point with row . x > 0 for every row, or nullopt when infeasible.
// Fourier-Motzkin elimination; fully deterministic.
std::optional<std::vector<Rat>> strict_feasible(
    const std::vector<std::vector<Rat>>& rows, int dim);

// Open chamber of the real complement: sign per form (+1/-1 over the
// arrangement's canonical form order), an exact interior witness, and the
// indices of the forms supporting a codimension-1 face.
struct Chamber {
  std::vector<int> signs;
  std::vector<Rat> witness;
  std::vector<std::size_t> walls;
};

// Incremental insertion over the canonical form order; requires an
// essential rank-3 arrangement in dimension 3.
std::vector<Chamber> enumerate_chambers(const Arrangement& a);

bool is_simplicial(const Arrangement& a);

struct TriangleVertex {
  std::vector<Int> direction;         // primitive direction of the flat line
  std::vector<std::size_t> support;   // forms vanishing on the line
};

struct TriangleReport {
  std::size_t chamber_index = 0;
  std::vector<std::size_t> walls;     // exactly 3 form indices, sorted
  std::vector<TriangleVertex> vertices;  // one per wall pair, pair order (01,02,12)
};

// Chambers with exactly three walls whose pairwise wall intersections lie
// on no other hyperplane.
std::vector<TriangleReport> find_simple_triangles(const Arrangement& a);

enum class Kpi1Status { KPi1, NotKPi1, Unknown };
enum class Kpi1Reason { Simplicial, Supersolvable, SimpleTriangle, None };

struct Kpi1Verdict {
  Kpi1Status status = Kpi1Status::Unknown;
  Kpi1Reason reason = Kpi1Reason::None;
  std::vector<TriangleReport> triangles;  // attached for NotKPi1
};

Kpi1Verdict kpi1_verdict(const Arrangement& a);

std::string kpi1_status_str(Kpi1Status s);
std::string kpi1_reason_str(Kpi1Reason r);

struct PlotOptions {
  int width = 800;
  int height = 800;
};

// Projective-plane picture in the affine chart with the chosen hyperplane
// at infinity: one <line> per remaining form, vertices marked, simple
// triangles shaded. Rational geometry throughout; rounding happens only
// when coordinates are printed.
std::string plot_svg(const Arrangement& a, std::size_t infinity_index,
                     const PlotOptions& opts = {});

}  // namespace arr
