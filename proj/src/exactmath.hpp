// Exact linear constraint systems over Q^4: cells (conjunctions of linear
// equations and strict/non-strict inequalities), finite unions of cells,
// Fourier-Motzkin feasibility and projection, cell difference, union
// containment, and affine parametrization of a cell.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace homometry::exactmath {

enum class Rel { EQ, LT, LE };

// a . x REL b. The all-zero form never survives Cell construction.
struct LinearConstraint {
  QVec4 a;
  Rational b;
  Rel rel = Rel::LE;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;

  bool holds(const QVec4& x) const {
    Rational v = a.dot(x);
    switch (rel) {
      case Rel::EQ: return v == b;
      case Rel::LT: return v < b;
      case Rel::LE: return v <= b;
    }
    return false;
  }
};

// One constraint per line: "a1 a2 a3 a4 REL c" with REL in {=, <, <=} and
// rational entries. The debugging format used by --dump-cells.
std::string constraint_to_text(const LinearConstraint& c);
LinearConstraint constraint_from_text(std::string_view line);

// Immutable conjunction of constraints. Construction normalizes: scales each
// row so its first nonzero coefficient is +-1, drops vacuously true rows,
// collapses any row that is false on its own into the canonical empty cell,
// and deduplicates rows with equal left-hand sides keeping the tightest.
class Cell {
 public:
  Cell() = default;
  static Cell make(std::vector<LinearConstraint> rows);
  static Cell empty_cell();

  const std::vector<LinearConstraint>& constraints() const { return rows_; }
  // True when construction already collapsed the cell to a contradiction.
  // A false result does not imply feasibility; use feasible() for that.
  bool trivially_empty() const { return trivially_empty_; }

  Cell conjoin(const std::vector<LinearConstraint>& extra) const;

  bool contains(const QVec4& x) const {
    if (trivially_empty_) return false;
    for (const auto& r : rows_)
      if (!r.holds(x)) return false;
    return true;
  }

  std::string to_text() const;  // one constraint per line

 private:
  std::vector<LinearConstraint> rows_;
  bool trivially_empty_ = false;
};

// Finite union of cells. Members are kept as constructed; emptiness of
// individual members is allowed and ignored by membership.
struct CellUnion {
  std::vector<Cell> cells;

  bool contains(const QVec4& x) const {
    for (const auto& c : cells)
      if (c.contains(x)) return true;
    return false;
  }
  bool empty_list() const { return cells.empty(); }
};

// y = M x + t, rows of M paired with entries of t.
struct AffineMap4 {
  std::array<QVec4, 4> rows{};
  QVec4 offset{};

  QVec4 apply(const QVec4& x) const {
    QVec4 y;
    for (int i = 0; i < 4; ++i) y[i] = rows[static_cast<size_t>(i)].dot(x) + offset[i];
    return y;
  }
  friend bool operator==(const AffineMap4&, const AffineMap4&) = default;
};

// Exact emptiness test by Fourier-Motzkin elimination. Equations are used as
// substitutions first; combining a strict with any bound stays strict.
bool feasible(const Cell& cell);

// Exact projection of the cell onto the hyperplane of the remaining
// variables (the eliminated coordinate becomes unconstrained; rows keep the
// 4-dimensional layout with a zero coefficient in position `var`).
Cell eliminate(const Cell& cell, int var);

// A rational witness point, when the cell is nonempty.
std::optional<QVec4> find_point(const Cell& cell);

// Cells whose union is (a minus b); every returned cell is feasible. The
// standard disjoint-difference decomposition over b's constraints; negating
// an equation contributes two half-space branches.
std::vector<Cell> subtract(const Cell& a, const Cell& b);

// Whether every point of `small` lies in some cell of `big` (exact).
bool union_contains(const CellUnion& big, const CellUnion& small);

struct ParamBound {
  std::optional<Rational> lo, hi;  // absent = unbounded on that side
  bool lo_strict = false, hi_strict = false;
};

// cell = { base + sum_k t_k * directions[k] : t satisfies param_constraints },
// with bounds[k] the exact range of t_k over the cell. For cells of dimension
// <= 1 the bounds alone reproduce the cell; higher-dimensional cells may
// couple parameters, in which case param_constraints carries the full system
// (forms padded into QVec4, coordinate k = coefficient of t_k).
struct Parametrization {
  QVec4 base;
  std::vector<QVec4> directions;
  std::vector<ParamBound> bounds;
  std::vector<LinearConstraint> param_constraints;

  int dimension() const { return static_cast<int>(directions.size()); }
};

// Requires a feasible cell (throws std::invalid_argument otherwise).
Parametrization parametrize(const Cell& cell);

}  // namespace homometry::exactmath
