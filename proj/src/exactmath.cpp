#include "exactmath.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace homometry::exactmath {

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  std::string text(s);
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
}

BigInt floor_int(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

BigInt ceil_int(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

std::string constraint_to_text(const LinearConstraint& c) {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) os << c.a[i].str() << ' ';
  switch (c.rel) {
    case Rel::EQ: os << '='; break;
    case Rel::LT: os << '<'; break;
    case Rel::LE: os << "<="; break;
  }
  os << ' ' << c.b.str();
  return os.str();
}

LinearConstraint constraint_from_text(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::string tok[6];
  for (auto& t : tok)
    if (!(is >> t)) throw std::invalid_argument("constraint: expected 6 fields");
  std::string extra;
  if (is >> extra) throw std::invalid_argument("constraint: trailing fields");
  LinearConstraint c;
  for (int i = 0; i < 4; ++i) c.a[i] = Rational::from_string(tok[i]);
  if (tok[4] == "=") c.rel = Rel::EQ;
  else if (tok[4] == "<") c.rel = Rel::LT;
  else if (tok[4] == "<=") c.rel = Rel::LE;
  else throw std::invalid_argument("constraint: bad relation '" + tok[4] + "'");
  c.b = Rational::from_string(tok[5]);
  return c;
}

namespace {

int first_nonzero(const QVec4& a) {
  for (int i = 0; i < 4; ++i)
    if (a[i].sign() != 0) return i;
  return -1;
}

// 0 REL b. Returns +1 vacuous, -1 contradictory.
int constant_row_verdict(const LinearConstraint& r) {
  switch (r.rel) {
    case Rel::EQ: return r.b.sign() == 0 ? 1 : -1;
    case Rel::LT: return r.b.sign() > 0 ? 1 : -1;
    case Rel::LE: return r.b.sign() >= 0 ? 1 : -1;
  }
  return -1;
}

void scale_row(LinearConstraint& r) {
  int lead = first_nonzero(r.a);
  if (lead < 0) return;
  Rational s = abs(r.a[lead]);
  if (s == Rational(1)) return;
  for (int i = lead; i < 4; ++i) r.a[i] /= s;
  r.b /= s;
}

struct LhsKey {
  QVec4 a;
  bool eq;
  bool operator<(const LhsKey& o) const {
    if (eq != o.eq) return eq < o.eq;
    auto c = a <=> o.a;
    return c == std::strong_ordering::less;
  }
};

// Normalizes a row list: scales, drops vacuous rows, keeps the tightest of
// rows sharing a left-hand side. Returns false on a detected contradiction
// (constant contradiction or two equations with equal LHS, different RHS).
bool normalize_rows(std::vector<LinearConstraint>& rows) {
  std::map<LhsKey, LinearConstraint> best;
  for (auto& r : rows) {
    if (first_nonzero(r.a) < 0) {
      if (constant_row_verdict(r) < 0) return false;
      continue;
    }
    scale_row(r);
    if (r.rel == Rel::EQ && r.a[first_nonzero(r.a)].sign() < 0) {
      r.a = -r.a;
      r.b = -r.b;
    }
    LhsKey key{r.a, r.rel == Rel::EQ};
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, r);
      continue;
    }
    LinearConstraint& kept = it->second;
    if (r.rel == Rel::EQ) {
      if (kept.b != r.b) return false;
    } else {
      // Same LHS inequalities: smaller bound wins; on a tie strict wins.
      if (r.b < kept.b || (r.b == kept.b && r.rel == Rel::LT)) kept = r;
    }
  }
  rows.clear();
  rows.reserve(best.size());
  for (auto& [k, r] : best) rows.push_back(std::move(r));
  return true;
}

// One exact elimination step: removes `var` from every row. Uses an equation
// as a substitution when one mentions the variable; otherwise combines each
// lower bound with each upper bound (strict if either side is strict).
// Returns false if a contradiction surfaced during renormalization.
bool eliminate_rows(std::vector<LinearConstraint>& rows, int var) {
  int eq_idx = -1;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel == Rel::EQ && rows[i].a[var].sign() != 0) {
      eq_idx = static_cast<int>(i);
      break;
    }
  }
  std::vector<LinearConstraint> out;
  out.reserve(rows.size());
  if (eq_idx >= 0) {
    const LinearConstraint eq = rows[static_cast<size_t>(eq_idx)];
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == eq_idx) continue;
      LinearConstraint r = rows[i];
      if (r.a[var].sign() != 0) {
        Rational f = r.a[var] / eq.a[var];
        r.a -= f * eq.a;
        r.b -= f * eq.b;
      }
      out.push_back(std::move(r));
    }
  } else {
    std::vector<LinearConstraint> lowers, uppers;
    for (const auto& r : rows) {
      int s = r.a[var].sign();
      if (s == 0) out.push_back(r);
      else if (s > 0) uppers.push_back(r);
      else lowers.push_back(r);
    }
    for (const auto& lo : lowers) {
      for (const auto& up : uppers) {
        // lo.a[var] < 0 < up.a[var]; positive multipliers cancel var.
        LinearConstraint c;
        c.a = up.a[var] * lo.a + (-lo.a[var]) * up.a;
        c.b = up.a[var] * lo.b + (-lo.a[var]) * up.b;
        c.rel = (lo.rel == Rel::LT || up.rel == Rel::LT) ? Rel::LT : Rel::LE;
        out.push_back(std::move(c));
      }
    }
  }
  rows = std::move(out);
  return normalize_rows(rows);
}

// Cheapest variable to eliminate next, by projected row growth.
int pick_var(const std::vector<LinearConstraint>& rows) {
  int best = -1;
  long best_cost = 0;
  for (int v = 0; v < 4; ++v) {
    long eqs = 0, lowers = 0, uppers = 0;
    for (const auto& r : rows) {
      int s = r.a[v].sign();
      if (s == 0) continue;
      if (r.rel == Rel::EQ) ++eqs;
      else if (s > 0) ++uppers;
      else ++lowers;
    }
    if (eqs + lowers + uppers == 0) continue;
    long cost = eqs > 0 ? 0 : lowers * uppers - (lowers + uppers);
    if (best < 0 || cost < best_cost) {
      best = v;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace

Cell Cell::make(std::vector<LinearConstraint> rows) {
  Cell c;
  if (!normalize_rows(rows)) return empty_cell();
  c.rows_ = std::move(rows);
  return c;
}

Cell Cell::empty_cell() {
  Cell c;
  c.trivially_empty_ = true;
  LinearConstraint marker;  // 0 < 0, kept as the canonical contradiction
  marker.rel = Rel::LT;
  c.rows_.push_back(marker);
  return c;
}

Cell Cell::conjoin(const std::vector<LinearConstraint>& extra) const {
  if (trivially_empty_) return *this;
  std::vector<LinearConstraint> rows = rows_;
  rows.insert(rows.end(), extra.begin(), extra.end());
  return make(std::move(rows));
}

std::string Cell::to_text() const {
  std::ostringstream os;
  for (const auto& r : rows_) os << constraint_to_text(r) << '\n';
  return os.str();
}

bool feasible(const Cell& cell) {
  if (cell.trivially_empty()) return false;
  std::vector<LinearConstraint> rows = cell.constraints();
  for (;;) {
    int v = pick_var(rows);
    if (v < 0) return true;  // only constant rows remained and were vacuous
    if (!eliminate_rows(rows, v)) return false;
  }
}

Cell eliminate(const Cell& cell, int var) {
  if (cell.trivially_empty()) return Cell::empty_cell();
  std::vector<LinearConstraint> rows = cell.constraints();
  if (!eliminate_rows(rows, var)) return Cell::empty_cell();
  return Cell::make(std::move(rows));
}

namespace {

struct VarInterval {
  std::optional<Rational> lo, hi;
  bool lo_strict = false, hi_strict = false;
  std::optional<Rational> pinned;  // from an equation
};

// Bounds on `var` from rows where all other variables have known values.
VarInterval interval_for(const std::vector<LinearConstraint>& rows, int var,
                         const QVec4& partial, const std::array<bool, 4>& known) {
  VarInterval iv;
  for (const auto& r : rows) {
    if (r.a[var].sign() == 0) continue;
    Rational rest;
    bool usable = true;
    for (int i = 0; i < 4; ++i) {
      if (i == var || r.a[i].sign() == 0) continue;
      if (!known[static_cast<size_t>(i)]) { usable = false; break; }
      rest += r.a[i] * partial[i];
    }
    if (!usable) continue;
    Rational bound = (r.b - rest) / r.a[var];
    if (r.rel == Rel::EQ) {
      iv.pinned = bound;
      continue;
    }
    bool strict = r.rel == Rel::LT;
    if (r.a[var].sign() > 0) {
      if (!iv.hi || bound < *iv.hi || (bound == *iv.hi && strict)) {
        iv.hi = bound;
        iv.hi_strict = strict;
      }
    } else {
      if (!iv.lo || bound > *iv.lo || (bound == *iv.lo && strict)) {
        iv.lo = bound;
        iv.lo_strict = strict;
      }
    }
  }
  return iv;
}

Rational pick_from_interval(const VarInterval& iv) {
  if (iv.pinned) return *iv.pinned;
  if (iv.lo && iv.hi) {
    if (*iv.lo == *iv.hi) return *iv.lo;  // feasibility implies both non-strict
    return (*iv.lo + *iv.hi) / Rational(2);
  }
  if (iv.lo) return *iv.lo + Rational(1);
  if (iv.hi) return *iv.hi - Rational(1);
  return Rational(0);
}

}  // namespace

std::optional<QVec4> find_point(const Cell& cell) {
  if (!feasible(cell)) return std::nullopt;
  // Project away x4, x3, x2 in turn; back-substitute through the stages.
  std::array<std::vector<LinearConstraint>, 4> stage;
  stage[3] = cell.constraints();
  for (int v = 3; v >= 1; --v) {
    std::vector<LinearConstraint> rows = stage[static_cast<size_t>(v)];
    bool ok = eliminate_rows(rows, v);
    assert(ok);
    (void)ok;
    stage[static_cast<size_t>(v - 1)] = std::move(rows);
  }
  QVec4 x;
  std::array<bool, 4> known{};
  for (int v = 0; v < 4; ++v) {
    x[v] = pick_from_interval(interval_for(stage[static_cast<size_t>(v)], v, x, known));
    known[static_cast<size_t>(v)] = true;
  }
  assert(cell.contains(x));
  return x;
}

namespace {

// Constraint sets whose union is the complement of r.
std::vector<std::vector<LinearConstraint>> negations(const LinearConstraint& r) {
  LinearConstraint below{r.a, r.b, Rel::LT};
  LinearConstraint above{-r.a, -r.b, Rel::LT};
  switch (r.rel) {
    case Rel::EQ: return {{below}, {above}};
    case Rel::LE: return {{above}};
    case Rel::LT: return {{LinearConstraint{-r.a, -r.b, Rel::LE}}};
  }
  return {};
}

bool cell_contains_cell(const Cell& outer, const Cell& inner) {
  for (const auto& r : outer.constraints())
    for (const auto& neg : negations(r))
      if (feasible(inner.conjoin(neg))) return false;
  return true;
}

}  // namespace

std::vector<Cell> subtract(const Cell& a, const Cell& b) {
  std::vector<Cell> out;
  if (!feasible(a)) return out;
  Cell cur = a;
  for (const auto& r : b.constraints()) {
    for (const auto& neg : negations(r)) {
      Cell piece = cur.conjoin(neg);
      if (feasible(piece)) out.push_back(std::move(piece));
    }
    cur = cur.conjoin({r});
    if (cur.trivially_empty() || !feasible(cur)) break;
  }
  return out;
}

bool union_contains(const CellUnion& big, const CellUnion& small) {
  for (const auto& c : small.cells) {
    if (!feasible(c)) continue;
    bool single = false;
    for (const auto& b : big.cells) {
      if (cell_contains_cell(b, c)) {
        single = true;
        break;
      }
    }
    if (single) continue;
    if (auto w = find_point(c); w && !big.contains(*w)) return false;
    std::vector<Cell> residue{c};
    for (const auto& b : big.cells) {
      std::vector<Cell> next;
      for (const auto& r : residue) {
        auto parts = subtract(r, b);
        next.insert(next.end(), parts.begin(), parts.end());
      }
      residue = std::move(next);
      if (residue.empty()) break;
    }
    if (!residue.empty()) return false;
  }
  return true;
}

Parametrization parametrize(const Cell& cell) {
  if (!feasible(cell)) throw std::invalid_argument("parametrize: infeasible cell");

  // Equality system: explicit equations plus inequalities tight on the cell.
  std::vector<LinearConstraint> eqs, ineqs;
  for (const auto& r : cell.constraints()) {
    if (r.rel == Rel::EQ) {
      eqs.push_back(r);
    } else if (r.rel == Rel::LE &&
               !feasible(cell.conjoin({LinearConstraint{r.a, r.b, Rel::LT}}))) {
      eqs.push_back(LinearConstraint{r.a, r.b, Rel::EQ});
    } else {
      ineqs.push_back(r);
    }
  }

  // Row-reduce the equality system over (x1..x4 | rhs).
  std::vector<std::pair<QVec4, Rational>> rref;
  for (const auto& e : eqs) rref.emplace_back(e.a, e.b);
  std::array<int, 4> pivot_row{-1, -1, -1, -1};
  size_t next = 0;
  for (int col = 0; col < 4 && next < rref.size(); ++col) {
    size_t sel = next;
    while (sel < rref.size() && rref[sel].first[col].sign() == 0) ++sel;
    if (sel == rref.size()) continue;
    std::swap(rref[next], rref[sel]);
    Rational inv = Rational(1) / rref[next].first[col];
    rref[next].first *= inv;
    rref[next].second *= inv;
    for (size_t r = 0; r < rref.size(); ++r) {
      if (r == next || rref[r].first[col].sign() == 0) continue;
      Rational f = rref[r].first[col];
      rref[r].first -= f * rref[next].first;
      rref[r].second -= f * rref[next].second;
    }
    pivot_row[static_cast<size_t>(col)] = static_cast<int>(next);
    ++next;
  }

  Parametrization out;
  std::vector<int> frees;
  for (int v = 0; v < 4; ++v) {
    if (pivot_row[static_cast<size_t>(v)] >= 0)
      out.base[v] = rref[static_cast<size_t>(pivot_row[static_cast<size_t>(v)])].second;
    else
      frees.push_back(v);
  }
  for (int f : frees) {
    QVec4 d;
    d[f] = Rational(1);
    for (int v = 0; v < 4; ++v) {
      int pr = pivot_row[static_cast<size_t>(v)];
      if (pr >= 0) d[v] = -rref[static_cast<size_t>(pr)].first[f];
    }
    out.directions.push_back(d);
  }

  // Inequalities in parameter space: substitute x = base + sum t_k d_k.
  std::vector<LinearConstraint> prows;
  for (const auto& r : ineqs) {
    LinearConstraint p;
    for (size_t k = 0; k < out.directions.size(); ++k)
      p.a[static_cast<int>(k)] = r.a.dot(out.directions[k]);
    p.b = r.b - r.a.dot(out.base);
    p.rel = r.rel;
    prows.push_back(std::move(p));
  }
  Cell pcell = Cell::make(prows);
  out.param_constraints = pcell.constraints();

  // Exact range of each parameter: project the others away.
  for (size_t k = 0; k < out.directions.size(); ++k) {
    std::vector<LinearConstraint> rows = pcell.constraints();
    for (size_t j = 0; j < out.directions.size(); ++j) {
      if (j == k) continue;
      bool ok = eliminate_rows(rows, static_cast<int>(j));
      assert(ok);
      (void)ok;
    }
    QVec4 zero;
    std::array<bool, 4> known{true, true, true, true};
    known[k] = false;
    VarInterval iv = interval_for(rows, static_cast<int>(k), zero, known);
    ParamBound b;
    if (iv.pinned) {
      b.lo = b.hi = *iv.pinned;
    } else {
      b.lo = iv.lo;
      b.hi = iv.hi;
      b.lo_strict = iv.lo_strict;
      b.hi_strict = iv.hi_strict;
    }
    out.bounds.push_back(std::move(b));
  }
  return out;
}

}  // namespace homometry::exactmath
