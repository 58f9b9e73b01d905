#include "difftables.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace homometry::difftables {

using exactmath::LinearConstraint;
using exactmath::Rel;

namespace {

constexpr int kRowOffset[4] = {0, 4, 7, 9};

}  // namespace

std::pair<int, int> symbol_endpoints(int idx) {
  for (int i = 0; i < 4; ++i)
    if (idx < kRowOffset[i] + (4 - i)) return {i, idx - kRowOffset[i] + i + 1};
  throw std::invalid_argument("symbol_endpoints: index out of range");
}

int symbol_index(int i, int j) {
  if (i < 0 || i >= j || j > 4) throw std::invalid_argument("symbol_index: bad endpoints");
  return kRowOffset[i] + (j - i - 1);
}

std::string symbol_name(int idx) {
  auto [i, j] = symbol_endpoints(idx);
  return std::string{static_cast<char>('0' + i), static_cast<char>('0' + j)};
}

std::optional<int> symbol_from_name(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  int i = name[0] - '0', j = name[1] - '0';
  if (i < 0 || i >= j || j > 4) return std::nullopt;
  return symbol_index(i, j);
}

QVec4 symbol_form(int idx) {
  auto [i, j] = symbol_endpoints(idx);
  QVec4 f;
  f[j - 1] = Rational(1);
  if (i > 0) f[i - 1] = Rational(-1);
  return f;
}

std::vector<DiffSymbol> p_long_symbols(int p) {
  switch (p) {
    case 0: return {};
    case 1: return {DiffSymbol::S04};
    case 2: return {DiffSymbol::S03, DiffSymbol::S04};
    default: throw std::invalid_argument("p_long_symbols: p must be 0, 1 or 2");
  }
}

namespace {

bool valid_pq(int p, int q) {
  return (p == 0 && (q == 1 || q == 2)) || (p == 1 && (q == 1 || q == 2)) ||
         (p == 2 && q == 2);
}

}  // namespace

DifferenceTable build_table(const SymbolPerm& perm, int p, int q) {
  if (!valid_pq(p, q))
    throw std::invalid_argument("build_table: (p, q) must be one of (0,1),(0,2),(1,1),(1,2),(2,2)");
  {
    std::array<bool, 10> seen{};
    for (auto s : perm) {
      if (s >= 10 || seen[s]) throw std::invalid_argument("build_table: not a permutation");
      seen[s] = true;
    }
  }
  DifferenceTable t;
  t.p = p;
  t.q = q;
  t.perm = perm;
  for (int pos = 0; pos < kSymbolCount; ++pos) {
    t.entries[static_cast<size_t>(pos)].symbol = static_cast<DiffSymbol>(perm[static_cast<size_t>(pos)]);
    t.entries[static_cast<size_t>(pos)].barred = false;
  }
  for (DiffSymbol s : p_long_symbols(p))
    for (auto& e : t.entries)
      if (e.symbol == s) e.barred = !e.barred;
  for (DiffSymbol s : p_long_symbols(q)) {
    int pos = symbol_index(symbol_endpoints(static_cast<int>(s)).first,
                           symbol_endpoints(static_cast<int>(s)).second);
    t.entries[static_cast<size_t>(pos)].barred = !t.entries[static_cast<size_t>(pos)].barred;
  }
  return t;
}

namespace {

// An affine form a . x + c.
struct Affine {
  QVec4 a;
  Rational c;
};

Affine resolved(const TableEntry& e) {
  QVec4 f = symbol_form(static_cast<int>(e.symbol));
  if (!e.barred) return {f, Rational(0)};
  return {-f, Rational(1)};
}

Affine operator-(const Affine& l, const Affine& r) { return {l.a - r.a, l.c - r.c}; }
Affine operator+(const Affine& l, const Affine& r) { return {l.a + r.a, l.c + r.c}; }

// L REL R as a linear constraint.
LinearConstraint rel_row(const Affine& l, const Affine& r, Rel rel) {
  return LinearConstraint{l.a - r.a, r.c - l.c, rel};
}

Affine unit(int var) {
  Affine f;
  f.a[var] = Rational(1);
  return f;
}

Affine constant(Rational v) { return Affine{QVec4{}, std::move(v)}; }

const Rational kHalf{1, 2};

// Long-count rows for the vector given by coordinate forms z[0..3].
void long_count_rows(const std::array<Affine, 4>& z, int count,
                     std::vector<LinearConstraint>& out) {
  switch (count) {
    case 0:
      out.push_back(rel_row(z[3], constant(kHalf), Rel::LE));
      break;
    case 1:
      out.push_back(rel_row(constant(kHalf), z[3], Rel::LT));
      out.push_back(rel_row(z[2], constant(kHalf), Rel::LE));
      out.push_back(rel_row(z[3] - z[0], constant(kHalf), Rel::LE));
      break;
    case 2:
      out.push_back(rel_row(constant(kHalf), z[2], Rel::LT));
      out.push_back(rel_row(z[1], constant(kHalf), Rel::LT));
      out.push_back(rel_row(z[3] - z[0], constant(kHalf), Rel::LE));
      break;
    default:
      throw std::logic_error("long_count_rows: bad count");
  }
}

// The canonical-ordering conditional as a two-cell disjunction.
std::array<std::vector<LinearConstraint>, 2> ordering_variants(
    const std::array<Affine, 4>& z, int count) {
  Affine lhs = z[0];
  Affine rhs = count <= 1 ? z[3] - z[2] : constant(Rational(1)) - z[3];
  Affine tie_l = z[1] - z[0];
  Affine tie_r = count <= 1 ? z[2] - z[1] : z[3] - z[2];
  return {std::vector<LinearConstraint>{rel_row(lhs, rhs, Rel::LT)},
          std::vector<LinearConstraint>{rel_row(lhs, rhs, Rel::EQ),
                                        rel_row(tie_l, tie_r, Rel::LE)}};
}

}  // namespace

AffineMap4 y_map(const DifferenceTable& t) {
  AffineMap4 m;
  for (int r = 0; r < 4; ++r) {
    Affine f = resolved(t.entries[static_cast<size_t>(symbol_index(0, r + 1))]);
    m.rows[static_cast<size_t>(r)] = f.a;
    m.offset[r] = f.c;
  }
  return m;
}

CellUnion constraint_cells(const DifferenceTable& t) {
  std::array<Affine, 10> pos_form;
  for (int pos = 0; pos < kSymbolCount; ++pos)
    pos_form[static_cast<size_t>(pos)] = resolved(t.entries[static_cast<size_t>(pos)]);

  std::array<Affine, 4> x{unit(0), unit(1), unit(2), unit(3)};
  std::array<Affine, 4> y;
  for (int r = 0; r < 4; ++r) y[static_cast<size_t>(r)] = pos_form[static_cast<size_t>(symbol_index(0, r + 1))];

  std::vector<LinearConstraint> base;
  // 0 < x1 < x2 < x3 < x4.
  base.push_back(rel_row(constant(Rational(0)), x[0], Rel::LT));
  for (int k = 0; k < 3; ++k)
    base.push_back(rel_row(x[static_cast<size_t>(k)], x[static_cast<size_t>(k + 1)], Rel::LT));
  long_count_rows(x, t.p, base);

  // Each off-diagonal entry equals the sum of the diagonal entries it spans.
  for (int i = 0; i <= 2; ++i)
    for (int j = i + 2; j <= 4; ++j) {
      Affine sum = pos_form[static_cast<size_t>(symbol_index(i, i + 1))];
      for (int d = i + 1; d < j; ++d) sum = sum + pos_form[static_cast<size_t>(symbol_index(d, d + 1))];
      base.push_back(rel_row(pos_form[static_cast<size_t>(symbol_index(i, j))], sum, Rel::EQ));
    }

  long_count_rows(y, t.q, base);

  auto p_variants = ordering_variants(x, t.p);
  auto q_variants = ordering_variants(y, t.q);

  // Noncongruence: x != y when p < q, x < y lexicographically when p = q.
  std::vector<std::vector<LinearConstraint>> nc;
  if (t.p != t.q) {
    for (int r = 0; r < 4; ++r) {
      nc.push_back({rel_row(x[static_cast<size_t>(r)], y[static_cast<size_t>(r)], Rel::LT)});
      nc.push_back({rel_row(y[static_cast<size_t>(r)], x[static_cast<size_t>(r)], Rel::LT)});
    }
  } else {
    for (int r = 0; r < 4; ++r) {
      std::vector<LinearConstraint> v;
      for (int s = 0; s < r; ++s)
        v.push_back(rel_row(x[static_cast<size_t>(s)], y[static_cast<size_t>(s)], Rel::EQ));
      v.push_back(rel_row(x[static_cast<size_t>(r)], y[static_cast<size_t>(r)], Rel::LT));
      nc.push_back(std::move(v));
    }
  }

  CellUnion out;
  Cell base_cell = Cell::make(base);
  if (!exactmath::feasible(base_cell)) return out;
  for (const auto& pv : p_variants)
    for (const auto& qv : q_variants) {
      std::vector<LinearConstraint> ordering = pv;
      ordering.insert(ordering.end(), qv.begin(), qv.end());
      Cell ordered = base_cell.conjoin(ordering);
      if (!exactmath::feasible(ordered)) continue;
      for (const auto& nv : nc) {
        Cell cell = ordered.conjoin(nv);
        if (exactmath::feasible(cell)) out.cells.push_back(std::move(cell));
      }
    }
  return out;
}

SolutionSet solution_set(const DifferenceTable& t) {
  return SolutionSet{t, constraint_cells(t), y_map(t)};
}

bool xy_subset(const SolutionSet& a, const SolutionSet& b) {
  if (!exactmath::union_contains(b.x_cells, a.x_cells)) return false;
  // y maps must agree on all of a's x-set.
  for (int r = 0; r < 4; ++r) {
    QVec4 da = a.y.rows[static_cast<size_t>(r)] - b.y.rows[static_cast<size_t>(r)];
    Rational dc = b.y.offset[r] - a.y.offset[r];
    if (da.is_zero() && dc.sign() == 0) continue;
    LinearConstraint below{da, dc, Rel::LT};
    LinearConstraint above{-da, -dc, Rel::LT};
    for (const auto& cell : a.x_cells.cells) {
      if (exactmath::feasible(cell.conjoin({below}))) return false;
      if (exactmath::feasible(cell.conjoin({above}))) return false;
    }
  }
  return true;
}

bool southwest_prune(const DifferenceTable& t) {
  for (int p1 = 0; p1 < kSymbolCount; ++p1) {
    if (t.entries[static_cast<size_t>(p1)].barred) continue;
    auto [r1, c1] = symbol_endpoints(p1);
    auto [h, k] = symbol_endpoints(static_cast<int>(t.entries[static_cast<size_t>(p1)].symbol));
    for (int p2 = 0; p2 < kSymbolCount; ++p2) {
      if (p2 == p1 || t.entries[static_cast<size_t>(p2)].barred) continue;
      auto [r2, c2] = symbol_endpoints(p2);
      if (!(r1 >= r2 && c1 <= c2)) continue;  // p1 weakly southwest of p2
      auto [i, j] = symbol_endpoints(static_cast<int>(t.entries[static_cast<size_t>(p2)].symbol));
      if (h <= i && j <= k) return true;
    }
  }
  return false;
}

std::uint32_t perm_rank(const SymbolPerm& perm) {
  std::uint32_t rank = 0;
  std::uint32_t fact[10] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880};
  for (int k = 0; k < 10; ++k) {
    int smaller = 0;
    for (int j = k + 1; j < 10; ++j)
      if (perm[static_cast<size_t>(j)] < perm[static_cast<size_t>(k)]) ++smaller;
    rank += static_cast<std::uint32_t>(smaller) * fact[9 - k];
  }
  return rank;
}

SymbolPerm perm_unrank(std::uint32_t rank) {
  if (rank >= kPermCount) throw std::invalid_argument("perm_unrank: rank out of range");
  std::uint32_t fact[10] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880};
  std::array<std::uint8_t, 10> pool;
  for (int i = 0; i < 10; ++i) pool[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
  SymbolPerm out{};
  for (int k = 0; k < 10; ++k) {
    std::uint32_t f = fact[9 - k];
    std::uint32_t idx = rank / f;
    rank %= f;
    out[static_cast<size_t>(k)] = pool[idx];
    for (std::uint32_t j = idx; j + 1 < pool.size() - static_cast<std::uint32_t>(k); ++j)
      pool[j] = pool[j + 1];
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

SymbolPerm sampled_perm(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x2545F4914F6CDD1DULL * (index + 1));
  splitmix64(s);  // decorrelate nearby indices
  SymbolPerm perm{};
  for (int i = 0; i < 10; ++i) perm[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
  for (int k = 9; k >= 1; --k) {
    auto j = static_cast<int>(splitmix64(s) % static_cast<std::uint64_t>(k + 1));
    std::swap(perm[static_cast<size_t>(k)], perm[static_cast<size_t>(j)]);
  }
  return perm;
}

namespace {

// Antichain insertion shared by the sequential walk and the chunk merge.
// Returns true when the candidate was inserted.
bool antichain_insert(std::vector<SolutionSet>& chain, SolutionSet cand) {
  for (const auto& member : chain)
    if (xy_subset(cand, member)) return false;
  std::erase_if(chain, [&](const SolutionSet& member) { return xy_subset(member, cand); });
  chain.push_back(std::move(cand));
  return true;
}

void process_one(std::vector<SolutionSet>& chain, const SymbolPerm& perm, int p, int q) {
  DifferenceTable t = build_table(perm, p, q);
  if (southwest_prune(t)) return;
  SolutionSet ss = solution_set(t);
  if (ss.empty()) return;
  antichain_insert(chain, std::move(ss));
}

void sort_by_rank(std::vector<SolutionSet>& chain) {
  std::sort(chain.begin(), chain.end(), [](const SolutionSet& a, const SolutionSet& b) {
    return perm_rank(a.table.perm) < perm_rank(b.table.perm);
  });
}

struct CheckpointState {
  std::uint64_t next = 0;
  std::vector<std::uint32_t> antichain_ranks;
};

std::string checkpoint_header(int p, int q, const MinimalTablesOptions& opts,
                              std::uint64_t range_end) {
  std::ostringstream os;
  os << "p " << p << "\nq " << q << "\nmode " << (opts.full ? "full" : "sampled")
     << "\nseed " << opts.seed << "\nsamples " << opts.sample_count << "\nrange_end "
     << range_end << "\n";
  return os.str();
}

void save_checkpoint(const std::string& path, const std::string& header,
                     const CheckpointState& st) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
    out << "homometry-checkpoint-v1\n" << header << "next " << st.next << "\nantichain";
    for (auto r : st.antichain_ranks) out << ' ' << r;
    out << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("checkpoint: cannot rename into " + path);
}

std::optional<CheckpointState> load_checkpoint(const std::string& path,
                                               const std::string& header) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::string expect = "homometry-checkpoint-v1\n" + header;
  if (text.rfind(expect, 0) != 0)
    throw std::invalid_argument("checkpoint: header mismatch in " + path);
  std::istringstream rest(text.substr(expect.size()));
  std::string key;
  CheckpointState st;
  if (!(rest >> key >> st.next) || key != "next")
    throw std::invalid_argument("checkpoint: malformed " + path);
  if (!(rest >> key) || key != "antichain")
    throw std::invalid_argument("checkpoint: malformed " + path);
  std::uint32_t r;
  while (rest >> r) st.antichain_ranks.push_back(r);
  return st;
}

}  // namespace

MinimalTablesResult minimal_tables(int p, int q, const MinimalTablesOptions& opts) {
  if (!valid_pq(p, q))
    throw std::invalid_argument("minimal_tables: (p, q) must be one of (0,1),(0,2),(1,1),(1,2),(2,2)");
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());

  MinimalTablesResult res;
  res.p = p;
  res.q = q;

  const std::uint64_t begin = opts.range_begin;
  const std::uint64_t end = opts.range_end            ? opts.range_end
                            : opts.full               ? static_cast<std::uint64_t>(kPermCount)
                                                      : opts.sample_count;
  if (opts.full && end > kPermCount)
    throw std::invalid_argument("minimal_tables: range exceeds the number of permutations");
  if (begin > end) throw std::invalid_argument("minimal_tables: range is reversed");

  std::vector<SolutionSet> chain;
  std::uint64_t next = begin;

  std::string header;
  if (opts.full && !opts.checkpoint_path.empty()) {
    header = checkpoint_header(p, q, opts, end);
    if (auto st = load_checkpoint(opts.checkpoint_path, header)) {
      next = std::max(next, st->next);
      for (auto r : st->antichain_ranks)
        chain.push_back(solution_set(build_table(perm_unrank(r), p, q)));
    }
  }

  if (!opts.full && next == begin) {
    // Seed the antichain with the reference tables for this pair.
    for (const auto& named : reference_tables_for(p, q)) {
      SolutionSet ss = solution_set(named.table);
      if (!ss.empty()) antichain_insert(chain, std::move(ss));
      ++res.processed;
    }
  }

  auto perm_at = [&](std::uint64_t idx) {
    return opts.full ? perm_unrank(static_cast<std::uint32_t>(idx))
                     : sampled_perm(opts.seed, idx);
  };

  std::uint64_t last_checkpoint = next;
  bool interrupted = false;
  while (next < end && !interrupted) {
    std::uint64_t batch_end = std::min<std::uint64_t>(end, next + opts.checkpoint_every);
    std::uint64_t span = batch_end - next;
    unsigned nw = static_cast<unsigned>(std::min<std::uint64_t>(threads, span));
    std::vector<std::vector<SolutionSet>> locals(nw);
    {
      std::vector<std::thread> pool;
      pool.reserve(nw);
      for (unsigned w = 0; w < nw; ++w) {
        std::uint64_t lo = next + span * w / nw;
        std::uint64_t hi = next + span * (w + 1) / nw;
        pool.emplace_back([&, w, lo, hi] {
          for (std::uint64_t idx = lo; idx < hi; ++idx)
            process_one(locals[w], perm_at(idx), p, q);
        });
      }
      for (auto& t : pool) t.join();
    }
    for (auto& local : locals)
      for (auto& ss : local) antichain_insert(chain, std::move(ss));
    res.processed += span;
    next = batch_end;

    if (opts.interrupt && opts.interrupt()) interrupted = true;
    if (opts.full && !opts.checkpoint_path.empty() &&
        (interrupted || next >= end || next - last_checkpoint >= opts.checkpoint_every)) {
      sort_by_rank(chain);
      CheckpointState st;
      st.next = next;
      for (const auto& ss : chain) st.antichain_ranks.push_back(perm_rank(ss.table.perm));
      save_checkpoint(opts.checkpoint_path, header, st);
      last_checkpoint = next;
    }
  }

  sort_by_rank(chain);
  res.antichain = std::move(chain);
  res.complete = next >= end;
  return res;
}

namespace {

struct ReferenceRow {
  const char* label;
  int p, q;
  const char* syms;  // ten symbol names in reading order
};

// The 22 reference minimal tables (staircase read top row to bottom row).
const ReferenceRow kReferenceRows[] = {
    {"A1", 0, 1, "01 12 13 14 34 24 04 23 03 02"},
    {"A2", 0, 1, "34 23 13 03 01 02 04 12 14 24"},
    {"D1", 0, 1, "24 12 02 04 23 34 14 01 03 13"},
    {"D2", 0, 1, "24 12 02 14 34 23 04 01 03 13"},
    {"D3", 0, 1, "02 23 24 03 01 12 04 34 14 13"},
    {"F1", 0, 1, "01 23 13 14 02 34 04 12 24 03"},
    {"F2", 0, 1, "24 12 13 02 01 34 04 23 14 03"},
    {"G1", 0, 1, "34 23 13 04 01 02 14 12 24 03"},
    {"G2", 0, 1, "12 02 13 04 01 23 14 34 03 24"},
    {"B1", 0, 2, "13 03 04 14 01 02 24 12 23 34"},
    {"A3", 1, 1, "12 02 03 24 01 34 14 23 04 13"},
    {"B2", 1, 1, "01 02 04 14 12 34 24 13 03 23"},
    {"B3", 1, 1, "12 13 03 02 23 34 14 01 04 24"},
    {"B6", 1, 1, "02 04 03 12 01 23 14 34 13 24"},
    {"F3", 1, 1, "34 23 03 13 01 24 14 02 04 12"},
    {"C", 1, 2, "02 03 14 04 23 01 24 13 34 12"},
    {"D4", 1, 2, "02 03 14 24 23 34 04 13 01 12"},
    {"G3", 1, 2, "03 24 14 04 12 01 34 13 02 23"},
    {"G4", 1, 2, "12 04 14 03 24 13 02 01 34 23"},
    {"B4", 2, 2, "24 03 04 02 01 13 14 12 23 34"},
    {"B5", 2, 2, "12 03 04 02 24 13 14 01 23 34"},
    {"F4", 2, 2, "12 23 03 24 34 04 14 02 13 01"},
};

std::vector<NamedTable> build_reference_tables() {
  std::vector<NamedTable> out;
  for (const auto& row : kReferenceRows) {
    std::istringstream is(row.syms);
    SymbolPerm perm{};
    std::string name;
    for (int pos = 0; pos < kSymbolCount; ++pos) {
      if (!(is >> name)) throw std::logic_error("reference table: short row");
      auto idx = symbol_from_name(name);
      if (!idx) throw std::logic_error("reference table: bad symbol");
      perm[static_cast<size_t>(pos)] = static_cast<std::uint8_t>(*idx);
    }
    out.push_back(NamedTable{row.label, build_table(perm, row.p, row.q)});
  }
  return out;
}

}  // namespace

const std::vector<NamedTable>& reference_tables() {
  static const std::vector<NamedTable> tables = build_reference_tables();
  return tables;
}

std::vector<NamedTable> reference_tables_for(int p, int q) {
  std::vector<NamedTable> out;
  for (const auto& named : reference_tables())
    if (named.table.p == p && named.table.q == q) out.push_back(named);
  return out;
}

IntersectionReport pairwise_intersections() {
  const auto& tables = reference_tables();
  std::vector<SolutionSet> sols;
  sols.reserve(tables.size());
  for (const auto& named : tables) sols.push_back(solution_set(named.table));

  IntersectionReport rep;
  auto intersect = [](const CellUnion& a, const CellUnion& b) {
    CellUnion out;
    for (const auto& ca : a.cells)
      for (const auto& cb : b.cells) {
        Cell meet = ca.conjoin(cb.constraints());
        if (exactmath::feasible(meet)) out.cells.push_back(std::move(meet));
      }
    return out;
  };

  for (size_t i = 0; i < tables.size(); ++i)
    for (size_t j = i + 1; j < tables.size(); ++j) {
      if (tables[i].table.p != tables[j].table.p) continue;
      ++rep.pairs_checked;
      CellUnion meet = intersect(sols[i].x_cells, sols[j].x_cells);
      if (meet.empty_list()) continue;
      rep.nonempty.push_back(PairIntersection{tables[i].label, tables[j].label,
                                              tables[i].table.p, tables[i].table.q,
                                              tables[j].table.q, std::move(meet),
                                              sols[i].y, sols[j].y});
    }

  for (size_t i = 0; i < tables.size(); ++i)
    for (size_t j = i + 1; j < tables.size(); ++j) {
      if (tables[i].table.p != tables[j].table.p) continue;
      for (size_t k = j + 1; k < tables.size(); ++k) {
        if (tables[i].table.p != tables[k].table.p) continue;
        ++rep.triples_checked;
        CellUnion meet = intersect(sols[i].x_cells, sols[j].x_cells);
        if (meet.empty_list()) continue;
        meet = intersect(meet, sols[k].x_cells);
        if (!meet.empty_list()) ++rep.nonempty_triples;
      }
    }
  return rep;
}

}  // namespace homometry::difftables
