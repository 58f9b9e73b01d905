// Difference tables: staircase tables of the ten pairwise difference symbols
// under a permutation, with bars marking complemented entries; the exact
// constraint systems they induce on canonical vectors; the antichain search
// for minimal tables over all 10! permutations; and pairwise intersections
// of the known minimal solution sets.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exactmath.hpp"

namespace homometry::difftables {

using exactmath::AffineMap4;
using exactmath::Cell;
using exactmath::CellUnion;
using exactmath::QVec4;
using exactmath::Rational;

// The ten difference symbols ij (0 <= i < j <= 4), meaning x_j - x_i with
// x_0 = 0, in the fixed reading order 01 02 03 04 12 13 14 23 24 34. The
// same order indexes staircase positions: row (first index) by column
// (second index).
enum class DiffSymbol : std::uint8_t {
  S01, S02, S03, S04, S12, S13, S14, S23, S24, S34
};

inline constexpr int kSymbolCount = 10;

// (i, j) endpoints of a symbol or position index.
std::pair<int, int> symbol_endpoints(int idx);
int symbol_index(int i, int j);
std::string symbol_name(int idx);                  // "01".."34"
std::optional<int> symbol_from_name(std::string_view name);

// The linear form x_j - x_i as a QVec4 over (x1..x4).
QVec4 symbol_form(int idx);

// Symbols that are long for canonical vectors of long count p:
// none for p = 0, {04} for p = 1, {03, 04} for p = 2.
std::vector<DiffSymbol> p_long_symbols(int p);

// A permutation of the ten symbols: perm[pos] = symbol placed at position
// pos (both in reading order).
using SymbolPerm = std::array<std::uint8_t, 10>;

struct TableEntry {
  DiffSymbol symbol = DiffSymbol::S01;
  bool barred = false;
};

struct DifferenceTable {
  int p = 0, q = 0;
  SymbolPerm perm{};
  std::array<TableEntry, 10> entries{};  // by position, reading order

  friend bool operator==(const DifferenceTable&, const DifferenceTable&) = default;
};

// Builds the table for (p, q): places perm over the staircase, bars each
// p-long symbol wherever it lands, then toggles the bar at each position
// whose original symbol is q-long (positions of 04, and of 03 when q = 2).
// Valid pairs: (0,1), (0,2), (1,1), (1,2), (2,2).
DifferenceTable build_table(const SymbolPerm& perm, int p, int q);

// The affine map reading off the partner vector: coordinate r is the
// resolved form of the entry at position (0, r+1).
AffineMap4 y_map(const DifferenceTable& t);

// The full solution-set constraints: positivity, long-count and canonical-
// ordering inequalities for x (long count p), the six staircase sum
// equations, the same long-count/ordering system for y(x) (long count q),
// and the noncongruence split (x != y for p < q, x < y lexicographically
// for p = q). Conditional orderings and the noncongruence condition are
// expanded into a union of cells; infeasible cells are dropped.
CellUnion constraint_cells(const DifferenceTable& t);

struct SolutionSet {
  DifferenceTable table;
  CellUnion x_cells;
  AffineMap4 y;

  bool empty() const { return x_cells.empty_list(); }
};

SolutionSet solution_set(const DifferenceTable& t);

// Whether a's solution pairs {(x, y_a(x))} are all solution pairs of b:
// a's x-set is contained in b's and the two y maps agree on a's x-set.
bool xy_subset(const SolutionSet& a, const SolutionSet& b);

// Sound emptiness prune: the table is provably empty when some finally
// unbarred entry hk sits weakly southwest of a finally unbarred entry ij
// with h <= i < j <= k and (h,k) != (i,j). The six sums force the southwest
// resolved value strictly below the northeast one while 0 < x1 < ... < x4
// forces x_k - x_h >= x_j - x_i, a contradiction when neither is barred.
bool southwest_prune(const DifferenceTable& t);

// Lexicographic rank of a permutation among all 10! image tuples, and back.
std::uint32_t perm_rank(const SymbolPerm& perm);
SymbolPerm perm_unrank(std::uint32_t rank);
inline constexpr std::uint32_t kPermCount = 3628800;  // 10!

// The i-th draw of the seeded pseudo-random sample (independent of the other
// draws, so the sample is chunkable across threads).
SymbolPerm sampled_perm(std::uint64_t seed, std::uint64_t index);

struct MinimalTablesOptions {
  bool full = false;                  // full: all 10! in lex order
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 1;
  std::string checkpoint_path;        // full mode only; empty = no checkpoints
  std::uint64_t checkpoint_every = 100000;
  unsigned threads = 0;               // 0 = hardware concurrency
  // Testing hook: process only ranks/draws in [begin, end) when end > 0.
  std::uint64_t range_begin = 0;
  std::uint64_t range_end = 0;
  // Optional cooperative interruption (tested by the resume tests): when it
  // returns true, full mode stops after the current chunk, leaving a valid
  // checkpoint behind.
  std::function<bool()> interrupt;
};

struct MinimalTablesResult {
  int p = 0, q = 0;
  std::vector<SolutionSet> antichain;  // sorted by permutation rank
  std::uint64_t processed = 0;         // permutations examined this run
  bool complete = true;                // false when interrupted mid-range
};

// Algorithm: keep an antichain under xy_subset; skip a table subsumed by a
// member, otherwise insert it and evict members it subsumes. SAMPLED mode
// processes the known minimal tables for (p, q) first, then sample_count
// seeded draws. FULL mode walks ranks in lexicographic order with
// checkpoint/resume. The result is canonical up to solution-set equality.
MinimalTablesResult minimal_tables(int p, int q, const MinimalTablesOptions& opts);

// The reference minimal tables, keyed by label (A1..G4); 22 in total.
struct NamedTable {
  std::string label;
  DifferenceTable table;
};
const std::vector<NamedTable>& reference_tables();
std::vector<NamedTable> reference_tables_for(int p, int q);

struct PairIntersection {
  std::string label_a, label_b;
  int p = 0, qa = 0, qb = 0;
  CellUnion x_cells;     // nonempty intersection of the two x-sets
  AffineMap4 ya, yb;
};

// Intersections of the x-sets of all unordered pairs of distinct reference
// tables sharing the first long count p, plus a same-p triple emptiness
// sweep. Pairs with empty intersections are counted, not listed.
struct IntersectionReport {
  std::vector<PairIntersection> nonempty;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;
  std::uint64_t nonempty_triples = 0;
};
IntersectionReport pairwise_intersections();

}  // namespace homometry::difftables
