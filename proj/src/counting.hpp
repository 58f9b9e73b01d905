// Closed-form generating functions for the number of nontrivial homometry
// classes and exact coefficient extraction via the linear recurrences of the
// expanded denominators. All counts are arbitrary-precision integers.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "classification.hpp"
#include "rational.hpp"

namespace homometry::counting {

using exactmath::BigInt;

// One simple term P(x) / prod (1 - x^d)^e with integer numerator.
struct GFTerm {
  std::vector<BigInt> numerator;             // coefficient of x^k at index k
  std::vector<std::pair<int, int>> factors;  // (d, e) pairs of the denominator
  std::string display;                       // e.g. "2x^10/((1-x^2)(1-x^4)^2)"
};

// A sum of simple terms.
struct RationalGF {
  std::vector<GFTerm> terms;
};

// coefficient of x^n in the series expansion (exact).
BigInt coefficient(const RationalGF& gf, std::uint64_t n);

// The closed form counting classes of one type over all lengths; Type A
// carries two terms (the square lattice term and the subtracted
// triple-overlap correction).
RationalGF type_gf(classification::ClassType t);

// The five displayed terms of the total class-count series, in display order.
RationalGF closed_form_series();

// Human-readable rendering of closed_form_series(), one term per line.
std::string gf_show_text();

// h_n: number of nontrivial homometry classes among length-n bracelets.
BigInt h_coefficient(std::uint64_t n);

// (pairs, triples): triples are the classes of three bracelets; their series
// is the Type E term. pairs = h_n - triples.
std::pair<BigInt, BigInt> refined_counts(std::uint64_t n);

// |index_set(t, m)| by direct enumeration; must match the coefficient of
// x^(l*m) in type_gf(t).
BigInt index_set_count(classification::ClassType t, std::uint64_t m);

// Streams coefficients c_lo, c_lo+1, ... of a RationalGF in O(deg) memory.
class CoefficientStream {
 public:
  explicit CoefficientStream(RationalGF gf);
  // Coefficient at the current index (starts at 0), then advances.
  BigInt next();
  std::uint64_t index() const { return idx_; }

 private:
  struct TermState {
    std::vector<BigInt> q;       // expanded denominator, q[0] == 1
    std::vector<BigInt> window;  // last deg(q) coefficients, ring buffer
    std::vector<BigInt> p;       // numerator
  };
  std::vector<TermState> state_;
  std::uint64_t idx_ = 0;
};

}  // namespace homometry::counting
