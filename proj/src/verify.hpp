#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "classification.hpp"

namespace homometry::verify {

// Cross-checks, for every n in [n_lo, n_hi]: the brute-force homometry
// classes, the instantiated typed classes, the generating-function count,
// and the refined pair/triple counts all agree.
struct CrossCheckReport {
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;
  std::uint64_t classes_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

CrossCheckReport cross_check(std::uint64_t n_lo, std::uint64_t n_hi,
                             unsigned threads = 0);

// Sweeps every nontrivial class up to n_max and tallies the unordered pair
// of long counts over all member pairs; anything outside the five admissible
// pairs, or any nontrivial class below n = 10, is a violation.
struct LongCountReport {
  std::uint64_t n_max = 0;
  std::map<std::pair<int, int>, std::uint64_t> pair_counts;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

LongCountReport check_long_count_pairs(std::uint64_t n_max, unsigned threads = 0);

// Applies every unit multiplication u in [2, n/2], gcd(u, n) = 1 to every
// typed class up to n_max and checks the image class keeps the type letter.
struct UnActionReport {
  std::uint64_t n_max = 0;
  std::uint64_t actions_checked = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

UnActionReport un_action_experiment(std::uint64_t n_max);

}  // namespace homometry::verify
