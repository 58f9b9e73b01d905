// Binary bracelets with five black beads, their cyclic distance multisets,
// dihedral canonical forms, and the continuous counterparts on the circle
// T = [0,1): point configurations, long counts, and canonical vectors.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace homometry::bracelets {

using exactmath::QVec4;
using exactmath::Rational;

// Five distinct residues mod n, sorted ascending.
struct BinaryBracelet {
  std::uint64_t n = 0;
  std::array<std::int64_t, 5> beads{};

  friend bool operator==(const BinaryBracelet&, const BinaryBracelet&) = default;
  friend auto operator<=>(const BinaryBracelet&, const BinaryBracelet&) = default;
};

// The ten pairwise cyclic distances, sorted ascending.
using DistanceMultiset = std::array<std::int64_t, 10>;

// min(|a-b|, n-|a-b|).
std::int64_t lee_distance(std::int64_t a, std::int64_t b, std::uint64_t n);

DistanceMultiset distance_multiset(const BinaryBracelet& s);

// Lexicographically smallest of the anchored dihedral images: among all 2n
// rotations/reflections re-sorted ascending, the least tuple starting at 0.
// Only the 10 images anchored at a bead can start at 0, so those are scanned.
BinaryBracelet canonicalize(const BinaryBracelet& s);

bool are_homometric(const BinaryBracelet& a, const BinaryBracelet& b);

// All canonical 5-bead bracelets of length n, in lexicographic order.
// Orderly generation: subsets containing 0 are enumerated and a subset is
// emitted iff it equals its canonical form.
std::vector<BinaryBracelet> enumerate_bracelets(std::uint64_t n);

// Homometry classes with more than one bracelet, keyed by the shared distance
// multiset, ordered by multiset; members in canonical form, sorted.
struct HomometrySet {
  DistanceMultiset distances{};
  std::vector<BinaryBracelet> members;
};
std::vector<HomometrySet> brute_force_classes(std::uint64_t n, unsigned threads = 0);

// Five distinct rationals in [0,1), sorted ascending.
struct PointConfig {
  std::array<Rational, 5> pts{};

  // Normalizes each coordinate into [0,1), sorts, and rejects collisions.
  static PointConfig make(std::array<Rational, 5> raw);
};

// Scale a discrete bracelet onto the circle: bead/n.
PointConfig to_config(const BinaryBracelet& s);

struct CanonicalVector {
  int long_count = 0;       // 0, 1 or 2
  QVec4 x;                  // 0 < x1 < x2 < x3 < x4 < 1
};

// Number of pairwise differences exceeding 1/2 in the distinguished anchored
// representative: the unique p in {0,1,2} whose representative system is
// satisfiable, or 3 when none is.
int long_count_continuous(const PointConfig& cfg);

// The unique anchored representative for configurations with long count <= 2.
// Throws std::invalid_argument when the long count is 3.
CanonicalVector canonical_vector(const PointConfig& cfg);

// All satisfying (p, representative) pairs, distinct by vector value; used by
// the two functions above and by the uniqueness property tests.
std::vector<CanonicalVector> canonical_vector_candidates(const PointConfig& cfg);

// The ten anchored representatives (five rotations, five reflections),
// each sorted ascending with the anchor at 0 dropped into the x-vector.
std::vector<QVec4> anchored_representatives(const PointConfig& cfg);

// Continuous distance multiset (ten toroidal distances, sorted).
std::array<Rational, 10> distance_multiset_continuous(const PointConfig& cfg);

// Dihedral-and-scaling count of 5-subsets of Z_n: (C(n,5) + [5|n]*4n/5 +
// n*C(floor((n-1)/2), 2)) / 2n. Independent Burnside oracle for tests.
exactmath::BigInt burnside_bracelet_count(std::uint64_t n);

}  // namespace homometry::bracelets
