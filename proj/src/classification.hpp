// The seven parametric families of nontrivial homometry classes of 5-bead
// bracelets: index sets, member formulas, per-length enumeration, and
// reverse lookup from a member set to its (type, parameters) tag.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bracelets.hpp"

namespace homometry::classification {

enum class ClassType { A, B, C, D, E, F, G };

inline constexpr std::array<ClassType, 7> kAllTypes = {
    ClassType::A, ClassType::B, ClassType::C, ClassType::D,
    ClassType::E, ClassType::F, ClassType::G};

// Smallest length carrying the type's lattice: n = scale_factor * m.
int scale_factor(ClassType t);
char type_letter(ClassType t);
std::optional<ClassType> type_from_letter(char c);

// Type A classes are indexed by (i, j); the others by i alone.
struct ClassParams {
  std::int64_t i = 0;
  std::optional<std::int64_t> j;

  friend bool operator==(const ClassParams&, const ClassParams&) = default;
  friend auto operator<=>(const ClassParams&, const ClassParams&) = default;
};

// Valid parameters for the type at scale m, in lexicographic order. Bounds
// are evaluated with exact integer arithmetic; exclusion points that are not
// integers are skipped silently.
std::vector<ClassParams> index_set(ClassType t, std::int64_t m);

struct HomometryClass {
  std::uint64_t n = 0;
  ClassType type = ClassType::A;
  std::int64_t m = 0;
  ClassParams params;
  // Two members (three for Type E), canonicalized and sorted.
  std::vector<bracelets::BinaryBracelet> members;
};

// Instantiates the member formulas at (t, n = scale*m, params); members are
// canonicalized immediately. Throws std::invalid_argument when a formula
// yields coincident beads or coincident members (parameters outside the
// index set).
HomometryClass instantiate(ClassType t, std::uint64_t n, const ClassParams& params);

// Every class of length n, over all types with scale dividing n, ordered by
// (type, params). Asserts global pairwise disjointness of member sets.
std::vector<HomometryClass> classes_for_n(std::uint64_t n);

// Looks up the class tag of a raw member list (members are canonicalized and
// sorted before comparison). Returns nullopt when no class of length n has
// exactly this member set.
std::optional<HomometryClass> lookup_type(
    const std::vector<bracelets::BinaryBracelet>& members, std::uint64_t n);

}  // namespace homometry::classification
