#include "classification.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace homometry::classification {

int scale_factor(ClassType t) {
  switch (t) {
    case ClassType::A: return 2;
    case ClassType::B: return 5;
    case ClassType::C: return 6;
    case ClassType::D: return 6;
    case ClassType::E: return 6;
    case ClassType::F: return 8;
    case ClassType::G: return 20;
  }
  throw std::logic_error("scale_factor: bad type");
}

char type_letter(ClassType t) {
  return static_cast<char>('A' + static_cast<int>(t));
}

std::optional<ClassType> type_from_letter(char c) {
  if (c < 'A' || c > 'G') return std::nullopt;
  return static_cast<ClassType>(c - 'A');
}

std::vector<ClassParams> index_set(ClassType t, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("index_set: m must be positive");
  std::vector<ClassParams> out;
  switch (t) {
    case ClassType::A:
      // 1 <= i, j < m/2, i != j; when j = m/3 only i = m/6 survives.
      for (std::int64_t i = 1; 2 * i < m; ++i)
        for (std::int64_t j = 1; 2 * j < m; ++j) {
          if (i == j) continue;
          if (m % 3 == 0 && j == m / 3) {
            if (m % 6 != 0 || i != m / 6) continue;
          }
          out.push_back(ClassParams{i, j});
        }
      break;
    case ClassType::B:
      // 1 <= i <= 5m/2, excluding m/2, m, 3m/2, 2m.
      for (std::int64_t i = 1; 2 * i <= 5 * m; ++i) {
        if (2 * i == m || i == m || 2 * i == 3 * m || i == 2 * m) continue;
        out.push_back(ClassParams{i, std::nullopt});
      }
      break;
    case ClassType::C:
      for (std::int64_t i = 1; 2 * i <= m; ++i)
        out.push_back(ClassParams{i, std::nullopt});
      break;
    case ClassType::D:
      // 1 <= i < 3m/2, excluding m/2 and m.
      for (std::int64_t i = 1; 2 * i < 3 * m; ++i) {
        if (2 * i == m || i == m) continue;
        out.push_back(ClassParams{i, std::nullopt});
      }
      break;
    case ClassType::E:
      for (std::int64_t i = 1; 2 * i < m; ++i)
        out.push_back(ClassParams{i, std::nullopt});
      break;
    case ClassType::F:
      for (std::int64_t i = 1; i < 4 * m; ++i) {
        if (i == m || i == 2 * m || i == 3 * m) continue;
        out.push_back(ClassParams{i, std::nullopt});
      }
      break;
    case ClassType::G:
      for (std::int64_t i = 1; i <= 4; ++i)
        out.push_back(ClassParams{i, std::nullopt});
      break;
  }
  return out;
}

namespace {

using bracelets::BinaryBracelet;

BinaryBracelet member_from(std::uint64_t n, std::array<std::int64_t, 5> beads) {
  auto sn = static_cast<std::int64_t>(n);
  for (auto& b : beads) {
    b %= sn;
    if (b < 0) b += sn;
  }
  std::sort(beads.begin(), beads.end());
  for (int k = 1; k < 5; ++k)
    if (beads[static_cast<size_t>(k)] == beads[static_cast<size_t>(k - 1)])
      throw std::invalid_argument("instantiate: coincident beads (parameters outside index set)");
  return bracelets::canonicalize(BinaryBracelet{n, beads});
}

std::vector<std::array<std::int64_t, 5>> member_formulas(ClassType t, std::int64_t m,
                                                         const ClassParams& p) {
  std::int64_t i = p.i;
  switch (t) {
    case ClassType::A: {
      if (!p.j) throw std::invalid_argument("instantiate: Type A needs (i, j)");
      std::int64_t j = *p.j;
      return {{0, i, i + j, m + i - j, m}, {0, m + i, i + j, m + i - j, m}};
    }
    case ClassType::B:
      return {{0, i, m, 2 * m, 2 * m + i}, {0, i, m, m + i, 3 * m}};
    case ClassType::C:
      return {{0, m + i, 2 * m, 2 * m + i, 4 * m}, {0, 2 * m, 2 * m + i, 3 * m + i, 4 * m}};
    case ClassType::D:
      return {{i, m - i, 2 * m, 2 * m + i, 3 * m}, {0, i, m - i, 2 * m + i, 5 * m}};
    case ClassType::E:
      return {{0, i, m + i, 2 * m + i, 3 * m},
              {0, i, m, 2 * m, 3 * m + i},
              {0, m - i, m, 2 * m, 4 * m - i}};
    case ClassType::F:
      return {{0, i, m, 2 * m + i, 4 * m}, {0, i, m + i, 2 * m, 4 * m + i}};
    case ClassType::G:
      // the four sporadic length-20 classes, scaled by m
      return {{0, 5 * m, 8 * i * m, (15 + 4 * i) * m, (5 - 4 * i) * m},
              {0, 5 * m, 4 * i * m, (15 + 8 * i) * m, (15 - 4 * i) * m}};
  }
  throw std::logic_error("member_formulas: bad type");
}

}  // namespace

HomometryClass instantiate(ClassType t, std::uint64_t n, const ClassParams& params) {
  auto scale = static_cast<std::uint64_t>(scale_factor(t));
  if (n % scale != 0)
    throw std::invalid_argument("instantiate: scale factor does not divide n");
  auto m = static_cast<std::int64_t>(n / scale);

  HomometryClass cls;
  cls.n = n;
  cls.type = t;
  cls.m = m;
  cls.params = params;
  for (const auto& formula : member_formulas(t, m, params))
    cls.members.push_back(member_from(n, formula));
  std::sort(cls.members.begin(), cls.members.end());
  for (size_t k = 1; k < cls.members.size(); ++k)
    if (cls.members[k] == cls.members[k - 1])
      throw std::invalid_argument("instantiate: coincident members (parameters outside index set)");
  for (size_t k = 1; k < cls.members.size(); ++k)
    if (!bracelets::are_homometric(cls.members[0], cls.members[k]))
      throw std::logic_error("instantiate: members are not homometric");
  return cls;
}

std::vector<HomometryClass> classes_for_n(std::uint64_t n) {
  std::vector<HomometryClass> out;
  for (ClassType t : kAllTypes) {
    auto scale = static_cast<std::uint64_t>(scale_factor(t));
    if (n % scale != 0) continue;
    auto m = static_cast<std::int64_t>(n / scale);
    for (const auto& params : index_set(t, m))
      out.push_back(instantiate(t, n, params));
  }
  // Distinct (type, params) must yield disjoint member sets; a violation
  // means an implementation or index-set bug.
  std::set<BinaryBracelet> seen;
  for (const auto& cls : out)
    for (const auto& mem : cls.members)
      if (!seen.insert(mem).second)
        throw std::logic_error("classes_for_n: member sets are not disjoint");
  return out;
}

std::optional<HomometryClass> lookup_type(
    const std::vector<bracelets::BinaryBracelet>& members, std::uint64_t n) {
  std::vector<BinaryBracelet> key;
  key.reserve(members.size());
  for (const auto& mem : members) {
    if (mem.n != n) throw std::invalid_argument("lookup_type: member length mismatch");
    key.push_back(bracelets::canonicalize(mem));
  }
  std::sort(key.begin(), key.end());
  for (const auto& cls : classes_for_n(n))
    if (cls.members == key) return cls;
  return std::nullopt;
}

}  // namespace homometry::classification
