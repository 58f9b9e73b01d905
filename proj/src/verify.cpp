#include "verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bracelets.hpp"
#include "counting.hpp"

namespace homometry::verify {

using bracelets::BinaryBracelet;
using bracelets::HomometrySet;
using classification::HomometryClass;
using exactmath::BigInt;

namespace {

std::string bracelet_str(const BinaryBracelet& b) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << b.beads[static_cast<size_t>(i)];
  os << ')';
  return os.str();
}

std::string members_str(const std::vector<BinaryBracelet>& members) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < members.size(); ++i) os << (i ? " " : "") << bracelet_str(members[i]);
  os << '}';
  return os.str();
}

}  // namespace

CrossCheckReport cross_check(std::uint64_t n_lo, std::uint64_t n_hi, unsigned threads) {
  CrossCheckReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    auto complain = [&](const std::string& what) {
      rep.mismatches.push_back("n=" + std::to_string(n) + ": " + what);
    };

    std::vector<HomometrySet> oracle = bracelets::brute_force_classes(n, threads);
    std::vector<HomometryClass> typed = classification::classes_for_n(n);
    rep.classes_checked += oracle.size();

    std::set<std::vector<BinaryBracelet>> oracle_sets, typed_sets;
    for (const auto& g : oracle) oracle_sets.insert(g.members);
    for (const auto& c : typed) typed_sets.insert(c.members);
    if (oracle_sets.size() != oracle.size()) complain("duplicate brute-force classes");
    if (typed_sets.size() != typed.size()) complain("duplicate typed classes");
    if (oracle_sets != typed_sets) {
      for (const auto& m : oracle_sets)
        if (!typed_sets.count(m)) {
          complain("brute-force class missing from typed classes: " + members_str(m));
          break;
        }
      for (const auto& m : typed_sets)
        if (!oracle_sets.count(m)) {
          complain("typed class missing from brute force: " + members_str(m));
          break;
        }
    }

    BigInt h = counting::h_coefficient(n);
    if (h != BigInt(static_cast<unsigned long>(oracle.size())))
      complain("series coefficient " + h.get_str() + " != " +
               std::to_string(oracle.size()) + " brute-force classes");

    std::uint64_t pairs = 0, triples = 0;
    for (const auto& g : oracle) {
      if (g.members.size() == 2)
        ++pairs;
      else if (g.members.size() == 3)
        ++triples;
      else
        complain("class of unexpected size " + std::to_string(g.members.size()));
    }
    auto [rp, rt] = counting::refined_counts(n);
    if (rp != BigInt(static_cast<unsigned long>(pairs)) ||
        rt != BigInt(static_cast<unsigned long>(triples)))
      complain("refined counts (" + rp.get_str() + "," + rt.get_str() + ") != observed (" +
               std::to_string(pairs) + "," + std::to_string(triples) + ")");
  }
  return rep;
}

LongCountReport check_long_count_pairs(std::uint64_t n_max, unsigned threads) {
  LongCountReport rep;
  rep.n_max = n_max;
  const std::set<std::pair<int, int>> allowed = {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  for (std::uint64_t n = 5; n <= n_max; ++n) {
    auto groups = bracelets::brute_force_classes(n, threads);
    if (n < 10 && !groups.empty()) {
      rep.violations.push_back("n=" + std::to_string(n) + ": nontrivial class below n=10");
      continue;
    }
    for (const auto& g : groups) {
      std::vector<int> counts;
      counts.reserve(g.members.size());
      bool bad = false;
      for (const auto& b : g.members) {
        try {
          counts.push_back(bracelets::canonical_vector(bracelets::to_config(b)).long_count);
        } catch (const std::exception& e) {
          rep.violations.push_back("n=" + std::to_string(n) + ": member " + bracelet_str(b) +
                                   " has no canonical vector: " + e.what());
          bad = true;
        }
      }
      if (bad) continue;
      for (size_t i = 0; i < counts.size(); ++i)
        for (size_t j = i + 1; j < counts.size(); ++j) {
          std::pair<int, int> key{std::min(counts[i], counts[j]),
                                  std::max(counts[i], counts[j])};
          ++rep.pair_counts[key];
          if (!allowed.count(key))
            rep.violations.push_back("n=" + std::to_string(n) + ": long-count pair (" +
                                     std::to_string(key.first) + "," +
                                     std::to_string(key.second) + ") in " +
                                     members_str(g.members));
        }
    }
  }
  return rep;
}

UnActionReport un_action_experiment(std::uint64_t n_max) {
  UnActionReport rep;
  rep.n_max = n_max;
  for (std::uint64_t n = 10; n <= n_max; ++n) {
    auto typed = classification::classes_for_n(n);
    if (typed.empty()) continue;
    for (std::int64_t u = 2; u <= static_cast<std::int64_t>(n / 2); ++u) {
      if (std::gcd(u, static_cast<std::int64_t>(n)) != 1) continue;
      for (const auto& cls : typed) {
        ++rep.actions_checked;
        std::vector<BinaryBracelet> image;
        image.reserve(cls.members.size());
        for (const auto& b : cls.members) {
          BinaryBracelet m{b.n, b.beads};
          for (auto& bead : m.beads) bead = bead * u % static_cast<std::int64_t>(n);
          std::sort(m.beads.begin(), m.beads.end());
          image.push_back(bracelets::canonicalize(m));
        }
        std::sort(image.begin(), image.end());
        auto prefix = [&] {
          return "n=" + std::to_string(n) + " u=" + std::to_string(u) + " type " +
                 std::string(1, classification::type_letter(cls.type)) + " class " +
                 members_str(cls.members);
        };
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
          rep.counterexamples.push_back(prefix() + ": image members collide");
          continue;
        }
        auto found = classification::lookup_type(image, n);
        if (!found) {
          rep.counterexamples.push_back(prefix() + ": image " + members_str(image) +
                                        " is not a typed class");
        } else if (found->type != cls.type) {
          rep.counterexamples.push_back(prefix() + ": image has type " +
                                        std::string(1, classification::type_letter(found->type)));
        }
      }
    }
  }
  return rep;
}

}  // namespace homometry::verify
