#include "bracelets.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace homometry::bracelets {

std::int64_t lee_distance(std::int64_t a, std::int64_t b, std::uint64_t n) {
  auto sn = static_cast<std::int64_t>(n);
  std::int64_t d = (a - b) % sn;
  if (d < 0) d += sn;
  return std::min(d, sn - d);
}

DistanceMultiset distance_multiset(const BinaryBracelet& s) {
  DistanceMultiset d{};
  size_t k = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      d[k++] = lee_distance(s.beads[static_cast<size_t>(i)],
                            s.beads[static_cast<size_t>(j)], s.n);
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

std::array<std::int64_t, 5> sorted_beads(std::array<std::int64_t, 5> b) {
  std::sort(b.begin(), b.end());
  return b;
}

void validate(const BinaryBracelet& s) {
  if (s.n < 5) throw std::invalid_argument("bracelet: n must be at least 5");
  for (int i = 0; i < 5; ++i) {
    std::int64_t v = s.beads[static_cast<size_t>(i)];
    if (v < 0 || v >= static_cast<std::int64_t>(s.n))
      throw std::invalid_argument("bracelet: bead out of range");
    if (i > 0 && v == s.beads[static_cast<size_t>(i - 1)])
      throw std::invalid_argument("bracelet: beads must be distinct");
  }
}

}  // namespace

BinaryBracelet canonicalize(const BinaryBracelet& s) {
  BinaryBracelet in{s.n, sorted_beads(s.beads)};
  validate(in);
  auto sn = static_cast<std::int64_t>(in.n);
  std::array<std::int64_t, 5> best{};
  bool have = false;
  for (int refl = 0; refl < 2; ++refl) {
    for (int anchor = 0; anchor < 5; ++anchor) {
      std::array<std::int64_t, 5> cand{};
      std::int64_t a = in.beads[static_cast<size_t>(anchor)];
      for (int i = 0; i < 5; ++i) {
        std::int64_t v = refl ? a - in.beads[static_cast<size_t>(i)]
                              : in.beads[static_cast<size_t>(i)] - a;
        v %= sn;
        if (v < 0) v += sn;
        cand[static_cast<size_t>(i)] = v;
      }
      std::sort(cand.begin(), cand.end());
      if (!have || cand < best) {
        best = cand;
        have = true;
      }
    }
  }
  return BinaryBracelet{in.n, best};
}

bool are_homometric(const BinaryBracelet& a, const BinaryBracelet& b) {
  return a.n == b.n && distance_multiset(a) == distance_multiset(b);
}

std::vector<BinaryBracelet> enumerate_bracelets(std::uint64_t n) {
  if (n < 5) throw std::invalid_argument("enumerate_bracelets: n must be at least 5");
  std::vector<BinaryBracelet> out;
  auto sn = static_cast<std::int64_t>(n);
  for (std::int64_t b1 = 1; b1 + 3 < sn; ++b1)
    for (std::int64_t b2 = b1 + 1; b2 + 2 < sn; ++b2)
      for (std::int64_t b3 = b2 + 1; b3 + 1 < sn; ++b3)
        for (std::int64_t b4 = b3 + 1; b4 < sn; ++b4) {
          BinaryBracelet s{n, {0, b1, b2, b3, b4}};
          if (canonicalize(s).beads == s.beads) out.push_back(s);
        }
  return out;
}

std::vector<HomometrySet> brute_force_classes(std::uint64_t n, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  auto sn = static_cast<std::int64_t>(n);
  using Groups = std::map<DistanceMultiset, std::vector<BinaryBracelet>>;

  // Partition work by the leading bead pair (0, b1).
  std::vector<Groups> partial(threads);
  auto worker = [&](unsigned w) {
    Groups& g = partial[w];
    for (std::int64_t b1 = 1 + static_cast<std::int64_t>(w); b1 + 3 < sn;
         b1 += static_cast<std::int64_t>(threads))
      for (std::int64_t b2 = b1 + 1; b2 + 2 < sn; ++b2)
        for (std::int64_t b3 = b2 + 1; b3 + 1 < sn; ++b3)
          for (std::int64_t b4 = b3 + 1; b4 < sn; ++b4) {
            BinaryBracelet s{n, {0, b1, b2, b3, b4}};
            if (canonicalize(s).beads == s.beads)
              g[distance_multiset(s)].push_back(s);
          }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  Groups merged;
  for (auto& g : partial)
    for (auto& [key, members] : g) {
      auto& dst = merged[key];
      dst.insert(dst.end(), members.begin(), members.end());
    }

  std::vector<HomometrySet> out;
  for (auto& [key, members] : merged) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    out.push_back(HomometrySet{key, std::move(members)});
  }
  return out;
}

PointConfig PointConfig::make(std::array<Rational, 5> raw) {
  for (auto& p : raw) {
    // Reduce into [0,1) exactly: subtract floor.
    exactmath::BigInt fl = exactmath::floor_int(p);
    p -= Rational(fl, exactmath::BigInt(1));
  }
  std::sort(raw.begin(), raw.end());
  for (int i = 1; i < 5; ++i)
    if (raw[static_cast<size_t>(i)] == raw[static_cast<size_t>(i - 1)])
      throw std::invalid_argument("PointConfig: points must be distinct");
  return PointConfig{raw};
}

PointConfig to_config(const BinaryBracelet& s) {
  BinaryBracelet in{s.n, sorted_beads(s.beads)};
  validate(in);
  std::array<Rational, 5> pts;
  for (int i = 0; i < 5; ++i)
    pts[static_cast<size_t>(i)] =
        Rational(exactmath::BigInt(in.beads[static_cast<size_t>(i)]),
                 exactmath::BigInt(static_cast<long>(in.n)));
  return PointConfig::make(pts);
}

std::vector<QVec4> anchored_representatives(const PointConfig& cfg) {
  std::vector<QVec4> reps;
  reps.reserve(10);
  for (int refl = 0; refl < 2; ++refl) {
    for (int anchor = 0; anchor < 5; ++anchor) {
      const Rational& a = cfg.pts[static_cast<size_t>(anchor)];
      std::array<Rational, 5> im;
      for (int i = 0; i < 5; ++i) {
        Rational v = refl ? a - cfg.pts[static_cast<size_t>(i)]
                          : cfg.pts[static_cast<size_t>(i)] - a;
        exactmath::BigInt fl = exactmath::floor_int(v);
        im[static_cast<size_t>(i)] = v - Rational(fl, exactmath::BigInt(1));
      }
      std::sort(im.begin(), im.end());
      assert(im[0].sign() == 0);
      QVec4 x;
      for (int i = 0; i < 4; ++i) x[i] = im[static_cast<size_t>(i + 1)];
      reps.push_back(std::move(x));
    }
  }
  return reps;
}

namespace {

const Rational kHalf{1, 2};

// The anchored-representative system for long count p (p <= 2): the long
// count inequalities plus the canonical-ordering tie-break. Positivity and
// sortedness hold by construction of the representative.
bool satisfies_system(const QVec4& x, int p) {
  switch (p) {
    case 0:
      if (!(x[3] <= kHalf)) return false;
      break;
    case 1:
      if (!(x[3] > kHalf && x[2] <= kHalf && x[3] - x[0] <= kHalf)) return false;
      break;
    case 2:
      if (!(x[2] > kHalf && x[1] < kHalf && x[3] - x[0] <= kHalf)) return false;
      break;
    default:
      return false;
  }
  if (p <= 1) {
    Rational rhs = x[3] - x[2];
    if (!(x[0] <= rhs)) return false;
    if (x[0] == rhs && !(x[1] - x[0] <= x[2] - x[1])) return false;
  } else {
    Rational rhs = Rational(1) - x[3];
    if (!(x[0] <= rhs)) return false;
    if (x[0] == rhs && !(x[1] - x[0] <= x[3] - x[2])) return false;
  }
  return true;
}

}  // namespace

std::vector<CanonicalVector> canonical_vector_candidates(const PointConfig& cfg) {
  std::vector<CanonicalVector> found;
  for (const QVec4& x : anchored_representatives(cfg)) {
    for (int p = 0; p <= 2; ++p) {
      if (!satisfies_system(x, p)) continue;
      bool dup = false;
      for (const auto& f : found)
        if (f.long_count == p && f.x == x) dup = true;
      if (!dup) found.push_back(CanonicalVector{p, x});
    }
  }
  return found;
}

int long_count_continuous(const PointConfig& cfg) {
  auto cands = canonical_vector_candidates(cfg);
  if (cands.empty()) return 3;
  if (cands.size() > 1)
    throw std::logic_error("long_count_continuous: representative not unique");
  return cands.front().long_count;
}

CanonicalVector canonical_vector(const PointConfig& cfg) {
  auto cands = canonical_vector_candidates(cfg);
  if (cands.empty())
    throw std::invalid_argument("canonical_vector: configuration has long count 3");
  if (cands.size() > 1)
    throw std::logic_error("canonical_vector: representative not unique");
  return cands.front();
}

std::array<Rational, 10> distance_multiset_continuous(const PointConfig& cfg) {
  std::array<Rational, 10> d;
  size_t k = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      Rational diff = cfg.pts[static_cast<size_t>(j)] - cfg.pts[static_cast<size_t>(i)];
      d[k++] = std::min(diff, Rational(1) - diff);
    }
  std::sort(d.begin(), d.end());
  return d;
}

exactmath::BigInt burnside_bracelet_count(std::uint64_t n) {
  using exactmath::BigInt;
  BigInt nz(static_cast<unsigned long>(n));
  BigInt choose5;
  mpz_bin_uiui(choose5.get_mpz_t(), static_cast<unsigned long>(n), 5);
  BigInt total = choose5;
  if (n % 5 == 0) total += 4 * (nz / 5);
  BigInt axis;
  mpz_bin_uiui(axis.get_mpz_t(), static_cast<unsigned long>((n - 1) / 2), 2);
  total += nz * axis;
  BigInt denom = 2 * nz;
  assert(total % denom == 0);
  return total / denom;
}

}  // namespace homometry::bracelets
