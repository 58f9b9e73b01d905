#include "counting.hpp"

#include <stdexcept>

namespace homometry::counting {

namespace {

GFTerm make_term(std::vector<std::pair<int, BigInt>> num,
                 std::vector<std::pair<int, int>> factors, std::string display) {
  GFTerm t;
  int deg = 0;
  for (const auto& [k, c] : num) deg = std::max(deg, k);
  t.numerator.assign(static_cast<size_t>(deg) + 1, BigInt(0));
  for (const auto& [k, c] : num) t.numerator[static_cast<size_t>(k)] = c;
  t.factors = std::move(factors);
  t.display = std::move(display);
  return t;
}

// prod (1 - x^d)^e expanded; q[0] == 1.
std::vector<BigInt> expand_denominator(const std::vector<std::pair<int, int>>& factors) {
  std::vector<BigInt> q{BigInt(1)};
  for (const auto& [d, e] : factors) {
    for (int rep = 0; rep < e; ++rep) {
      std::vector<BigInt> next(q.size() + static_cast<size_t>(d), BigInt(0));
      for (size_t k = 0; k < q.size(); ++k) {
        next[k] += q[k];
        next[k + static_cast<size_t>(d)] -= q[k];
      }
      q = std::move(next);
    }
  }
  return q;
}

BigInt term_coefficient(const GFTerm& t, std::uint64_t n) {
  std::vector<BigInt> q = expand_denominator(t.factors);
  size_t deg = q.size() - 1;
  std::vector<BigInt> window(deg, BigInt(0));  // c_{k-1}, ..., c_{k-deg} cyclically
  BigInt ck(0);
  for (std::uint64_t k = 0; k <= n; ++k) {
    ck = k < t.numerator.size() ? t.numerator[static_cast<size_t>(k)] : BigInt(0);
    for (size_t j = 1; j <= deg && j <= k; ++j)
      ck -= q[j] * window[(k - j) % deg];
    if (k == n) break;
    window[k % deg] = ck;
  }
  return ck;
}

const char* kDisplayA1 = "2x^10/((1-x^2)(1-x^4)^2)";
const char* kDisplayA2 = "-3x^18/((1-x^6)(1-x^12))";
const char* kDisplayB = "(x^10+4x^15)/((1-x^5)(1-x^10))";
const char* kDisplayC = "x^12/((1-x^6)(1-x^12))";
const char* kDisplayD = "3x^18/((1-x^6)(1-x^12))";
const char* kDisplayE = "x^18/((1-x^6)(1-x^12))";
const char* kDisplayF = "4x^16/(1-x^8)^2";
const char* kDisplayG = "4x^20/(1-x^20)";
const char* kDisplayCDE = "(x^12+x^18)/((1-x^6)(1-x^12))";

}  // namespace

BigInt coefficient(const RationalGF& gf, std::uint64_t n) {
  BigInt sum(0);
  for (const auto& t : gf.terms) sum += term_coefficient(t, n);
  return sum;
}

RationalGF type_gf(classification::ClassType t) {
  using classification::ClassType;
  RationalGF gf;
  switch (t) {
    case ClassType::A:
      gf.terms.push_back(make_term({{10, BigInt(2)}}, {{2, 1}, {4, 2}}, kDisplayA1));
      gf.terms.push_back(make_term({{18, BigInt(-3)}}, {{6, 1}, {12, 1}}, kDisplayA2));
      break;
    case ClassType::B:
      gf.terms.push_back(
          make_term({{10, BigInt(1)}, {15, BigInt(4)}}, {{5, 1}, {10, 1}}, kDisplayB));
      break;
    case ClassType::C:
      gf.terms.push_back(make_term({{12, BigInt(1)}}, {{6, 1}, {12, 1}}, kDisplayC));
      break;
    case ClassType::D:
      gf.terms.push_back(make_term({{18, BigInt(3)}}, {{6, 1}, {12, 1}}, kDisplayD));
      break;
    case ClassType::E:
      gf.terms.push_back(make_term({{18, BigInt(1)}}, {{6, 1}, {12, 1}}, kDisplayE));
      break;
    case ClassType::F:
      gf.terms.push_back(make_term({{16, BigInt(4)}}, {{8, 2}}, kDisplayF));
      break;
    case ClassType::G:
      gf.terms.push_back(make_term({{20, BigInt(4)}}, {{20, 1}}, kDisplayG));
      break;
  }
  return gf;
}

RationalGF closed_form_series() {
  RationalGF gf;
  gf.terms.push_back(make_term({{10, BigInt(2)}}, {{2, 1}, {4, 2}}, kDisplayA1));
  gf.terms.push_back(
      make_term({{10, BigInt(1)}, {15, BigInt(4)}}, {{5, 1}, {10, 1}}, kDisplayB));
  gf.terms.push_back(
      make_term({{12, BigInt(1)}, {18, BigInt(1)}}, {{6, 1}, {12, 1}}, kDisplayCDE));
  gf.terms.push_back(make_term({{16, BigInt(4)}}, {{8, 2}}, kDisplayF));
  gf.terms.push_back(make_term({{20, BigInt(4)}}, {{20, 1}}, kDisplayG));
  return gf;
}

std::string gf_show_text() {
  RationalGF gf = closed_form_series();
  std::string out = "H(x) = " + gf.terms[0].display + "\n";
  for (size_t i = 1; i < gf.terms.size(); ++i)
    out += "      + " + gf.terms[i].display + "\n";
  return out;
}

BigInt h_coefficient(std::uint64_t n) { return coefficient(closed_form_series(), n); }

std::pair<BigInt, BigInt> refined_counts(std::uint64_t n) {
  BigInt h = h_coefficient(n);
  BigInt triples = coefficient(type_gf(classification::ClassType::E), n);
  return {h - triples, triples};
}

BigInt index_set_count(classification::ClassType t, std::uint64_t m) {
  return BigInt(static_cast<unsigned long>(
      classification::index_set(t, static_cast<std::int64_t>(m)).size()));
}

CoefficientStream::CoefficientStream(RationalGF gf) {
  for (auto& t : gf.terms) {
    TermState s;
    s.q = expand_denominator(t.factors);
    s.window.assign(s.q.size() - 1, BigInt(0));
    s.p = std::move(t.numerator);
    state_.push_back(std::move(s));
  }
}

BigInt CoefficientStream::next() {
  BigInt sum(0);
  for (auto& s : state_) {
    size_t deg = s.q.size() - 1;
    BigInt ck = idx_ < s.p.size() ? s.p[static_cast<size_t>(idx_)] : BigInt(0);
    for (size_t j = 1; j <= deg && j <= idx_; ++j)
      ck -= s.q[j] * s.window[(idx_ - j) % deg];
    s.window[idx_ % deg] = ck;
    sum += ck;
  }
  ++idx_;
  return sum;
}

}  // namespace homometry::counting
