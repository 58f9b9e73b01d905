// Exact rational scalars and length-4 rational vectors. All coordinate
// arithmetic in this library goes through these types; no floating point.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homometry::exactmath {

using BigInt = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (maintained by GMP's canonical form).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q" with arbitrary-precision parts.
  static Rational from_string(std::string_view s);

  const mpq_class& raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  // "p" when the denominator is 1, otherwise "p/q", lowest terms.
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// floor(r) as a BigInt (exact; used for integer index-set bounds).
BigInt floor_int(const Rational& r);
BigInt ceil_int(const Rational& r);

// Fixed-length vector of four rationals: a point or a linear form over
// (x1, x2, x3, x4).
struct QVec4 {
  std::array<Rational, 4> c{};

  Rational& operator[](int i) { return c[static_cast<size_t>(i)]; }
  const Rational& operator[](int i) const { return c[static_cast<size_t>(i)]; }

  QVec4& operator+=(const QVec4& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  QVec4& operator-=(const QVec4& o) {
    for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  QVec4& operator*=(const Rational& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend QVec4 operator+(QVec4 a, const QVec4& b) { return a += b; }
  friend QVec4 operator-(QVec4 a, const QVec4& b) { return a -= b; }
  friend QVec4 operator*(QVec4 a, const Rational& s) { return a *= s; }
  friend QVec4 operator*(const Rational& s, QVec4 a) { return a *= s; }
  friend QVec4 operator-(const QVec4& a) { return QVec4{} - a; }
  friend bool operator==(const QVec4&, const QVec4&) = default;

  bool is_zero() const {
    for (const auto& x : c)
      if (x.sign() != 0) return false;
    return true;
  }

  Rational dot(const QVec4& o) const {
    Rational s;
    for (int i = 0; i < 4; ++i) s += c[i] * o.c[i];
    return s;
  }
};

// Lexicographic order, used wherever deterministic sorting of points or
// forms is required.
inline std::strong_ordering operator<=>(const QVec4& a, const QVec4& b) {
  for (int i = 0; i < 4; ++i) {
    auto c = a[i] <=> b[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace homometry::exactmath
