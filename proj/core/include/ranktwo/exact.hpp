#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ranktwo {

// Signed 128-bit integer with overflow rejection: any operation whose exact
// result leaves the representable range throws std::overflow_error instead
// of wrapping. Wide enough for every cubic and quartic expression this
// library evaluates on 64-bit inputs, so a throw signals genuinely absurd
// input rather than an internal shortcut.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(int v) : v_(v) {}
  constexpr Int(long v) : v_(v) {}
  constexpr Int(long long v) : v_(v) {}
  constexpr Int(unsigned int v) : v_(v) {}
  constexpr Int(unsigned long v) : v_(v) {}
  constexpr Int(unsigned long long v) : v_(v) {}

  friend Int operator+(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a.v_, b.v_, &r.v_))
      throw std::overflow_error("Int: overflow in addition");
    return r;
  }
  friend Int operator-(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r.v_))
      throw std::overflow_error("Int: overflow in subtraction");
    return r;
  }
  friend Int operator*(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r.v_))
      throw std::overflow_error("Int: overflow in multiplication");
    return r;
  }
  // Truncating division, C semantics.
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("Int: division by zero");
    if (a.v_ == kMin && b.v_ == -1)
      throw std::overflow_error("Int: overflow in division");
    Int r;
    r.v_ = a.v_ / b.v_;
    return r;
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("Int: division by zero");
    if (a.v_ == kMin && b.v_ == -1) return Int(0);
    Int r;
    r.v_ = a.v_ % b.v_;
    return r;
  }
  Int operator-() const {
    if (v_ == kMin) throw std::overflow_error("Int: overflow in negation");
    Int r;
    r.v_ = -v_;
    return r;
  }
  Int& operator+=(Int b) { return *this = *this + b; }
  Int& operator-=(Int b) { return *this = *this - b; }
  Int& operator*=(Int b) { return *this = *this * b; }
  Int& operator++() { return *this += Int(1); }
  Int& operator--() { return *this -= Int(1); }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_odd() const { return (v_ % 2) != 0; }

  // Checked narrowing for interop with plain integer code paths.
  std::int64_t to_int64() const {
    if (v_ < static_cast<__int128>(INT64_MIN) ||
        v_ > static_cast<__int128>(INT64_MAX))
      throw std::overflow_error("Int: value does not fit in 64 bits");
    return static_cast<std::int64_t>(v_);
  }
  long double to_long_double() const { return static_cast<long double>(v_); }
  __int128 raw() const { return v_; }

 private:
  static constexpr __int128 kMin = static_cast<__int128>(1) << 127;
  __int128 v_ = 0;
};

std::string to_string(Int v);
std::ostream& operator<<(std::ostream& os, Int v);

Int abs(Int v);
Int gcd(Int a, Int b);
// Division rounding toward minus infinity; remainder with the sign of b.
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

// Largest s >= 0 with s*s <= m. Negative input is a contract violation.
Int isqrt(Int m);

// Exact rational number, always reduced, denominator always positive.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int value) : num_(value), den_(1) {}
  Rational(int value) : num_(value), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == Int(1); }
  Int as_integer() const {
    if (!is_integer())
      throw std::logic_error("Rational: " + to_string() + " is not an integer");
    return num_;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == Int(0)) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
  }

  std::string to_string() const;
  long double to_long_double() const {
    return num_.to_long_double() / den_.to_long_double();
  }

 private:
  Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// The quadratic irrational (sqrt(radicand) - p) / q. All bound formulas in
// this library scale to this shape with integer entries. Constraints:
// radicand >= 0 and q >= 1, both enforced on construction.
struct QuadraticValue {
  Int radicand, p, q;

  QuadraticValue(Int radicand_, Int p_, Int q_)
      : radicand(radicand_), p(p_), q(q_) {
    if (radicand < Int(0))
      throw std::domain_error("QuadraticValue: negative radicand");
    if (q < Int(1))
      throw std::domain_error("QuadraticValue: scale must be >= 1");
  }

  friend bool operator==(const QuadraticValue& a, const QuadraticValue& b) = default;
};

QuadraticValue qv_from_rational(const Rational& r);

// Exact three-way comparison of two quadratic values using integer
// arithmetic only. The difference is scaled to A*sqrt(R1) - B*sqrt(R2) - t
// with A, B > 0; the sign is then resolved by at most two squarings with
// explicit sign case analysis.
std::strong_ordering compare(const QuadraticValue& lhs, const QuadraticValue& rhs);

// Ordering of a quadratic value against an exact rational.
std::strong_ordering qv_cmp(const QuadraticValue& v, const Rational& r);

// Unique k with k <= v < k+1, computed from isqrt(radicand).
Int qv_floor(const QuadraticValue& v);

bool qv_is_integer(const QuadraticValue& v);

// Display helper: decimal approximation. Never feeds any decision.
long double qv_approx(const QuadraticValue& v);

// Display helper: exact form with square factors pulled out of the radical
// and common factors cancelled, e.g. "sqrt(13)-2" or "(sqrt(409)+5)/2" or a
// plain integer when the value is one.
std::string to_display_string(const QuadraticValue& v);

}  // namespace ranktwo
