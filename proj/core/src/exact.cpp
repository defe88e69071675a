#include "ranktwo/exact.hpp"

#include <algorithm>
#include <cmath>

namespace ranktwo {

std::string to_string(Int v) {
  __int128 x = v.raw();
  if (x == 0) return "0";
  bool neg = x < 0;
  std::string digits;
  while (x != 0) {
    int d = static_cast<int>(x % 10);
    if (d < 0) d = -d;
    digits.push_back(static_cast<char>('0' + d));
    x /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, Int v) { return os << to_string(v); }

Int abs(Int v) { return v < Int(0) ? -v : v; }

Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != Int(0)) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  Int r = a % b;
  if (r != Int(0) && ((r < Int(0)) != (b < Int(0)))) q -= Int(1);
  return q;
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

Int isqrt(Int m) {
  if (m < Int(0)) throw std::domain_error("isqrt: negative input");
  unsigned __int128 n = static_cast<unsigned __int128>(m.raw());
  if (n < 2) return Int(static_cast<unsigned long long>(n));

  // Newton iteration from an initial guess >= sqrt(n); decreasing, so the
  // first non-decreasing step lands exactly on the floor.
  int bits = 0;
  unsigned long long hi = static_cast<unsigned long long>(n >> 64);
  if (hi != 0)
    bits = 128 - __builtin_clzll(hi);
  else
    bits = 64 - __builtin_clzll(static_cast<unsigned long long>(n));
  unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
  for (;;) {
    unsigned __int128 y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  // x fits in 64 bits: isqrt of a 127-bit value is below 2^64.
  return Int(static_cast<unsigned long long>(x));
}

Rational::Rational(Int num, Int den) {
  if (den == Int(0)) throw std::domain_error("Rational: zero denominator");
  if (den < Int(0)) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (g > Int(1)) {
    num = num / g;
    den = den / g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::to_string() const {
  if (is_integer()) return ranktwo::to_string(num_);
  return ranktwo::to_string(num_) + "/" + ranktwo::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

QuadraticValue qv_from_rational(const Rational& r) {
  return QuadraticValue(Int(0), -r.num(), r.den());
}

namespace {

std::strong_ordering cmp3(Int a, Int b) { return a <=> b; }

}  // namespace

std::strong_ordering compare(const QuadraticValue& lhs, const QuadraticValue& rhs) {
  // lhs - rhs has the sign of  q2*sqrt(R1) - q1*sqrt(R2) - (q2*p1 - q1*p2).
  const Int A = rhs.q;  // coefficient of sqrt(R1), positive
  const Int B = lhs.q;  // coefficient of sqrt(R2), positive
  const Int t = rhs.q * lhs.p - lhs.q * rhs.p;

  // Compare X = A*sqrt(R1) against Y = B*sqrt(R2) + t. X is non-negative;
  // squaring is only valid once the sign of Y is known.
  const Int BB_R2 = B * B * rhs.radicand;
  if (t < Int(0) && BB_R2 < t * t) {
    // Y < 0 <= X.
    return std::strong_ordering::greater;
  }

  // Both sides non-negative: X <=> Y iff X^2 <=> Y^2. The cross term of Y^2
  // still carries sqrt(R2), so isolate it and square once more:
  //   X^2 - Y^2 = C - D*sqrt(R2),  C = A^2*R1 - B^2*R2 - t^2,  D = 2*t*B.
  const Int C = A * A * lhs.radicand - BB_R2 - t * t;
  const Int D = Int(2) * t * B;
  const Int D2_R2 = D * D * rhs.radicand;
  if (D >= Int(0)) {
    if (C < Int(0)) return std::strong_ordering::less;
    return cmp3(C * C, D2_R2);
  }
  if (C > Int(0)) return std::strong_ordering::greater;
  // C <= 0 and D < 0: compare |C| with |D|*sqrt(R2) and flip.
  return cmp3(D2_R2, C * C);
}

std::strong_ordering qv_cmp(const QuadraticValue& v, const Rational& r) {
  return compare(v, qv_from_rational(r));
}

Int qv_floor(const QuadraticValue& v) {
  // floor((s - p) / q) with s = isqrt(R) equals floor((sqrt(R) - p) / q):
  // sqrt(R) and s share every integer threshold crossed by (x - p) / q.
  return floor_div(isqrt(v.radicand) - v.p, v.q);
}

bool qv_is_integer(const QuadraticValue& v) {
  Int s = isqrt(v.radicand);
  if (s * s != v.radicand) return false;
  return floor_mod(s - v.p, v.q) == Int(0);
}

long double qv_approx(const QuadraticValue& v) {
  return (std::sqrt(v.radicand.to_long_double()) - v.p.to_long_double()) /
         v.q.to_long_double();
}

std::string to_display_string(const QuadraticValue& v) {
  Int s = isqrt(v.radicand);
  if (s * s == v.radicand) {
    // Rational value (s - p) / q.
    return Rational(s - v.p, v.q).to_string();
  }

  // Pull the largest square factor out of the radical: R = k^2 * R'. Trial
  // division is capped; a square factor made of primes beyond the cap stays
  // under the radical, which is still a correct (just less tidy) rendering.
  Int k = 1, rad = v.radicand;
  for (Int d = 2; d * d <= rad && d <= Int(1000000); ++d) {
    Int dd = d * d;
    while (rad % dd == Int(0)) {
      rad = rad / dd;
      k *= d;
    }
  }
  // Value is (k*sqrt(rad) - p) / q; cancel the common factor.
  Int g = gcd(gcd(k, v.p), v.q);
  Int coef = k / g, p = v.p / g, q = v.q / g;

  std::string core;
  if (coef != Int(1)) core += to_string(coef) + "*";
  core += "sqrt(" + to_string(rad) + ")";
  if (p > Int(0))
    core += "-" + to_string(p);
  else if (p < Int(0))
    core += "+" + to_string(-p);
  if (q == Int(1)) return core;
  if (p == Int(0) && coef == Int(1)) return core + "/" + to_string(q);
  return "(" + core + ")/" + to_string(q);
}

}  // namespace ranktwo
