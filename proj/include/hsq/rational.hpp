// Exact rational arithmetic on 64-bit integers.
//
// Weight coordinates stay tiny (numerators and denominators of a few
// digits), so no overflow guards beyond gcd normalization are needed.

#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hsq {

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0)
      throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  Rat& operator+=(Rat b) { *this = *this + b; return *this; }
  Rat& operator-=(Rat b) { *this = *this - b; return *this; }
  Rat& operator*=(Rat b) { *this = *this * b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

} // namespace hsq
