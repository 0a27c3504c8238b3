#pragma once

#include <string>

namespace oddcycles {

// Exact rational on 64-bit parts; comparisons cross-multiply in 128 bits so
// degree-threshold checks never round.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d);
  static Rational whole(long long n) { return Rational{n, 1}; }

  std::string str() const;
  double approx() const { return double(num) / double(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace oddcycles
