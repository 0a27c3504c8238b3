#include "oddcycles/rational.hpp"

#include <numeric>

#include "oddcycles/errors.hpp"

namespace oddcycles {

Rational Rational::of(long long n, long long d) {
  if (d == 0) throw Error(errc::bad_parameter, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  return Rational{n / g, d / g};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace oddcycles
