#pragma once

#include <numeric>
#include <string>

#include "hamseq/errors.hpp"

namespace hamseq {

// Exact rational in lowest terms with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;

  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw InvalidParams("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace hamseq
