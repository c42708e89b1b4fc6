#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bratteli::exact {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// floor(a / b) for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor(const Rational& v);
Rational frac(const Rational& v);  // v - floor(v), in [0, 1)
bool is_integer(const Rational& v);

/// Primes dividing |n| in increasing order (trial division; n is small in
/// every use inside the library).
std::vector<Integer> prime_factors(Integer n);
/// Positive divisors of |n|, increasing.
std::vector<Integer> divisors(const Integer& n);
bool is_prime(const Integer& n);

}  // namespace bratteli::exact
