#include "bratteli/exact/rational.hpp"

#include <algorithm>

#include "bratteli/error.hpp"

namespace bratteli {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedDegree: return "unsupported-degree";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::InvalidDiagram: return "invalid-diagram";
    case ErrorKind::InfiniteMeasureUnsupported: return "infinite-measure-unsupported";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::EnumerationTooLarge: return "enumeration-too-large";
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::SearchFailed: return "search-failed";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::InvalidExpression: return "invalid-expression";
    case ErrorKind::UnknownClass: return "unknown-class";
  }
  return "unknown";
}

}  // namespace bratteli

namespace bratteli::exact {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) fail(ErrorKind::InvalidExpression, "not a rational: " + text);
  if (r.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& v) { return floor_div(v.get_num(), v.get_den()); }

Rational frac(const Rational& v) {
  Rational r = v - Rational(floor(v));
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& v) { return v.get_den() == 1; }

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), large.begin(), large.end());
  return small;
}

bool is_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

}  // namespace bratteli::exact
