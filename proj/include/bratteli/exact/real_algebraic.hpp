#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bratteli/exact/polynomial.hpp"

namespace bratteli::exact {

/// Sturm chain of a squarefree polynomial, normalized by positive scalars so
/// that all members have integer coefficients.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);
  int sign_changes(const Rational& x) const;
  /// Distinct roots in the open interval (lo, hi); lo < hi, p(lo), p(hi) != 0.
  int count_roots(const Rational& lo, const Rational& hi) const;
  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

/// A real algebraic number: the unique root of a squarefree integer
/// polynomial inside an open isolating interval (lo, hi), or an exact
/// rational when lo == hi. Values never change; refinement returns a new
/// instance selecting the same root.
class RealAlgebraic {
 public:
  RealAlgebraic(Polynomial poly, Rational lo, Rational hi);
  static RealAlgebraic from_rational(const Rational& r);

  const Polynomial& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }
  /// Only meaningful when is_rational().
  const Rational& rational_value() const { return lo_; }

  /// Copy whose interval width is at most `width` (same root).
  RealAlgebraic refined(const Rational& width) const;
  /// Copy with the interval halved once (no-op when rational).
  RealAlgebraic bisected() const;
  bool contains(const Rational& x) const;

  /// Display-only approximation.
  double approx() const;
  std::string decimal(int significant_digits = 12) const;

 private:
  Polynomial poly_;
  Rational lo_, hi_;
};

/// Distinct real roots of p in increasing order.
std::vector<RealAlgebraic> isolate_real_roots(const Polynomial& p, int max_degree = kDefaultMaxFactorDegree);

/// Exact comparison: equality through gcd of the defining polynomials,
/// otherwise refinement until the intervals separate.
std::strong_ordering compare_real(const RealAlgebraic& a, const RealAlgebraic& b);

inline bool real_equal(const RealAlgebraic& a, const RealAlgebraic& b) {
  return compare_real(a, b) == std::strong_ordering::equal;
}

/// Largest real root; requires at least one.
RealAlgebraic max_real_root(const Polynomial& p, int max_degree = kDefaultMaxFactorDegree);

}  // namespace bratteli::exact
