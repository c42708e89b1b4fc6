#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "bratteli/exact/rational.hpp"

namespace bratteli::exact {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial from_integers(const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;
  bool has_integer_coefficients() const;
  bool is_monic_integer() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Renders with variable `var`, highest degree first, e.g. "t^2 - 3*t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// s, t with s*a + t*b = gcd(a, b) (monic).
struct BezoutResult {
  Polynomial gcd, s, t;
};
BezoutResult extended_gcd(const Polynomial& a, const Polynomial& b);

Polynomial squarefree_part(const Polynomial& p);

/// Distinct rational roots, increasing.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Yun decomposition: primitive squarefree factors with their multiplicities.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

/// Deterministic order used for factor lists: degree, then coefficients
/// lexicographically from the constant term upward.
bool factor_order_less(const Polynomial& a, const Polynomial& b);

constexpr int kDefaultMaxFactorDegree = 12;

/// Complete factorization over Q into primitive irreducible integer
/// polynomials with positive leading coefficients. The product of the
/// factors (with multiplicity) equals p up to a rational constant.
std::vector<std::pair<Polynomial, int>> factor_over_rationals(
    const Polynomial& p, int max_degree = kDefaultMaxFactorDegree);

bool is_irreducible(const Polynomial& p, int max_degree = kDefaultMaxFactorDegree);

}  // namespace bratteli::exact
