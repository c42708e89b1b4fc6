#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bratteli/exact/matrix.hpp"
#include "bratteli/exact/polynomial.hpp"
#include "bratteli/exact/real_algebraic.hpp"

namespace bratteli::exact {

class FieldElement;

/// Multiplication by lambda (C) and by 1/lambda (D) in the basis
/// 1, lambda, ..., lambda^(k-1).
struct CompanionPair {
  RatMatrix multiply;  // C
  RatMatrix divide;    // D = C^-1
};

/// Real number field Q(lambda) presented by the minimal polynomial of lambda
/// (monic, integer, irreducible) and an isolating interval selecting the
/// real embedding.
class NumberField {
 public:
  /// Validates monic/integer/irreducible and that `root` is a root of minpoly.
  NumberField(Polynomial minpoly, RealAlgebraic root);

  static std::shared_ptr<const NumberField> rationals();
  static std::shared_ptr<const NumberField> rational_integer(const Integer& value);

  const Polynomial& minpoly() const { return minpoly_; }
  const RealAlgebraic& root() const { return root_; }
  std::size_t degree() const { return static_cast<std::size_t>(minpoly_.degree()); }
  bool is_rational() const { return degree() == 1; }
  const CompanionPair& companion() const { return companion_; }

  /// Same minimal polynomial and same real root.
  bool same_as(const NumberField& other) const;

 private:
  Polynomial minpoly_;
  RealAlgebraic root_;
  CompanionPair companion_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

CompanionPair companion_pair(const NumberField& field);

/// Element a_0 + a_1 lambda + ... + a_{k-1} lambda^(k-1) of a NumberField.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);
  static FieldElement zero(FieldPtr field);
  static FieldElement one(FieldPtr field);
  static FieldElement from_rational(FieldPtr field, const Rational& value);
  /// lambda itself (for degree 1 fields: the rational root).
  static FieldElement generator(FieldPtr field);
  /// Reduces an arbitrary polynomial in lambda modulo the minimal polynomial.
  static FieldElement from_polynomial(FieldPtr field, const Polynomial& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Polynomial as_polynomial() const;

  bool is_zero() const;
  bool is_rational() const;  // all coefficients past the constant vanish
  /// Value as a rational; requires is_rational().
  Rational rational_value() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const Rational& c, const FieldElement& a);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  FieldElement inverse() const;
  FieldElement pow(unsigned exponent) const;
  /// Sign of the real embedding: -1, 0, +1.
  int sign() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  double approx() const;
  /// Expression-grammar rendering in the variable `l`, e.g. "3 - l".
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

void require_same_field(const FieldElement& a, const FieldElement& b);

FieldElement nf_add(const FieldElement& a, const FieldElement& b);
FieldElement nf_sub(const FieldElement& a, const FieldElement& b);
FieldElement nf_mul(const FieldElement& a, const FieldElement& b);
FieldElement nf_inv(const FieldElement& a);
int nf_sign(const FieldElement& a);
std::strong_ordering compare(const FieldElement& a, const FieldElement& b);

/// Parses `expr := term (('+'|'-') term)*; term := rat | rat '*' pow | pow;
/// pow := 'l' ('^' uint)?; rat := int ('/' uint)?` into an element of field.
FieldElement parse_field_element(const FieldPtr& field, const std::string& text);

}  // namespace bratteli::exact
