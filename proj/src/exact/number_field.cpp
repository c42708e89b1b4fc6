#include "bratteli/exact/number_field.hpp"

#include <cctype>

namespace bratteli::exact {

CompanionPair companion_pair(const NumberField& field) {
  const Polynomial& f = field.minpoly();
  const std::size_t k = field.degree();
  CompanionPair pair{RatMatrix(k, k), RatMatrix(k, k)};
  const Rational m0 = f.coeff(0);
  if (m0 == 0) fail(ErrorKind::DivisionByZero, "minimal polynomial with zero constant term");
  for (std::size_t i = 0; i < k; ++i) {
    if (i + 1 < k) pair.multiply(i + 1, i) = 1;
    pair.multiply(i, k - 1) = -f.coeff(i);
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    pair.divide(i, 0) = -f.coeff(i + 1) / m0;
    pair.divide(i, i + 1) = 1;
  }
  pair.divide(k - 1, 0) = -Rational(1) / m0;
  return pair;
}

namespace {

RealAlgebraic select_root(const Polynomial& minpoly, RealAlgebraic r) {
  if (r.is_rational()) {
    if (minpoly(r.rational_value()) != 0) fail(ErrorKind::Precondition, "root does not satisfy the minimal polynomial");
    return r;
  }
  if (!(r.poly() % minpoly).is_zero()) {
    fail(ErrorKind::Precondition, "minimal polynomial does not divide the root's defining polynomial");
  }
  SturmSequence sturm(minpoly);
  for (;;) {
    if (minpoly.sign_at(r.lo()) != 0 && minpoly.sign_at(r.hi()) != 0 && sturm.count_roots(r.lo(), r.hi()) == 1) {
      return RealAlgebraic(minpoly, r.lo(), r.hi());
    }
    r = r.bisected();
    if (r.is_rational()) return r;
  }
}

}  // namespace

NumberField::NumberField(Polynomial minpoly, RealAlgebraic root)
    : minpoly_(std::move(minpoly)), root_(select_root(minpoly_, std::move(root))) {
  if (!minpoly_.is_monic_integer()) fail(ErrorKind::Precondition, "minimal polynomial must be monic with integer coefficients");
  if (!is_irreducible(minpoly_)) fail(ErrorKind::Precondition, "minimal polynomial must be irreducible: " + minpoly_.to_string());
  companion_ = companion_pair(*this);
}

std::shared_ptr<const NumberField> NumberField::rational_integer(const Integer& value) {
  Polynomial p({Rational(-value), Rational(1)});
  return std::make_shared<const NumberField>(p, RealAlgebraic::from_rational(Rational(value)));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const FieldPtr q = rational_integer(1);
  return q;
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (is_rational() && other.is_rational()) return true;
  return minpoly_ == other.minpoly_ && real_equal(root_, other.root_);
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() == b.field()) return;
  if (!a.field()->same_as(*b.field())) fail(ErrorKind::FieldMismatch, "field elements from different fields");
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree()) fail(ErrorKind::Precondition, "coefficient vector length must equal field degree");
  for (auto& c : coeffs_) c.canonicalize();
}

FieldElement FieldElement::zero(FieldPtr field) {
  std::size_t k = field->degree();
  return FieldElement(std::move(field), std::vector<Rational>(k));
}

FieldElement FieldElement::one(FieldPtr field) { return from_rational(std::move(field), Rational(1)); }

FieldElement FieldElement::from_rational(FieldPtr field, const Rational& value) {
  std::vector<Rational> c(field->degree());
  c[0] = value;
  return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::generator(FieldPtr field) {
  return from_polynomial(field, Polynomial::monomial(Rational(1), 1));
}

FieldElement FieldElement::from_polynomial(FieldPtr field, const Polynomial& p) {
  Polynomial r = p % field->minpoly();
  std::vector<Rational> c(field->degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
  return FieldElement(std::move(field), std::move(c));
}

Polynomial FieldElement::as_polynomial() const { return Polynomial(coeffs_); }

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) fail(ErrorKind::Precondition, "field element is not rational");
  return coeffs_[0];
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const std::size_t k = a.coeffs_.size();
  if (k == 1) return FieldElement(a.field_, {a.coeffs_[0] * b.coeffs_[0]});
  std::vector<Rational> prod(2 * k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  // lambda^k = -(m_0 + m_1 lambda + ... + m_{k-1} lambda^{k-1})
  const Polynomial& f = a.field_->minpoly();
  for (std::size_t d = 2 * k - 2; d >= k; --d) {
    Rational top = prod[d];
    if (top != 0) {
      for (std::size_t i = 0; i < k; ++i) prod[d - k + i] -= top * f.coeff(i);
    }
    prod[d] = 0;
  }
  prod.resize(k);
  return FieldElement(a.field_, std::move(prod));
}

FieldElement operator*(const Rational& c, const FieldElement& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return FieldElement(a.field_, std::move(v));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero field element");
  if (coeffs_.size() == 1) return FieldElement(field_, {1 / coeffs_[0]});
  BezoutResult b = extended_gcd(as_polynomial(), field_->minpoly());
  check_consistency(b.gcd.degree() == 0, "nonzero element shares a factor with the minimal polynomial");
  return from_polynomial(field_, b.s);
}

FieldElement FieldElement::pow(unsigned exponent) const {
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coeffs_[0]);
  Polynomial a = as_polynomial();
  RealAlgebraic r = field_->root();
  if (r.is_rational()) return a.sign_at(r.rational_value());
  SturmSequence sturm(a);
  for (;;) {
    int slo = a.sign_at(r.lo()), shi = a.sign_at(r.hi());
    if (slo != 0 && slo == shi && sturm.count_roots(r.lo(), r.hi()) == 0) return slo;
    r = r.bisected();
  }
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.coeffs_ == b.coeffs_;
}

double FieldElement::approx() const {
  // exact evaluation at a rational point within 2^-96 of lambda, so that
  // cancellation (e.g. 3 - lambda) does not eat the displayed digits
  const RealAlgebraic& root = field_->root();
  if (root.is_rational() || is_rational()) return as_polynomial()(root.lo()).get_d();
  Rational scale = std::max(abs(root.lo()), abs(root.hi()));
  if (scale < 1) scale = 1;
  RealAlgebraic r = root.refined(scale / Rational(Integer(1) << 96));
  Rational point = r.is_rational() ? r.lo() : Rational((r.lo() + r.hi()) / 2);
  return as_polynomial()(point).get_d();
}

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += exact::to_string(mag);
      continue;
    }
    if (mag != 1) out += exact::to_string(mag) + "*";
    out += "l";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FieldElement nf_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement nf_sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement nf_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement nf_inv(const FieldElement& a) { return a.inverse(); }
int nf_sign(const FieldElement& a) { return a.sign(); }

std::strong_ordering compare(const FieldElement& a, const FieldElement& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const FieldPtr& field, const std::string& text) : field_(field), text_(text) {}

  FieldElement parse() {
    Polynomial acc;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {  // leading sign on the first term
      ++pos_;
      negate = true;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '\0') break;
      if (c != '+' && c != '-') error("expected '+' or '-'");
      ++pos_;
      Polynomial next = term();
      acc = c == '+' ? acc + next : acc - next;
    }
    return FieldElement::from_polynomial(field_, acc);
  }

 private:
  Polynomial term() {
    skip_ws();
    if (peek() == 'l') return power(Rational(1));
    Rational r = rational();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'l') error("expected 'l' after '*'");
      return power(r);
    }
    return Polynomial::constant(r);
  }

  Polynomial power(const Rational& coefficient) {
    ++pos_;  // 'l'
    skip_ws();
    std::size_t exponent = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = std::stoul(digits());
    }
    return Polynomial::monomial(coefficient, exponent);
  }

  Rational rational() {
    std::string num = digits();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::string den = digits();
      return parse_rational(num + "/" + den);
    }
    return parse_rational(num);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::InvalidExpression, what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  const FieldPtr& field_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_field_element(const FieldPtr& field, const std::string& text) {
  return ExpressionParser(field, text).parse();
}

}  // namespace bratteli::exact
