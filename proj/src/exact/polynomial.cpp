#include "bratteli/exact/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "bratteli/error.hpp"

namespace bratteli::exact {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : coeffs_) den = lcm(den, c.get_den());
  Integer content = 0;
  for (const auto& c : coeffs_) content = gcd(content, Integer(c * den));
  if (leading() < 0) content = -content;
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(Integer(c * den) / content);
  return Polynomial(std::move(v));
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

bool Polynomial::is_monic_integer() const {
  return !is_zero() && leading() == 1 && has_integer_coefficients();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& a) { return Polynomial::constant(c) * a; }

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
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
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / lb;
    quot[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

BezoutResult extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational lc = r0.leading();
  Rational inv = 1 / lc;
  return {inv * r0, inv * s0, inv * t0};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return (p / gcd(p, p.derivative())).primitive();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() <= 0) return out;
  Polynomial dp = p.derivative();
  Polynomial b = gcd(p, dp);
  Polynomial c = p / b;
  Polynomial d = dp / b - c.derivative();
  int mult = 1;
  while (c.degree() > 0) {
    Polynomial a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a.primitive(), mult);
    c = c / a;
    d = d / a - c.derivative();
    ++mult;
  }
  return out;
}

bool factor_order_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

namespace {

Integer int_coeff(const Polynomial& p, std::size_t i) { return p.coeff(i).get_num(); }

// Rational roots of a primitive integer polynomial, as linear primitive factors.
std::vector<Polynomial> split_rational_roots(Polynomial& g) {
  std::vector<Polynomial> linear;
  while (g.degree() >= 1 && g.coeff(0) == 0) {
    linear.push_back(Polynomial::from_integers({0, 1}));
    g = (g / linear.back()).primitive();
  }
  if (g.degree() < 1) return linear;
  bool progress = true;
  while (progress && g.degree() >= 1) {
    progress = false;
    auto ps = divisors(int_coeff(g, 0));
    auto qs = divisors(int_coeff(g, static_cast<std::size_t>(g.degree())));
    for (const auto& q : qs) {
      for (const auto& p : ps) {
        for (int s : {1, -1}) {
          Rational r(Integer(p * s), q);
          r.canonicalize();
          if (r.get_den() != q) continue;  // visited with smaller q
          if (g(r) == 0) {
            Polynomial f = Polynomial({-r, Rational(1)}).primitive();
            linear.push_back(f);
            g = (g / f).primitive();
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  return linear;
}

// Search a factor of exact degree s of the primitive integer polynomial g by
// Kronecker interpolation. Returns the zero polynomial when none exists.
Polynomial kronecker_factor(const Polynomial& g, int s) {
  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> choices;
  for (long k = 0; static_cast<int>(xs.size()) < s + 1; ++k) {
    long x = (k % 2 == 0) ? -(k / 2) : (k + 1) / 2;
    Rational v = g(Rational(x));
    if (v == 0) continue;
    xs.emplace_back(x);
    auto ds = divisors(v.get_num());
    std::vector<Integer> opts;
    for (const auto& d : ds) {
      opts.push_back(d);
      if (!choices.empty()) opts.push_back(-d);
    }
    choices.push_back(std::move(opts));
  }
  const Integer lead_g = int_coeff(g, static_cast<std::size_t>(g.degree()));
  // table[j][i] holds the divided difference f[x_{j-i}, ..., x_j].
  std::vector<std::vector<Integer>> table(static_cast<std::size_t>(s + 1));
  Polynomial found;
  std::function<bool(int)> dfs = [&](int j) -> bool {
    if (j == s + 1) {
      // Newton form to coefficients.
      Polynomial f;
      Polynomial basis = Polynomial::constant(1);
      for (int i = 0; i <= s; ++i) {
        f = f + Polynomial::constant(Rational(table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])) * basis;
        basis = basis * Polynomial({Rational(-xs[static_cast<std::size_t>(i)]), Rational(1)});
      }
      if (f.degree() != s) return false;
      if (lead_g % int_coeff(f, static_cast<std::size_t>(s)) != 0) return false;
      if (!(g % f).is_zero()) return false;
      found = f.primitive();
      return true;
    }
    auto& row = table[static_cast<std::size_t>(j)];
    for (const auto& y : choices[static_cast<std::size_t>(j)]) {
      row.assign(static_cast<std::size_t>(j + 1), Integer(0));
      row[0] = y;
      bool ok = true;
      for (int i = 1; i <= j && ok; ++i) {
        Integer num = row[static_cast<std::size_t>(i - 1)] - table[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
        Integer den = xs[static_cast<std::size_t>(j)] - xs[static_cast<std::size_t>(j - i)];
        if (num % den != 0) ok = false;
        else row[static_cast<std::size_t>(i)] = num / den;
      }
      if (!ok) continue;
      if (dfs(j + 1)) return true;
    }
    return false;
  };
  dfs(0);
  return found;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  Polynomial g = squarefree_part(p);
  for (const auto& f : split_rational_roots(g)) roots.push_back(-f.coeff(0) / f.coeff(1));
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

void factor_no_rational_roots(const Polynomial& g, std::vector<Polynomial>& out) {
  if (g.degree() <= 3) {
    if (g.degree() >= 1) out.push_back(g);
    return;
  }
  for (int s = 2; s <= g.degree() / 2; ++s) {
    Polynomial f = kronecker_factor(g, s);
    if (!f.is_zero()) {
      out.push_back(f);
      factor_no_rational_roots((g / f).primitive(), out);
      return;
    }
  }
  out.push_back(g);
}

}  // namespace

std::vector<std::pair<Polynomial, int>> factor_over_rationals(const Polynomial& p, int max_degree) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "cannot factor the zero polynomial");
  if (p.degree() > max_degree) {
    fail(ErrorKind::UnsupportedDegree,
         "degree " + std::to_string(p.degree()) + " exceeds factorization bound " + std::to_string(max_degree));
  }
  std::vector<std::pair<Polynomial, int>> out;
  for (auto& [part, mult] : squarefree_decomposition(p)) {
    Polynomial g = part.primitive();
    std::vector<Polynomial> factors = split_rational_roots(g);
    factor_no_rational_roots(g, factors);
    for (auto& f : factors) out.emplace_back(f, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return factor_order_less(a.first, b.first);
  });
  return out;
}

bool is_irreducible(const Polynomial& p, int max_degree) {
  if (p.degree() < 1) return false;
  auto f = factor_over_rationals(p, max_degree);
  return f.size() == 1 && f.front().second == 1;
}

}  // namespace bratteli::exact
