#include "bratteli/goodness.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bratteli {

namespace {

struct ClassLattices {
  Integer den;
  std::vector<std::vector<Integer>> scaled;  // den * x_i, aligned with support
  IntMatrix full, alpha;                     // Hermite bases
  IntMatrix companion;                       // multiplication by lambda
};

ClassLattices class_lattices(const ErgodicMeasure& mu) {
  const std::size_t k = mu.field->degree();
  ClassLattices out;
  out.den = 1;
  for (const auto& xi : mu.x)
    for (const auto& c : xi.coeffs()) out.den = exact::lcm(out.den, c.get_den());
  for (const auto& xi : mu.x) {
    std::vector<Integer> v;
    for (const auto& c : xi.coeffs()) v.push_back(Rational(c * Rational(out.den)).get_num());
    out.scaled.push_back(std::move(v));
  }
  auto columns = [&](bool alpha_only) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < mu.support.size(); ++i)
      if (!alpha_only || mu.classes.class_of[mu.support[i]] == mu.class_id) cols.push_back(i);
    IntMatrix m(k, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < k; ++i) m(i, j) = out.scaled[cols[j]][i];
    return m;
  };
  auto full = exact::column_hermite_form(columns(false));
  auto alpha = exact::column_hermite_form(columns(true));
  check_consistency(full.has_value(), "H must have full rank");
  check_consistency(alpha.has_value(), "the class entries must span a lattice of full rank");
  out.full = full->basis;
  out.alpha = alpha->basis;
  const auto& c = mu.field->companion().multiply;
  out.companion = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.companion(i, j) = c(i, j).get_num();
  return out;
}

// Canonical coset representative modulo a lower-triangular Hermite basis.
std::vector<Integer> reduce(std::vector<Integer> v, const IntMatrix& basis) {
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    Integer q = exact::floor_div(v[i], basis(i, i));
    if (q == 0) continue;
    for (std::size_t r = i; r < basis.rows(); ++r) v[r] -= q * basis(r, i);
  }
  return v;
}

bool is_zero(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& e) { return e == 0; });
}

Integer covolume(const IntMatrix& b) {
  Integer v = 1;
  for (std::size_t i = 0; i < b.rows(); ++i) v *= b(i, i);
  return v;
}

}  // namespace

GoodnessVerdict lattice_goodness(const ErgodicMeasure& mu) {
  GoodnessVerdict out;
  out.branch = "lattice";
  ClassLattices lat = class_lattices(mu);
  Integer full = covolume(lat.full), alpha = covolume(lat.alpha);
  check_consistency(alpha % full == 0, "class lattice must be a sublattice of H");
  out.quotient_index = alpha / full;

  unsigned worst = 0;
  for (std::size_t idx = 0; idx < mu.support.size(); ++idx) {
    if (mu.classes.class_of[mu.support[idx]] == mu.class_id) continue;
    // The orbit lives in the finite group H / H(class) of order
    // quotient_index, so it repeats after at most that many steps.
    std::map<std::vector<Integer>, std::size_t> seen;
    std::vector<std::vector<Integer>> trace;
    std::vector<Integer> actual = lat.scaled[idx];
    std::vector<Integer> state = reduce(actual, lat.alpha);
    unsigned step = 0;
    for (;; ++step) {
      if (is_zero(state)) break;
      auto [it, fresh] = seen.emplace(state, trace.size());
      if (!fresh) {
        out.good = false;
        out.failing_vertex = mu.support[idx];
        out.orbit = std::move(trace);
        out.cycle_start = it->second;
        return out;
      }
      trace.push_back(state);
      actual = lat.companion * actual;
      state = reduce(actual, lat.alpha);
    }
    // lambda * H(class) lies in H(class): once zero, the coset stays zero
    check_consistency(is_zero(reduce(lat.companion * actual, lat.alpha)), "zero coset must be absorbing");
    worst = std::max(worst, step);
  }
  out.good = true;
  out.exponent = worst;
  return out;
}

GoodnessVerdict is_good(const ErgodicMeasure& mu) {
  if (mu.m() == 0) {
    GoodnessVerdict out;
    out.good = true;
    out.branch = "simple";
    out.exponent = 0;
    return out;
  }
  GoodnessVerdict lattice = lattice_goodness(mu);
  auto rf = rational_form(mu);
  if (!rf) return lattice;

  GoodnessVerdict out = lattice;
  out.branch = "rational";
  Integer a = 0;
  for (std::size_t i = 0; i < mu.support.size(); ++i)
    if (mu.classes.class_of[mu.support[i]] == mu.class_id) a = exact::gcd(a, rf->p[i]);
  out.class_gcd = a;
  Integer residual = a;
  for (Integer g = exact::gcd(residual, rf->lambda); g > 1; g = exact::gcd(residual, rf->lambda)) residual /= g;
  out.residual = residual;
  out.good = residual == 1;
  check_consistency(out.good == lattice.good, "rational and lattice goodness tests disagree");
  return out;
}

bool verify_goodness_exponent(const ErgodicMeasure& mu, unsigned r) {
  ClassLattices lat = class_lattices(mu);
  for (std::size_t idx = 0; idx < mu.support.size(); ++idx) {
    FieldElement v = mu.lambda.pow(r) * mu.x[idx];
    std::vector<Rational> scaled = v.coeffs();
    for (auto& s : scaled) s *= Rational(lat.den);
    for (const auto& c : exact::solve_lower_triangular(lat.alpha, scaled))
      if (!exact::is_integer(c)) return false;
  }
  return true;
}

namespace {

bool primes_divide(const Integer& q, const Integer& lambda) {
  for (const auto& p : exact::prime_factors(q))
    if (lambda % p != 0) return false;
  return true;
}

}  // namespace

bool multiplicative_S_rational(const ErgodicMeasure& mu) {
  auto rf = rational_form(mu);
  if (!rf) fail(ErrorKind::Unsupported, "multiplicativity is decided for rational measures only");
  return primes_divide(rf->q, rf->lambda);
}

bool bernoulli_type_rational(const ErgodicMeasure& mu) {
  auto rf = rational_form(mu);
  if (!rf) fail(ErrorKind::Unsupported, "Bernoulli type is decided for rational measures only");
  if (!is_good(mu).good) fail(ErrorKind::Unsupported, "Bernoulli type is decided for good measures only");
  return primes_divide(rf->q, rf->lambda);
}

QuotientWitness quotient_condition_witness(const ErgodicMeasure& mu) {
  std::set<Integer> excluded;
  const auto& d = mu.field->companion().divide;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      for (const auto& p : exact::prime_factors(d(i, j).get_den())) excluded.insert(p);
  for (const auto& xi : mu.x)
    for (const auto& c : xi.coeffs())
      for (const auto& p : exact::prime_factors(c.get_den())) excluded.insert(p);

  QuotientWitness out;
  out.excluded.assign(excluded.begin(), excluded.end());
  LatticeGroup h = lattice_H(mu);
  for (Integer p = 2;; ++p) {
    if (!exact::is_prime(p) || excluded.count(p)) continue;
    out.prime = p;
    out.verdict = member_S(mu, h, FieldElement::from_rational(mu.field, Rational(Integer(1), p)));
    check_consistency(!out.verdict.member, "1/l must lie outside S(mu) for primes l outside L");
    return out;
  }
}

}  // namespace bratteli
