#include "bratteli/values.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bratteli {

using exact::RatMatrix;

FieldElement LatticeGroup::basis_element(std::size_t j) const {
  std::vector<Rational> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = Rational(basis(i, j)) / Rational(den);
  return FieldElement(field, std::move(c));
}

std::vector<Rational> LatticeGroup::coordinates(const FieldElement& value) const {
  std::vector<Rational> scaled = value.coeffs();
  for (auto& s : scaled) s *= Rational(den);
  return exact::solve_lower_triangular(basis, scaled);
}

Integer LatticeGroup::covolume() const {
  Integer v = 1;
  for (std::size_t i = 0; i < rank(); ++i) v *= basis(i, i);
  return v;
}

LatticeGroup make_lattice(const FieldPtr& field, std::vector<FieldElement> generators, const FieldElement& multiplier) {
  const std::size_t k = field->degree(), n = generators.size();
  Integer den = 1;
  for (const auto& g : generators)
    for (const auto& c : g.coeffs()) den = exact::lcm(den, c.get_den());
  IntMatrix x(k, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      Rational scaled = generators[j].coeffs()[i] * Rational(den);
      x(i, j) = scaled.get_num();
    }
  auto hnf = exact::column_hermite_form(x);
  if (!hnf) fail(ErrorKind::InternalConsistency, "generators do not span a lattice of full rank " + std::to_string(k));

  LatticeGroup g{field, std::move(generators), den, hnf->basis, IntMatrix(n, k), multiplier, IntMatrix(k, k)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) g.to_basis(i, j) = hnf->transform(i, j);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = g.coordinates(multiplier * g.basis_element(j));
    for (std::size_t i = 0; i < k; ++i) {
      if (!exact::is_integer(c[i])) fail(ErrorKind::InternalConsistency, "multiplication by lambda does not preserve H");
      g.mul(i, j) = c[i].get_num();
    }
  }
  return g;
}

LatticeGroup lattice_H(const ErgodicMeasure& mu) { return make_lattice(mu.field, mu.x, mu.lambda); }

MembershipVerdict member_G(const LatticeGroup& g, const FieldElement& value) {
  MembershipVerdict out;
  const std::size_t k = g.rank();
  std::vector<Rational> c = g.coordinates(value);
  for (const auto& ci : c) out.orbit_denominator = exact::lcm(out.orbit_denominator, ci.get_den());
  RatMatrix mul = exact::to_rational(g.mul);

  auto fractional = [](std::vector<Rational> v) {
    for (auto& e : v) e = exact::frac(e);
    return v;
  };
  auto is_zero = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& e) { return e == 0; });
  };

  // The state space (1/d)Z^k / Z^k is finite and mul is integral, so the
  // orbit of the fractional part closes up after at most d^k steps.
  std::map<std::vector<Rational>, std::size_t> seen;
  std::vector<Rational> state = fractional(c);
  for (unsigned step = 0;; ++step) {
    if (is_zero(state)) {
      out.member = true;
      out.exponent = step;
      break;
    }
    auto [it, fresh] = seen.emplace(state, out.orbit.size());
    if (!fresh) {
      out.cycle_start = it->second;
      return out;
    }
    out.orbit.push_back(state);
    state = fractional(mul * state);
  }

  // certificate: coordinates of multiplier^N * value, pulled back to the
  // generators, re-verified by direct expansion
  std::vector<Rational> cn = c;
  for (unsigned i = 0; i < *out.exponent; ++i) cn = mul * cn;
  out.orbit.clear();
  out.coefficients.assign(g.generators.size(), Integer(0));
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) out.coefficients[i] += g.to_basis(i, j) * cn[j].get_num();
  FieldElement lhs = FieldElement::zero(g.field);
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    if (out.coefficients[i] != 0) lhs += Rational(out.coefficients[i]) * g.generators[i];
  check_consistency(lhs == g.multiplier.pow(*out.exponent) * value, "membership certificate does not re-verify");
  return out;
}

FieldElement embed_value(const ErgodicMeasure& mu, const FieldElement& value) {
  if (value.field() == mu.field || value.field()->same_as(*mu.field)) {
    return FieldElement(mu.field, value.coeffs());
  }
  if (value.field()->is_rational()) return FieldElement::from_rational(mu.field, value.rational_value());
  fail(ErrorKind::FieldMismatch, "value lies in Q(root of " + value.field()->minpoly().to_string() +
                                     ") but the measure lives in Q(root of " + mu.field->minpoly().to_string() + ")");
}

MembershipVerdict member_S(const ErgodicMeasure& mu, const LatticeGroup& h, const FieldElement& value) {
  FieldElement v = embed_value(mu, value);
  if (v.sign() < 0 || (FieldElement::one(mu.field) - v).sign() < 0) {
    MembershipVerdict out;
    out.in_range = false;
    return out;
  }
  return member_G(h, v);
}

MembershipVerdict member_S(const ErgodicMeasure& mu, const FieldElement& value) {
  return member_S(mu, lattice_H(mu), value);
}

std::vector<FieldElement> enumerate_level_values(const ErgodicMeasure& mu, unsigned level, std::size_t budget) {
  auto h = heights(mu.diagram, level);
  Integer product = 1;
  for (auto v : mu.support) product *= h[v] + 1;
  if (product > Integer(std::to_string(budget))) {
    fail(ErrorKind::EnumerationTooLarge,
         "level " + std::to_string(level) + " needs " + product.get_str() + " combinations, budget is " +
             std::to_string(budget));
  }
  std::set<std::vector<Rational>> sums = {std::vector<Rational>(mu.field->degree())};
  for (std::size_t i = 0; i < mu.support.size(); ++i) {
    const auto& xi = mu.x[i].coeffs();
    std::set<std::vector<Rational>> next;
    for (const auto& s : sums) {
      std::vector<Rational> acc = s;
      for (Integer t = 0; t <= h[mu.support[i]]; ++t) {
        next.insert(acc);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += xi[j];
      }
    }
    sums = std::move(next);
  }
  FieldElement scale = mu.lambda.inverse().pow(level - 1);
  std::vector<FieldElement> out;
  out.reserve(sums.size());
  for (const auto& s : sums) out.push_back(FieldElement(mu.field, s) * scale);
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) {
    return exact::compare(a, b) == std::strong_ordering::less;
  });
  return out;
}

FieldElement map_element(const FieldElement& a, const FieldElement& image) {
  FieldElement acc = FieldElement::zero(image.field());
  const auto& c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image + FieldElement::from_rational(image.field(), *it);
  return acc;
}

std::optional<FieldElement> embed_generator(const FieldPtr& from, const FieldPtr& to) {
  if (from->is_rational()) return FieldElement::from_rational(to, from->root().rational_value());
  if (to->is_rational() || from->degree() != to->degree()) return std::nullopt;
  if (from->same_as(*to)) return FieldElement::generator(to);
  const Polynomial& f = from->minpoly();
  FieldElement lo = FieldElement::from_rational(to, from->root().lo());
  FieldElement hi = FieldElement::from_rational(to, from->root().hi());
  FieldElement e = FieldElement::one(to);
  const FieldElement g = FieldElement::generator(to);
  for (unsigned j = 1; j <= 128; ++j) {
    e = e * g;
    FieldElement value = FieldElement::zero(to);
    for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it)
      value = value * e + FieldElement::from_rational(to, *it);
    if (value.is_zero() && (e - lo).sign() > 0 && (hi - e).sign() > 0) return e;
  }
  return std::nullopt;
}

namespace {

struct Presented {
  std::vector<FieldElement> generators;
  FieldElement lambda;
};

Presented present(const ErgodicMeasure& mu, const FieldElement& image) {
  Presented p{{}, map_element(mu.lambda, image)};
  for (const auto& xi : mu.x) p.generators.push_back(map_element(xi, image));
  return p;
}

}  // namespace

GroupEquality group_equal(const ErgodicMeasure& mu1, const ErgodicMeasure& mu2) {
  GroupEquality out;
  if (mu1.field->degree() != mu2.field->degree()) {
    // G spans Q(lambda) over Q, so groups in fields of different degree differ
    out.reason = "field degrees differ (" + std::to_string(mu1.field->degree()) + " vs " +
                 std::to_string(mu2.field->degree()) + ")";
    return out;
  }
  FieldPtr common;
  std::optional<Presented> p1, p2;
  if (auto img = embed_generator(mu2.field, mu1.field)) {
    common = mu1.field;
    p1 = present(mu1, FieldElement::generator(common));
    p2 = present(mu2, *img);
    if (!mu2.field->is_rational() && !mu2.field->same_as(*mu1.field))
      out.field_relation = "lambda2 = " + img->to_string() + " in Q(lambda1)";
  } else if (auto img2 = embed_generator(mu1.field, mu2.field)) {
    common = mu2.field;
    p1 = present(mu1, *img2);
    p2 = present(mu2, FieldElement::generator(common));
    out.field_relation = "lambda1 = " + img2->to_string() + " in Q(lambda2)";
  } else {
    out.reason = "the fields Q(lambda1) and Q(lambda2) could not be identified";
    return out;
  }
  LatticeGroup g1 = make_lattice(common, p1->generators, p1->lambda);
  LatticeGroup g2 = make_lattice(common, p2->generators, p2->lambda);

  // G1 is contained in G2 iff H1 lies in G2 and G2 is stable under 1/lambda1
  // (checked on the generators of H2); symmetrically for the other side.
  auto run = [&](const std::string& what, const LatticeGroup& source, const FieldElement& factor,
                 const LatticeGroup& target) {
    bool all = true;
    for (std::size_t j = 0; j < source.rank(); ++j) {
      FieldElement v = factor * source.basis_element(j);
      auto verdict = member_G(target, v);
      out.checks.push_back({what, v.to_string(), verdict.member, verdict.exponent});
      all = all && verdict.member;
    }
    return all;
  };
  FieldElement one = FieldElement::one(common);
  bool ok = run("H1 in G2", g1, one, g2);
  ok = run("H2 / lambda1 in G2", g2, p1->lambda.inverse(), g2) && ok;
  ok = run("H2 in G1", g2, one, g1) && ok;
  ok = run("H1 / lambda2 in G1", g1, p2->lambda.inverse(), g1) && ok;
  out.equal = ok;
  out.reason = ok ? "every generator check passed" : "some generator lies outside the other group";
  return out;
}

}  // namespace bratteli
