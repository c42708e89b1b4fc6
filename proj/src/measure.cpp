#include "bratteli/measure.hpp"

#include <algorithm>

namespace bratteli {

bool ErgodicMeasure::in_support(std::size_t vertex) const {
  return std::binary_search(support.begin(), support.end(), vertex);
}

FieldElement ErgodicMeasure::entry(std::size_t vertex) const {
  if (vertex >= diagram.size()) fail(ErrorKind::OutOfRange, "vertex " + std::to_string(vertex) + " out of range");
  auto it = std::lower_bound(support.begin(), support.end(), vertex);
  if (it == support.end() || *it != vertex) return FieldElement::zero(field);
  return x[static_cast<std::size_t>(it - support.begin())];
}

std::vector<FieldElement> ErgodicMeasure::full_vector() const {
  std::vector<FieldElement> out;
  for (std::size_t v = 0; v < diagram.size(); ++v) out.push_back(entry(v));
  return out;
}

FieldPtr field_for(const RealAlgebraic& lambda, const Polynomial& minpoly) {
  if (lambda.is_rational()) {
    check_consistency(exact::is_integer(lambda.rational_value()), "rational Perron root must be an integer");
    return exact::NumberField::rational_integer(lambda.rational_value().get_num());
  }
  return std::make_shared<const exact::NumberField>(minpoly, lambda);
}

std::vector<std::vector<FieldElement>> kernel(std::vector<std::vector<FieldElement>> rows, const FieldPtr& field) {
  const std::size_t r = rows.size();
  const std::size_t n = r == 0 ? 0 : rows.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < r; ++c) {
    std::size_t p = row;
    while (p < r && rows[p][c].is_zero()) ++p;
    if (p == r) continue;
    std::swap(rows[p], rows[row]);
    FieldElement inv = rows[row][c].inverse();
    for (std::size_t j = c; j < n; ++j)
      if (!rows[row][j].is_zero()) rows[row][j] = rows[row][j] * inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || rows[i][c].is_zero()) continue;
      FieldElement factor = rows[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (!rows[row][j].is_zero()) rows[i][j] -= factor * rows[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(n, FieldElement::zero(field));
    v[free] = FieldElement::one(field);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

ErgodicMeasure build_measure(const Diagram& d, const ClassDecomposition& c, std::size_t class_id) {
  if (class_id >= c.classes.size()) fail(ErrorKind::UnknownClass, "unknown class id " + std::to_string(class_id));
  const VertexClass& cls = c.classes[class_id];
  if (!cls.distinguished) {
    fail(ErrorKind::InfiniteMeasureUnsupported,
         "class " + std::to_string(class_id) + " is not distinguished; its invariant measure is infinite");
  }
  FieldPtr field = field_for(cls.perron, cls.perron_minpoly);
  FieldElement lambda = FieldElement::generator(field);

  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (c.has_access(class_id, c.class_of[v])) support.push_back(v);

  const IntMatrix& f = d.incidence();
  const std::size_t n = support.size();
  std::vector<std::vector<FieldElement>> rows(n, std::vector<FieldElement>(n, FieldElement::zero(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational a(f(support[j], support[i]));  // A = F^T
      if (a != 0) rows[i][j] = FieldElement::from_rational(field, a);
      if (i == j) rows[i][j] -= lambda;
    }
  auto ker = kernel(std::move(rows), field);
  if (ker.size() != 1) {
    fail(ErrorKind::InternalConsistency,
         "eigenspace of a distinguished eigenvalue has dimension " + std::to_string(ker.size()) + ", expected 1");
  }
  std::vector<FieldElement> x = ker.front();
  FieldElement total = FieldElement::zero(field);
  for (const auto& xi : x) total += xi;
  FieldElement scale = total.inverse();
  for (auto& xi : x) {
    xi = xi * scale;
    check_consistency(xi.sign() == 1, "probability eigenvector must be positive on the support");
  }

  ErgodicMeasure mu{d, c, class_id, field, lambda, support, std::move(x), cls.members, {}};
  for (std::size_t i = 0; i < n; ++i)
    if (c.class_of[support[i]] != class_id) mu.reindex.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (c.class_of[support[i]] == class_id) mu.reindex.push_back(i);
  return mu;
}

ErgodicMeasure build_measure(const Diagram& d, std::size_t class_id) {
  return build_measure(d, decompose_classes(d), class_id);
}

std::vector<ErgodicMeasure> ergodic_measures(const Diagram& d) {
  auto c = decompose_classes(d);
  std::vector<ErgodicMeasure> out;
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    if (c.classes[i].distinguished) out.push_back(build_measure(d, c, i));
  return out;
}

FieldElement cylinder_measure(const ErgodicMeasure& mu, std::size_t vertex, unsigned level) {
  if (level == 0) fail(ErrorKind::Precondition, "cylinder levels start at 1");
  FieldElement value = mu.entry(vertex);
  if (value.is_zero()) return value;
  return value * mu.lambda.inverse().pow(level - 1);
}

std::optional<RationalForm> rational_form(const ErgodicMeasure& mu) {
  if (!mu.is_rational()) return std::nullopt;
  RationalForm out;
  out.lambda = mu.lambda.rational_value().get_num();
  out.q = 1;
  for (const auto& xi : mu.x) out.q = exact::lcm(out.q, xi.rational_value().get_den());
  Integer g = 0;
  for (const auto& xi : mu.x) {
    Rational scaled = xi.rational_value() * Rational(out.q);
    check_consistency(exact::is_integer(scaled), "q must clear every denominator");
    out.p.push_back(scaled.get_num());
    g = exact::gcd(g, out.p.back());
  }
  // follows from 1 = sum x_i lying in H; asserted defensively
  check_consistency(g == 1, "numerators of the reduced vector must be coprime");
  return out;
}

}  // namespace bratteli
