#pragma once

#include <optional>
#include <vector>

#include "bratteli/diagram.hpp"
#include "bratteli/exact/number_field.hpp"

namespace bratteli {

using exact::FieldElement;
using exact::FieldPtr;
using exact::Rational;

/// Finite ergodic invariant measure defined by a distinguished class.
struct ErgodicMeasure {
  Diagram diagram;
  ClassDecomposition classes;
  std::size_t class_id = 0;
  FieldPtr field;
  FieldElement lambda;
  std::vector<std::size_t> support;        // increasing original vertex indices
  std::vector<FieldElement> x;             // reduced vector, aligned with support
  std::vector<std::size_t> alpha_members;  // vertices of the defining class
  /// Support positions with the vertices outside the class first and the
  /// class last (outside vertices 1..m, class m+1..n); user-facing indices
  /// stay untouched.
  std::vector<std::size_t> reindex;

  std::size_t m() const { return support.size() - alpha_members.size(); }
  bool is_rational() const { return field->is_rational(); }
  bool in_support(std::size_t vertex) const;
  /// Eigenvector entry of an arbitrary vertex (zero off the support).
  FieldElement entry(std::size_t vertex) const;
  std::vector<FieldElement> full_vector() const;
};

/// Rational case: x_i = p_i / q with q the lcm of the denominators and
/// gcd(p_1, ..., p_n) = 1.
struct RationalForm {
  Integer q;
  std::vector<Integer> p;  // aligned with support
  Integer lambda;
};
std::optional<RationalForm> rational_form(const ErgodicMeasure& mu);

ErgodicMeasure build_measure(const Diagram& d, std::size_t class_id);
ErgodicMeasure build_measure(const Diagram& d, const ClassDecomposition& c, std::size_t class_id);
std::vector<ErgodicMeasure> ergodic_measures(const Diagram& d);

/// x_vertex / lambda^(n-1), zero off the support.
FieldElement cylinder_measure(const ErgodicMeasure& mu, std::size_t vertex, unsigned level);

/// Field Q(lambda) for a distinguished eigenvalue.
FieldPtr field_for(const RealAlgebraic& lambda, const Polynomial& minpoly);

/// Kernel of a square matrix over a number field, one vector per free column
/// (exact Gauss-Jordan elimination).
std::vector<std::vector<FieldElement>> kernel(std::vector<std::vector<FieldElement>> rows, const FieldPtr& field);

}  // namespace bratteli
