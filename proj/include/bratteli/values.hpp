#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bratteli/measure.hpp"

namespace bratteli {

/// Additive group H generated by finitely many elements of Q(lambda), kept as
/// a full-rank integer lattice: H = (1/den) * basis * Z^k. The group
/// G = union of multiplier^-N H is never materialized; `mul` is
/// multiplication by the multiplier in basis coordinates.
struct LatticeGroup {
  FieldPtr field;
  std::vector<FieldElement> generators;
  Integer den;
  IntMatrix basis;       // k x k, column Hermite form
  IntMatrix to_basis;    // n x k integers: basis = den * generators * to_basis
  FieldElement multiplier;
  IntMatrix mul;         // k x k, integral because multiplier * H lies in H

  std::size_t rank() const { return basis.rows(); }
  FieldElement basis_element(std::size_t j) const;
  /// Rational coordinates c with value = sum c_j basis_element(j).
  std::vector<Rational> coordinates(const FieldElement& value) const;
  /// Lattice determinant of den * H, i.e. the product of the pivots.
  Integer covolume() const;
};

/// Builds the canonical lattice; fails with internal-consistency when the
/// generators do not span Q(lambda) or the multiplier does not preserve H.
LatticeGroup make_lattice(const FieldPtr& field, std::vector<FieldElement> generators, const FieldElement& multiplier);
LatticeGroup lattice_H(const ErgodicMeasure& mu);

struct MembershipVerdict {
  bool member = false;
  bool in_range = true;             // value in [0, 1]; always true for group queries
  std::optional<unsigned> exponent; // N with multiplier^N * value in H
  /// Positive: integer coefficients over the generators of H that sum to
  /// multiplier^N * value.
  std::vector<Integer> coefficients;
  /// Negative: the fractional-part orbit in (1/d)Z^k / Z^k, cycle start index.
  Integer orbit_denominator = 1;
  std::vector<std::vector<Rational>> orbit;
  std::size_t cycle_start = 0;
};

/// Decides value in G (no range check).
MembershipVerdict member_G(const LatticeGroup& g, const FieldElement& value);
/// Decides value in S(mu) = G cap [0, 1]. Rational values are accepted for
/// any measure; other values must come from mu's field.
MembershipVerdict member_S(const ErgodicMeasure& mu, const FieldElement& value);
MembershipVerdict member_S(const ErgodicMeasure& mu, const LatticeGroup& h, const FieldElement& value);

/// Re-expresses a value in mu's field; rational values are always accepted.
FieldElement embed_value(const ErgodicMeasure& mu, const FieldElement& value);

constexpr std::size_t kDefaultEnumerationBudget = 1000000;

/// { sum_i k_i x_i / lambda^(n-1) : 0 <= k_i <= h_i^(n) }, deduplicated and
/// sorted increasingly.
std::vector<FieldElement> enumerate_level_values(const ErgodicMeasure& mu, unsigned level,
                                                 std::size_t budget = kDefaultEnumerationBudget);

struct GroupCheck {
  std::string what;  // e.g. "H1 in G2"
  std::string value;
  bool member = false;
  std::optional<unsigned> exponent;
};

struct GroupEquality {
  bool equal = false;
  std::string reason;
  /// lambda of the second measure expressed in the first measure's field,
  /// or the reverse, when the fields were identified through a power.
  std::string field_relation;
  std::vector<GroupCheck> checks;
};

/// G(mu1) == G(mu2) as subsets of the reals.
GroupEquality group_equal(const ErgodicMeasure& mu1, const ErgodicMeasure& mu2);

/// Image of the generator of `from` inside `to` when Q(from) sits in Q(to)
/// through lambda_from = lambda_to^j (j <= 128) or both are rational.
std::optional<FieldElement> embed_generator(const FieldPtr& from, const FieldPtr& to);
FieldElement map_element(const FieldElement& a, const FieldElement& image_of_generator);

}  // namespace bratteli
