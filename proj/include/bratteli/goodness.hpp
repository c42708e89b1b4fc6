#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bratteli/values.hpp"

namespace bratteli {

struct GoodnessVerdict {
  bool good = false;
  /// "simple" (support equals the defining class), "rational" (gcd test) or
  /// "lattice" (orbit in the quotient of H by the class lattice).
  std::string branch;
  /// Least R with lambda^R x_i in H(class entries) for every i outside the class.
  std::optional<unsigned> exponent;
  // rational branch
  std::optional<Integer> class_gcd;  // gcd of the class numerators p_j
  std::optional<Integer> residual;   // class_gcd stripped of lambda's primes
  // lattice branch
  Integer quotient_index = 1;        // [H : H(class entries)]
  std::optional<std::size_t> failing_vertex;
  std::vector<std::vector<Integer>> orbit;  // coset representatives, scaled by den
  std::size_t cycle_start = 0;
};

/// Goodness criterion on the class alpha defining mu.
GoodnessVerdict is_good(const ErgodicMeasure& mu);
/// The quotient-orbit algorithm on its own, for any measure (also k = 1).
GoodnessVerdict lattice_goodness(const ErgodicMeasure& mu);
/// Re-checks a positive certificate: lambda^R x_i has integer coordinates in
/// the class lattice for every support vertex.
bool verify_goodness_exponent(const ErgodicMeasure& mu, unsigned r);

/// Every prime factor of q divides lambda (rational, good measures only).
bool bernoulli_type_rational(const ErgodicMeasure& mu);
/// Same test, for any rational measure.
bool multiplicative_S_rational(const ErgodicMeasure& mu);

struct QuotientWitness {
  Integer prime;
  std::vector<Integer> excluded;  // the finite prime set L
  MembershipVerdict verdict;      // of 1/prime, always negative
};
QuotientWitness quotient_condition_witness(const ErgodicMeasure& mu);

}  // namespace bratteli
