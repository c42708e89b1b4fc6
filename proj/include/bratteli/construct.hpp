#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bratteli/goodness.hpp"

namespace bratteli {

struct Budgets {
  unsigned max_r = 16;
  unsigned max_n = 32;
  Integer coeff_bound = 1000000;
  std::size_t max_vertices = 512;
};

/// Postconditions recomputed from scratch on the constructed diagram.
struct Verification {
  bool group_equal = false;
  bool source_good = false;
  bool result_good = false;
  std::size_t source_minimal_components = 0;
  std::size_t result_minimal_components = 0;
  /// Count predicted from the structure of the result. For an extension this
  /// is source + 1, minus one when the defining class was itself minimal
  /// (the new vertex feeds into it, so it stops being minimal).
  std::size_t expected_minimal_components = 0;
  bool class_was_minimal = false;
  bool eigen_identity = false;  // Q z = psi z for the reported eigenpair
  bool all_passed() const;
  bool minimal_components_increased() const { return result_minimal_components == source_minimal_components + 1; }
};

struct ConstructionResult {
  Diagram diagram;
  ErgodicMeasure measure;
  std::size_t minimal_components = 0;
  Verification verification;
  // extension details (zero when not applicable)
  unsigned r = 0, n = 0, m = 0;  // psi = lambda^m with m = r + n
  Integer self_loops = 0;        // q_{new,new}
  std::vector<Integer> new_row;  // q_{new,j} over the class vertices
  std::string note;
};

/// Rational family: i = 0 gives the q x q matrix with lambda-1
/// on the diagonal, a cyclic superdiagonal of ones; i >= 1 gives
/// q*lambda^(i+1) vertices with i minimal 2-odometer components.
/// `source` (optional) is the measure whose group the family should match.
ConstructionResult build_rational_family(const Integer& q, const Integer& lambda, unsigned i,
                                         const ErgodicMeasure* source = nullptr, std::size_t max_vertices = 512);

/// Adds one vertex carrying a new minimal component to the diagram of a good
/// measure with irrational lambda.
ConstructionResult extend_with_minimal_component(const ErgodicMeasure& mu, const Budgets& budgets = {});

/// Simple diagram whose unique measure has the same group as mu.
ConstructionResult collapse_to_simple(const ErgodicMeasure& mu, const Budgets& budgets = {});

/// The class of `result` that plays the role of the source's class.
std::size_t class_of_vertex(const Diagram& d, std::size_t vertex);

}  // namespace bratteli
