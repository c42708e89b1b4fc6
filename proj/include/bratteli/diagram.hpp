#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bratteli/exact/matrix.hpp"
#include "bratteli/exact/real_algebraic.hpp"

namespace bratteli {

using exact::Integer;
using exact::IntMatrix;
using exact::Polynomial;
using exact::RealAlgebraic;

/// Stationary Bratteli diagram. incidence(v, w) counts the edges from vertex w
/// on one level to vertex v on the next; A = F^T is the matrix acting on
/// measure eigenvectors.
class Diagram {
 public:
  /// Validates: square, nonempty, nonnegative, no zero row or column, and
  /// every vertex lies on a cycle (no 1x1 zero diagonal block).
  explicit Diagram(IntMatrix incidence, std::string name = {});

  const IntMatrix& incidence() const { return f_; }
  IntMatrix a() const { return f_.transpose(); }
  std::size_t size() const { return f_.rows(); }
  const std::string& name() const { return name_; }

 private:
  IntMatrix f_;
  std::string name_;
};

/// Parses `{"name": <optional string>, "incidence": [[uint, ...], ...]}`.
Diagram parse_diagram(std::string_view json_text);
Diagram load_diagram(const std::string& path);
std::string diagram_to_json(const Diagram& d);

struct VertexClass {
  std::vector<std::size_t> members;  // increasing
  RealAlgebraic perron = RealAlgebraic::from_rational(0);  // spectral radius of the block
  Polynomial perron_minpoly;         // irreducible factor vanishing at perron
  bool minimal = false;              // nothing strictly below
  bool final_class = false;          // "final" in the literature; same as minimal
  bool initial = false;              // nothing strictly above
  bool distinguished = false;
};

struct ClassDecomposition {
  /// Topological order of the accessibility relation: a class is listed
  /// after every class it has access to. Ties go to the smallest vertex.
  std::vector<VertexClass> classes;
  std::vector<std::size_t> class_of;  // vertex -> class index
  /// access[a][b] is true when a == b or some path leads from class b to a.
  std::vector<std::vector<bool>> access;
  /// permutation[i] is the original vertex placed at position i of the
  /// block lower triangular form.
  std::vector<std::size_t> permutation;

  bool has_access(std::size_t a, std::size_t b) const { return access[a][b]; }
  bool strictly_above(std::size_t a, std::size_t b) const { return a != b && access[a][b]; }
};

ClassDecomposition decompose_classes(const Diagram& d);

/// Perron root of a nonnegative irreducible integer block, with its minimal
/// polynomial. Blocks with constant row or column sums are answered directly.
struct PerronRoot {
  RealAlgebraic value;
  Polynomial minpoly;
};
PerronRoot perron_root(const IntMatrix& block);

/// h^(n), with h^(1) the all-ones vector and h^(n+1) = F h^(n).
std::vector<Integer> heights(const Diagram& d, unsigned n);

struct DistinguishedEigenvalue {
  std::size_t class_id;
  RealAlgebraic lambda;
  Polynomial minpoly;
};
std::vector<DistinguishedEigenvalue> distinguished_eigenvalues(const Diagram& d);
std::vector<DistinguishedEigenvalue> distinguished_eigenvalues(const ClassDecomposition& c);

std::size_t count_minimal_components(const Diagram& d);

/// Irreducible with some power strictly positive.
bool is_primitive(const IntMatrix& block);
/// Single class covering every vertex, primitive.
bool is_simple(const Diagram& d);

}  // namespace bratteli
