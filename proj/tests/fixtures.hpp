#pragma once

// Small diagrams with known answers, written out by hand.

#include "bratteli/diagram.hpp"

namespace fixture {

using bratteli::Diagram;
using bratteli::exact::IntMatrix;

inline Diagram two_measures() { return Diagram(IntMatrix::from_rows({{1, 1, 0}, {1, 2, 0}, {0, 1, 3}}), "two measures"); }

inline Diagram loop_family(long n) {
  return Diagram(IntMatrix::from_rows({{2, 0, 0}, {1, n, 1}, {1, 1, n}}), "loop family");
}

// F = P^T for P = [[1,2,0],[1,2,1],[9,3,2]] acting on eigenvectors.
inline Diagram witness_p() { return Diagram(IntMatrix::from_rows({{1, 1, 9}, {2, 2, 3}, {0, 1, 2}}), "witness"); }

inline Diagram fibonacci() { return Diagram(IntMatrix::from_rows({{1, 1}, {1, 2}}), "Fibonacci"); }

inline Diagram golden_over_loop() { return Diagram(IntMatrix::from_rows({{2, 0, 0}, {1, 1, 1}, {0, 1, 2}})); }

inline Diagram dominated() { return Diagram(IntMatrix::from_rows({{3, 0}, {1, 2}})); }

}  // namespace fixture
