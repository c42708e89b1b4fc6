#pragma once

// Independent reference computations used to cross-check the library.
// Nothing here calls into the code under test beyond plain data types.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bratteli/exact/matrix.hpp"
#include "bratteli/exact/polynomial.hpp"

namespace oracle {

using bratteli::exact::Integer;
using bratteli::exact::IntMatrix;
using bratteli::exact::Rational;

// f_1 = f_2 = 1.
inline Integer fibonacci(unsigned n) {
  Integer a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline double eval(const std::vector<double>& coeffs_low_first, double x) {
  double acc = 0;
  for (auto it = coeffs_low_first.rbegin(); it != coeffs_low_first.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<double> to_double(const bratteli::exact::Polynomial& p) {
  std::vector<double> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_d());
  return out;
}

// Plain floating bisection on a sign change.
inline double bisect(const std::vector<double>& p, double lo, double hi, double tol = 1e-12) {
  double flo = eval(p, lo);
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double fm = eval(p, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// reach[a][b]: a walk of length >= 0 leads from vertex a to vertex b along
// edges w -> v with F[v][w] > 0 (Warshall closure).
inline std::vector<std::vector<bool>> reachability(const IntMatrix& f) {
  const std::size_t n = f.rows();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    r[v][v] = true;
    for (std::size_t w = 0; w < n; ++w)
      if (f(v, w) > 0) r[w][v] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

// Dominant eigenvalue of a nonnegative matrix by power iteration on
// (M + I), which is primitive whenever M is irreducible.
inline double perron_estimate(const IntMatrix& m, int iterations = 4000) {
  const std::size_t n = m.rows();
  std::vector<double> v(n, 1.0);
  double est = 0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = v[i];
      for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j).get_d() * v[j];
    }
    double norm = 0;
    for (double x : w) norm = std::max(norm, std::abs(x));
    est = norm;
    for (auto& x : w) x /= norm;
    v = w;
  }
  return est - 1.0;
}

// Random valid incidence matrix: nonnegative entries, no zero row/column,
// no vertex forming a class on its own without a loop.
inline IntMatrix random_incidence(std::mt19937_64& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> entry(0, max_entry);
  std::bernoulli_distribution zero(0.45);
  for (;;) {
    IntMatrix f(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f(i, j) = zero(rng) ? 0 : entry(rng);
    auto reach = reachability(f);
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      bool row = false, col = false, cyclic = f(v, v) > 0;
      for (std::size_t w = 0; w < n; ++w) {
        row = row || f(v, w) > 0;
        col = col || f(w, v) > 0;
        if (w != v && reach[v][w] && reach[w][v]) cyclic = true;
      }
      ok = row && col && cyclic;
    }
    if (ok) return f;
  }
}

}  // namespace oracle
