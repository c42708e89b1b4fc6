#include "bratteli/exact/matrix.hpp"

#include <sstream>
#include <utility>

namespace bratteli::exact {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned exponent) {
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

void column_combine(IntMatrix& a, std::size_t ci, std::size_t cj, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v) {
  // (col_i, col_j) <- (s*col_i + t*col_j, u*col_i + v*col_j)
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer x = a(r, ci), y = a(r, cj);
    a(r, ci) = s * x + t * y;
    a(r, cj) = u * x + v * y;
  }
}

void column_axpy(IntMatrix& a, std::size_t target, std::size_t source, const Integer& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, target) -= f * a(r, source);
}

void column_swap(IntMatrix& a, std::size_t ci, std::size_t cj) {
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, ci), a(r, cj));
}

void column_negate(IntMatrix& a, std::size_t c) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) = -a(r, c);
}

}  // namespace

std::optional<HermiteForm> column_hermite_form(const IntMatrix& input) {
  const std::size_t k = input.rows(), n = input.cols();
  if (n < k) return std::nullopt;
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t pivot = n;
    for (std::size_t j = i; j < n; ++j)
      if (a(i, j) != 0) {
        pivot = j;
        break;
      }
    if (pivot == n) return std::nullopt;
    if (pivot != i) {
      column_swap(a, i, pivot);
      column_swap(u, i, pivot);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      Integer x = a(i, i), y = a(i, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Integer yg = y / g, xg = x / g;
      column_combine(a, i, j, s, t, -yg, xg);
      column_combine(u, i, j, s, t, -yg, xg);
    }
    if (a(i, i) < 0) {
      column_negate(a, i);
      column_negate(u, i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      Integer f = floor_div(a(i, j), a(i, i));
      column_axpy(a, j, i, f);
      column_axpy(u, j, i, f);
    }
  }
  HermiteForm out;
  out.basis = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.basis(i, j) = a(i, j);
  out.transform = std::move(u);
  return out;
}

std::vector<Rational> solve_lower_triangular(const IntMatrix& lower, const std::vector<Rational>& b) {
  const std::size_t k = lower.rows();
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational acc = b[i];
    for (std::size_t j = 0; j < i; ++j) acc -= Rational(lower(i, j)) * x[j];
    if (lower(i, i) == 0) fail(ErrorKind::DivisionByZero, "singular triangular system");
    x[i] = acc / Rational(lower(i, i));
  }
  return x;
}

namespace {

// Row echelon form in place; returns rank and the sign/product bookkeeping
// needed for the determinant.
std::size_t eliminate(RatMatrix& m, Rational* det) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) {
      if (det) *det = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      if (det) *det = -*det;
    }
    if (det) *det *= m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::Precondition, "determinant of non-square matrix");
  RatMatrix w = m;
  Rational det;
  std::size_t r = eliminate(w, &det);
  return r == m.rows() ? det : Rational(0);
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  return eliminate(w, nullptr);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorKind::Precondition, "inverse of non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(c, j));
    Rational inv = 1 / aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      Rational f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<Integer> characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) fail(ErrorKind::Precondition, "characteristic polynomial of non-square matrix");
  if (n == 0) return {Integer(1)};
  // Berkowitz: vect holds det(tI - A_r) for the leading r x r block, highest
  // degree first.
  std::vector<Integer> vect = {Integer(1), Integer(-a(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Integer> q(r + 2);
    q[0] = 1;
    q[1] = -a(r, r);
    // powers: w = A_{r-1}^j * C
    std::vector<Integer> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * w[i];
      q[k] = -dot;
      if (k == r + 1) break;
      std::vector<Integer> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * w[j];
      w = std::move(next);
    }
    std::vector<Integer> out(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += q[i - j] * vect[j];
    vect = std::move(out);
  }
  return std::vector<Integer>(vect.rbegin(), vect.rend());
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace bratteli::exact
