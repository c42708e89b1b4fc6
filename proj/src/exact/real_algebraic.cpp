#include "bratteli/exact/real_algebraic.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "bratteli/error.hpp"

namespace bratteli::exact {

namespace {

Polynomial normalize_positive(const Polynomial& p) {
  // Positive rescaling to coprime integers; preserves signs everywhere.
  Polynomial q = p.primitive();
  if ((p.leading() < 0) != (q.leading() < 0)) q = -q;
  return q;
}

std::strong_ordering from_cmp(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering reverse(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return std::strong_ordering::greater;
  if (o == std::strong_ordering::greater) return std::strong_ordering::less;
  return o;
}

std::strong_ordering compare_with_rational(RealAlgebraic a, const Rational& r) {
  for (;;) {
    if (a.is_rational()) return from_cmp(cmp(a.rational_value(), r));
    if (r <= a.lo()) return std::strong_ordering::greater;
    if (r >= a.hi()) return std::strong_ordering::less;
    if (a.poly()(r) == 0) return std::strong_ordering::equal;
    a = a.bisected();
  }
}

void isolate(const SturmSequence& sturm, const Rational& lo, const Rational& hi, std::vector<RealAlgebraic>& out) {
  int count = sturm.count_roots(lo, hi);
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(sturm.base(), lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  // Callers strip rational roots first, so mid is never a root.
  isolate(sturm, lo, mid, out);
  isolate(sturm, mid, hi, out);
}

// Shrinks an irrational root's interval to lie within [z, z + 1] for an
// integer z, so reported intervals are easy to read.
RealAlgebraic unit_aligned(RealAlgebraic r) {
  while (!r.is_rational() && r.hi() - r.lo() > 1) r = r.bisected();
  if (r.is_rational()) return r;
  Integer z = floor(r.hi());
  if (r.lo() < z && z < r.hi()) {
    const Polynomial& p = r.poly();
    if (p.sign_at(r.lo()) * p.sign_at(Rational(z)) < 0) return RealAlgebraic(p, r.lo(), Rational(z));
    return RealAlgebraic(p, Rational(z), r.hi());
  }
  return r;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  chain_.push_back(normalize_positive(p));
  if (p.degree() < 1) return;
  chain_.push_back(normalize_positive(chain_.front().derivative()));
  for (;;) {
    Polynomial r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    chain_.push_back(normalize_positive(-r));
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return sign_changes(lo) - sign_changes(hi);
}

RealAlgebraic::RealAlgebraic(Polynomial poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) fail(ErrorKind::InternalConsistency, "isolating interval with lo > hi");
  if (lo_ == hi_) {
    if (poly_(lo_) != 0) fail(ErrorKind::InternalConsistency, "rational point is not a root");
  } else if (poly_.sign_at(lo_) * poly_.sign_at(hi_) >= 0) {
    fail(ErrorKind::InternalConsistency, "isolating interval without sign change");
  }
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& r) {
  Polynomial p = Polynomial({-r, Rational(1)}).primitive();
  return RealAlgebraic(p, r, r);
}

RealAlgebraic RealAlgebraic::bisected() const {
  if (is_rational()) return *this;
  Rational mid = (lo_ + hi_) / 2;
  int s = poly_.sign_at(mid);
  if (s == 0) return RealAlgebraic(poly_, mid, mid);
  if (poly_.sign_at(lo_) * s < 0) return RealAlgebraic(poly_, lo_, mid);
  return RealAlgebraic(poly_, mid, hi_);
}

RealAlgebraic RealAlgebraic::refined(const Rational& width) const {
  RealAlgebraic r = *this;
  while (r.hi_ - r.lo_ > width) r = r.bisected();
  return r;
}

bool RealAlgebraic::contains(const Rational& x) const {
  if (is_rational()) return x == lo_;
  return lo_ < x && x < hi_;
}

double RealAlgebraic::approx() const {
  if (is_rational()) return lo_.get_d();
  Rational scale = std::max(abs(lo_), abs(hi_));
  if (scale < 1) scale = 1;
  Rational width = scale / Rational(Integer(1) << 60);
  RealAlgebraic r = refined(width);
  if (r.is_rational()) return r.lo_.get_d();
  Rational mid = (r.lo_ + r.hi_) / 2;
  return mid.get_d();
}

std::string RealAlgebraic::decimal(int significant_digits) const {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << approx();
  return os.str();
}

std::vector<RealAlgebraic> isolate_real_roots(const Polynomial& p, int max_degree) {
  if (p.is_zero()) fail(ErrorKind::Precondition, "cannot isolate roots of the zero polynomial");
  if (p.degree() > max_degree) {
    fail(ErrorKind::UnsupportedDegree, "degree " + std::to_string(p.degree()) + " exceeds root isolation bound");
  }
  std::vector<RealAlgebraic> out;
  Polynomial q = squarefree_part(p);
  if (q.degree() < 1) return out;
  for (const auto& r : rational_roots(q)) out.push_back(RealAlgebraic::from_rational(r));
  Polynomial rest = q;
  for (const auto& r : rational_roots(q)) rest = rest / Polynomial({-r, Rational(1)});
  rest = rest.primitive();
  if (rest.degree() >= 1) {
    Rational bound = 0;
    for (const auto& c : rest.coefficients()) bound = std::max(bound, Rational(abs(c) / abs(rest.leading())));
    bound += 1;
    SturmSequence sturm(rest);
    std::size_t first = out.size();
    isolate(sturm, -bound, bound, out);
    for (std::size_t i = first; i < out.size(); ++i) out[i] = unit_aligned(out[i]);
  }
  std::sort(out.begin(), out.end(), [](const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare_real(a, b) == std::strong_ordering::less;
  });
  return out;
}

std::strong_ordering compare_real(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_rational() && b.is_rational()) return from_cmp(cmp(a.rational_value(), b.rational_value()));
  if (b.is_rational()) return compare_with_rational(a, b.rational_value());
  if (a.is_rational()) return reverse(compare_with_rational(b, a.rational_value()));

  Polynomial g = gcd(a.poly(), b.poly());
  bool may_equal = false;
  std::vector<SturmSequence> common;
  if (g.degree() >= 1) {
    common.emplace_back(g);
    may_equal = common[0].count_roots(a.lo(), a.hi()) == 1 && common[0].count_roots(b.lo(), b.hi()) == 1;
  }
  RealAlgebraic x = a, y = b;
  for (;;) {
    if (x.is_rational() || y.is_rational()) return compare_real(x, y);
    if (x.hi() <= y.lo()) return std::strong_ordering::less;
    if (y.hi() <= x.lo()) return std::strong_ordering::greater;
    if (may_equal) {
      Rational lo = std::min(x.lo(), y.lo());
      Rational hi = std::max(x.hi(), y.hi());
      if (common[0].count_roots(lo, hi) == 1) return std::strong_ordering::equal;
    }
    x = x.bisected();
    y = y.bisected();
  }
}

RealAlgebraic max_real_root(const Polynomial& p, int max_degree) {
  auto roots = isolate_real_roots(p, max_degree);
  if (roots.empty()) fail(ErrorKind::InternalConsistency, "polynomial has no real root: " + p.to_string());
  return roots.back();
}

}  // namespace bratteli::exact
