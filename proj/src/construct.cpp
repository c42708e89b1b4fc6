#include "bratteli/construct.hpp"

#include <algorithm>
#include <cmath>

namespace bratteli {

bool Verification::all_passed() const {
  return group_equal && result_good && eigen_identity && result_minimal_components == expected_minimal_components;
}

std::size_t class_of_vertex(const Diagram& d, std::size_t vertex) { return decompose_classes(d).class_of.at(vertex); }

namespace {

Verification verify(const ErgodicMeasure& source, const ErgodicMeasure& result, std::size_t expected_minimal) {
  Verification v;
  v.group_equal = group_equal(source, result).equal;
  v.source_good = is_good(source).good;
  v.result_good = is_good(result).good;
  v.source_minimal_components = count_minimal_components(source.diagram);
  v.result_minimal_components = count_minimal_components(result.diagram);
  v.expected_minimal_components = expected_minimal;
  return v;
}

void require_verified(const ConstructionResult& r) {
  const Verification& v = r.verification;
  if (v.all_passed()) return;
  std::string failed;
  auto note = [&](bool ok, const char* what) {
    if (!ok) failed += (failed.empty() ? "" : ", ") + std::string(what);
  };
  note(v.group_equal, "group equality");
  note(v.result_good, "goodness of the result");
  note(v.eigen_identity, "eigen identity");
  note(v.result_minimal_components == v.expected_minimal_components, "minimal component count");
  fail(ErrorKind::InternalConsistency, "construction failed its own verification: " + failed);
}

// A (rows = outgoing edges) to a validated diagram.
Diagram from_a(const IntMatrix& a, const std::string& name) { return Diagram(a.transpose(), name); }

bool all_blocks_primitive(const Diagram& d, const ClassDecomposition& c) {
  for (const auto& cls : c.classes)
    if (!is_primitive(d.incidence().submatrix(cls.members, cls.members))) return false;
  return true;
}

// Integer coordinates of the class lattice and a unimodular transform.
struct ClassSystem {
  Integer den;
  std::vector<std::size_t> alpha_positions;  // support positions of the class
  exact::HermiteForm hnf;                    // of den * (x_j), j in the class
};

ClassSystem class_system(const ErgodicMeasure& mu) {
  ClassSystem s;
  s.den = 1;
  for (const auto& xi : mu.x)
    for (const auto& c : xi.coeffs()) s.den = exact::lcm(s.den, c.get_den());
  for (std::size_t i = 0; i < mu.support.size(); ++i)
    if (mu.classes.class_of[mu.support[i]] == mu.class_id) s.alpha_positions.push_back(i);
  const std::size_t k = mu.field->degree();
  IntMatrix x(k, s.alpha_positions.size());
  for (std::size_t j = 0; j < s.alpha_positions.size(); ++j)
    for (std::size_t i = 0; i < k; ++i)
      x(i, j) = Rational(mu.x[s.alpha_positions[j]].coeffs()[i] * Rational(s.den)).get_num();
  auto h = exact::column_hermite_form(x);
  check_consistency(h.has_value(), "class entries must span a full-rank lattice");
  s.hnf = std::move(*h);
  return s;
}

// Rational coordinates of `value` against the class Hermite basis.
std::vector<Rational> class_coordinates(const ClassSystem& s, const FieldElement& value) {
  std::vector<Rational> scaled = value.coeffs();
  for (auto& e : scaled) e *= Rational(s.den);
  return exact::solve_lower_triangular(s.hnf.basis, scaled);
}

// Pulls integral basis coordinates back to coefficients over the class entries.
std::vector<Integer> to_generators(const ClassSystem& s, const std::vector<Rational>& c) {
  const std::size_t a = s.alpha_positions.size();
  std::vector<Integer> out(a);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out[i] += s.hnf.transform(i, j) * c[j].get_num();
  return out;
}

ConstructionResult make_result(const Diagram& d, const ErgodicMeasure& mu, std::size_t minimal) {
  return ConstructionResult{d, mu, minimal, {}, 0, 0, 0, 0, {}, {}};
}

bool integral(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& e) { return exact::is_integer(e); });
}

}  // namespace

ConstructionResult build_rational_family(const Integer& q, const Integer& lambda, unsigned i,
                                         const ErgodicMeasure* source, std::size_t max_vertices) {
  if (q < 2 || lambda < 2) fail(ErrorKind::Precondition, "the rational family needs q >= 2 and lambda >= 2");
  Integer lambda_i = lambda;
  for (unsigned e = 0; e < i; ++e) lambda_i *= lambda;
  Integer size = i == 0 ? q : q * lambda_i;
  if (size > Integer(std::to_string(max_vertices))) {
    fail(ErrorKind::TooLarge, "the family member needs " + size.get_str() + " vertices, limit is " +
                                  std::to_string(max_vertices));
  }
  const std::size_t n = size.get_ui();
  IntMatrix a(n, n);
  const Integer& ev = i == 0 ? lambda : lambda_i;
  const std::size_t first = i;  // first vertex of the non-minimal block
  if (n - first < 2) fail(ErrorKind::Precondition, "the non-minimal block needs at least two vertices");
  for (std::size_t r = 0; r < first; ++r) {
    a(r, r) = 2;
    a(r, n - 1) = ev - 2;
  }
  for (std::size_t r = first; r < n; ++r) {
    a(r, r) = ev - 1;
    if (r + 1 < n) a(r, r + 1) = 1;
  }
  a(n - 1, first) += 1;

  std::string name = "rational family q=" + q.get_str() + " lambda=" + lambda.get_str() + " i=" + std::to_string(i);
  Diagram d = from_a(a, name);
  auto classes = decompose_classes(d);
  ErgodicMeasure mu = build_measure(d, classes, classes.class_of[n - 1]);

  ConstructionResult out = make_result(d, mu, count_minimal_components(d));
  out.m = 1;
  // reference group: the simple i = 0 member, unless a source is given
  std::optional<ConstructionResult> reference;
  if (!source && i > 0) reference = build_rational_family(q, lambda, 0, nullptr, max_vertices);
  const ErgodicMeasure& target = source ? *source : (reference ? reference->measure : mu);
  out.verification = verify(target, mu, std::max<std::size_t>(i, 1));
  bool uniform = mu.support.size() == n;
  for (const auto& xi : mu.x) uniform = uniform && xi == FieldElement::from_rational(mu.field, Rational(Integer(1), size));
  out.verification.eigen_identity = uniform && mu.lambda == FieldElement::from_rational(mu.field, Rational(ev));
  require_verified(out);
  return out;
}

ConstructionResult extend_with_minimal_component(const ErgodicMeasure& mu, const Budgets& budgets) {
  if (mu.is_rational()) fail(ErrorKind::Precondition, "lambda is rational; use the rational family construction");
  GoodnessVerdict good = is_good(mu);
  if (!good.good) fail(ErrorKind::Precondition, "the measure is not good");
  if (!all_blocks_primitive(mu.diagram, mu.classes))
    fail(ErrorKind::Precondition, "a class block is periodic, so powers of A would split classes");

  const FieldPtr& field = mu.field;
  const std::size_t n = mu.diagram.size();
  ClassSystem sys = class_system(mu);
  const std::size_t k = field->degree(), a_count = sys.alpha_positions.size(), free_dims = a_count - k;
  const IntMatrix a = mu.diagram.a();
  const unsigned r_start = std::max<unsigned>(*good.exponent, 1);
  const FieldElement one = FieldElement::one(field);
  unsigned last_r = 0, last_n = 0;

  // Nonnegative point of particular + kernel * t within the coefficient bound,
  // scanning t lexicographically in a small box.
  auto nonnegative_point = [&](const std::vector<Integer>& particular) -> std::optional<std::vector<Integer>> {
    auto ok = [&](const std::vector<Integer>& v) {
      return std::all_of(v.begin(), v.end(), [&](const Integer& e) { return e >= 0 && e <= budgets.coeff_bound; });
    };
    if (free_dims == 0) return ok(particular) ? std::optional(particular) : std::nullopt;
    long box = 1;
    while (box < 64 && std::pow(2.0 * (box + 1) + 1, static_cast<double>(free_dims)) <= 1e5) ++box;
    std::vector<long> t(free_dims, -box);
    for (;;) {
      std::vector<Integer> v = particular;
      for (std::size_t c = 0; c < free_dims; ++c)
        for (std::size_t r = 0; r < a_count; ++r) v[r] += sys.hnf.transform(r, k + c) * t[c];
      if (ok(v)) return v;
      std::size_t c = free_dims;
      while (c > 0 && t[c - 1] == box) t[--c] = -box;
      if (c == 0) return std::nullopt;
      ++t[c - 1];
    }
  };

  for (unsigned m = r_start + 1; m <= budgets.max_r + budgets.max_n; ++m) {
    for (unsigned r = r_start; r <= std::min(budgets.max_r, m - 1); ++r) {
      unsigned nn = m - r;
      if (nn < 1 || nn > budgets.max_n) continue;
      last_r = r;
      last_n = nn;
      FieldElement psi = mu.lambda.pow(m);
      FieldElement lr1 = mu.lambda.pow(r) - one;
      // q0 (lambda^R - 1) + sum q_j x_j = lambda^M (lambda^R - 1), q0 >= 2
      for (Integer q0 = 2; q0 <= budgets.coeff_bound && q0 < 4098; ++q0) {
        FieldElement gap = psi - FieldElement::from_rational(field, Rational(q0));
        if (gap.sign() <= 0) break;
        auto c = class_coordinates(sys, gap * lr1);
        if (!integral(c)) continue;
        auto point = nonnegative_point(to_generators(sys, c));
        if (!point) continue;

        IntMatrix am = exact::matrix_power(a, m);
        IntMatrix qm(n + 1, n + 1);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) qm(i, j) = am(i, j);
        qm(n, n) = q0;
        for (std::size_t j = 0; j < a_count; ++j) qm(n, mu.support[sys.alpha_positions[j]]) = (*point)[j];

        Diagram d = from_a(qm, mu.diagram.name().empty() ? "extension" : mu.diagram.name() + " + minimal component");
        auto classes = decompose_classes(d);
        ErgodicMeasure nu = build_measure(d, classes, classes.class_of[mu.alpha_members.front()]);

        ConstructionResult out = make_result(d, nu, count_minimal_components(d));
        out.r = r;
        out.n = nn;
        out.m = m;
        out.self_loops = q0;
        out.new_row = *point;
        // z = (x / lambda^R, (lambda^R - 1) / lambda^R) over all n + 1 vertices
        FieldElement inv_r = mu.lambda.pow(r).inverse();
        std::vector<FieldElement> z = mu.full_vector();
        for (auto& e : z) e = e * inv_r;
        z.push_back(lr1 * inv_r);
        std::vector<FieldElement> qz(n + 1, FieldElement::zero(field));
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = 0; j <= n; ++j)
            if (qm(i, j) != 0) qz[i] += Rational(qm(i, j)) * z[j];
        bool identity = true;
        FieldElement total = FieldElement::zero(field);
        for (std::size_t i = 0; i <= n; ++i) {
          identity = identity && qz[i] == psi * z[i];
          total += z[i];
        }
        const bool was_minimal = mu.classes.classes[mu.class_id].minimal;
        out.verification = verify(mu, nu, count_minimal_components(mu.diagram) + (was_minimal ? 0 : 1));
        out.verification.class_was_minimal = was_minimal;
        out.verification.eigen_identity = identity && total == one;
        require_verified(out);
        return out;
      }
    }
  }
  fail(ErrorKind::SearchFailed, "no nonnegative solution within budgets; last tried R=" + std::to_string(last_r) +
                                    ", N=" + std::to_string(last_n));
}

ConstructionResult collapse_to_simple(const ErgodicMeasure& mu, const Budgets& budgets) {
  if (is_simple(mu.diagram)) {
    ConstructionResult out = make_result(mu.diagram, mu, 1);
    out.note = "input diagram is already simple";
    out.verification = verify(mu, mu, 1);
    out.verification.eigen_identity = true;
    require_verified(out);
    return out;
  }
  const IntMatrix a_full = mu.diagram.a();
  const IntMatrix a = a_full.submatrix(mu.support, mu.support);
  const std::size_t n = mu.support.size();
  ClassSystem sys = class_system(mu);
  {
    std::vector<std::size_t> alpha(sys.alpha_positions);
    if (!is_primitive(a.submatrix(alpha, alpha)))
      fail(ErrorKind::Precondition, "the defining class block is periodic");
  }
  std::vector<bool> in_alpha(n, false);
  for (auto p : sys.alpha_positions) in_alpha[p] = true;

  // q_i x_i = sum_j p_ij x_j over the class, q_i >= 1 least possible
  struct Relation {
    std::size_t position;
    Integer q;
    std::vector<Integer> p;
  };
  std::vector<Relation> relations;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_alpha[i]) continue;
    auto c = class_coordinates(sys, mu.x[i]);
    Integer q = 1;
    for (const auto& e : c) q = exact::lcm(q, e.get_den());
    for (auto& e : c) e *= Rational(q);
    relations.push_back({i, q, to_generators(sys, c)});
  }

  unsigned last_m = 0;
  for (unsigned m = 1; m <= budgets.max_n; ++m) {
    last_m = m;
    IntMatrix am = exact::matrix_power(a, m);
    for (auto row : sys.alpha_positions) {
      IntMatrix t = am;
      for (const auto& rel : relations) {
        t(row, rel.position) += rel.q;
        for (std::size_t j = 0; j < sys.alpha_positions.size(); ++j) t(row, sys.alpha_positions[j]) -= rel.p[j];
      }
      bool nonnegative = true;
      for (std::size_t j = 0; j < n; ++j) nonnegative = nonnegative && t(row, j) >= 0;
      if (!nonnegative || !is_primitive(t)) continue;

      Diagram d = from_a(t, mu.diagram.name().empty() ? "simple" : mu.diagram.name() + " (simple)");
      ErgodicMeasure nu = build_measure(d, 0);
      ConstructionResult out = make_result(d, nu, count_minimal_components(d));
      out.m = m;
      out.note = "row " + std::to_string(row) + " of A^" + std::to_string(m) + " modified";
      // A~ x = lambda^M x on the support vertices
      FieldElement psi = mu.lambda.pow(m);
      bool identity = true;
      for (std::size_t i = 0; i < n; ++i) {
        FieldElement acc = FieldElement::zero(mu.field);
        for (std::size_t j = 0; j < n; ++j)
          if (t(i, j) != 0) acc += Rational(t(i, j)) * mu.x[j];
        identity = identity && acc == psi * mu.x[i];
      }
      out.verification = verify(mu, nu, 1);
      out.verification.eigen_identity = identity;
      require_verified(out);
      return out;
    }
  }
  fail(ErrorKind::SearchFailed, "no nonnegative relation row found up to M=" + std::to_string(last_m));
}

}  // namespace bratteli
