#include "bratteli/report.hpp"

#include <cstdio>

#include "bratteli/error.hpp"

namespace bratteli::report {

namespace {

ordered_json strings(const std::vector<Integer>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v) out.push_back(e.get_str());
  return out;
}

ordered_json strings(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v) out.push_back(exact::to_string(e));
  return out;
}

ordered_json optional_exponent(const std::optional<unsigned>& e) { return e ? ordered_json(*e) : ordered_json(nullptr); }

}  // namespace

std::string decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

ordered_json diagram(const Diagram& d) {
  ordered_json out;
  if (!d.name().empty()) out["name"] = d.name();
  ordered_json rows = ordered_json::array();
  for (std::size_t v = 0; v < d.size(); ++v) {
    ordered_json row = ordered_json::array();
    for (std::size_t w = 0; w < d.size(); ++w) {
      const Integer& e = d.incidence()(v, w);
      if (!e.fits_ulong_p()) fail(ErrorKind::TooLarge, "incidence entry " + e.get_str() + " exceeds 64 bits");
      row.push_back(e.get_ui());
    }
    rows.push_back(row);
  }
  out["incidence"] = rows;
  return out;
}

ordered_json real_algebraic(const RealAlgebraic& r, const Polynomial& minpoly) {
  return {{"minpoly", minpoly.to_string()},
          {"interval", {exact::to_string(r.lo()), exact::to_string(r.hi())}},
          {"approx", decimal(r.approx())}};
}

ordered_json element(const FieldElement& e) {
  return {{"expression", e.to_string()}, {"coefficients", strings(e.coeffs())}, {"approx", decimal(e.approx())}};
}

ordered_json classes(const ClassDecomposition& c) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& k = c.classes[i];
    ordered_json below = ordered_json::array();
    for (std::size_t j = 0; j < c.classes.size(); ++j)
      if (c.strictly_above(i, j)) below.push_back(j);
    out.push_back({{"id", i},
                   {"members", k.members},
                   {"perron", real_algebraic(k.perron, k.perron_minpoly)},
                   {"minimal", k.minimal},
                   {"final", k.final_class},
                   {"initial", k.initial},
                   {"distinguished", k.distinguished},
                   {"accesses", below}});
  }
  return out;
}

ordered_json goodness(const GoodnessVerdict& v) {
  ordered_json out = {{"good", v.good}, {"branch", v.branch}, {"exponent", optional_exponent(v.exponent)}};
  out["class_gcd"] = v.class_gcd ? ordered_json(v.class_gcd->get_str()) : ordered_json(nullptr);
  out["residual"] = v.residual ? ordered_json(v.residual->get_str()) : ordered_json(nullptr);
  out["quotient_index"] = v.quotient_index.get_str();
  ordered_json cert;
  if (v.good) {
    cert = {{"kind", "exponent"}, {"R", *v.exponent}};
  } else {
    ordered_json orbit = ordered_json::array();
    for (const auto& s : v.orbit) orbit.push_back(strings(s));
    cert = {{"kind", v.residual ? "residual" : "orbit"},
            {"residual", v.residual ? ordered_json(v.residual->get_str()) : ordered_json(nullptr)},
            {"failing_vertex", v.failing_vertex ? ordered_json(*v.failing_vertex) : ordered_json(nullptr)},
            {"orbit", orbit},
            {"cycle_start", v.cycle_start}};
  }
  out["certificate"] = cert;
  // good, refinable and weakly refinable coincide for these measures
  out["annotations"] = {{"refinable", v.good}, {"weakly_refinable", v.good}};
  return out;
}

ordered_json membership(const MembershipVerdict& v, const FieldElement& value) {
  ordered_json out = {{"value", element(value)},
                      {"member", v.member},
                      {"in_range", v.in_range},
                      {"exponent", optional_exponent(v.exponent)}};
  if (!v.in_range) {
    out["certificate"] = {{"kind", "range"}};
  } else if (v.member) {
    out["certificate"] = {{"kind", "coefficients"}, {"coefficients", strings(v.coefficients)}};
  } else {
    ordered_json orbit = ordered_json::array();
    for (const auto& s : v.orbit) orbit.push_back(strings(s));
    out["certificate"] = {{"kind", "orbit"},
                          {"denominator", v.orbit_denominator.get_str()},
                          {"orbit", orbit},
                          {"cycle_start", v.cycle_start}};
  }
  return out;
}

ordered_json measure(const ErgodicMeasure& mu) {
  ordered_json out;
  out["class"] = mu.class_id;
  out["members"] = mu.alpha_members;
  out["lambda"] = real_algebraic(mu.field->root(), mu.field->minpoly());
  out["field_degree"] = mu.field->degree();
  out["support"] = mu.support;
  ordered_json x = ordered_json::array();
  for (std::size_t i = 0; i < mu.support.size(); ++i) {
    ordered_json e = element(mu.x[i]);
    e["vertex"] = mu.support[i];
    x.push_back(e);
  }
  out["vector"] = x;
  GoodnessVerdict good = is_good(mu);
  out["goodness"] = goodness(good);
  if (auto rf = rational_form(mu)) {
    out["rational"] = {{"q", rf->q.get_str()},
                       {"p", strings(rf->p)},
                       {"lambda", rf->lambda.get_str()},
                       {"multiplicative", multiplicative_S_rational(mu)},
                       {"bernoulli_type", good.good ? ordered_json(bernoulli_type_rational(mu)) : ordered_json(nullptr)}};
  } else {
    out["rational"] = nullptr;
  }
  QuotientWitness w = quotient_condition_witness(mu);
  out["quotient_witness"] = {{"prime", w.prime.get_str()}, {"excluded", strings(w.excluded)}, {"member", w.verdict.member}};
  return out;
}

ordered_json analysis(const Diagram& d) {
  ClassDecomposition c = decompose_classes(d);
  ordered_json out;
  out["diagram"] = diagram(d);
  out["classes"] = classes(c);
  ordered_json measures = ordered_json::array(), infinite = ordered_json::array();
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (c.classes[i].distinguished)
      measures.push_back(measure(build_measure(d, c, i)));
    else
      infinite.push_back({{"class", i}, {"flag", "infinite-measure-unsupported"}});
  }
  out["measures"] = measures;
  out["infinite"] = infinite;
  return out;
}

ordered_json enumeration(const ErgodicMeasure& mu, unsigned level, const std::vector<FieldElement>& values) {
  ordered_json list = ordered_json::array();
  for (const auto& v : values) list.push_back({{"expression", v.to_string()}, {"approx", decimal(v.approx())}});
  return {{"class", mu.class_id}, {"level", level}, {"count", values.size()}, {"values", list}};
}

ordered_json equality(const GroupEquality& e) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : e.checks)
    checks.push_back({{"what", c.what}, {"value", c.value}, {"member", c.member}, {"exponent", optional_exponent(c.exponent)}});
  return {{"equal", e.equal}, {"reason", e.reason}, {"field_relation", e.field_relation}, {"checks", checks}};
}

ordered_json construction(const ConstructionResult& r, const std::string& operation) {
  const Verification& v = r.verification;
  ordered_json out;
  out["operation"] = operation;
  out["vertices"] = r.diagram.size();
  out["minimal_components"] = r.minimal_components;
  out["measure_class"] = r.measure.class_id;
  out["psi"] = real_algebraic(r.measure.field->root(), r.measure.field->minpoly());
  if (operation == "extend") {
    out["extension"] = {{"R", r.r}, {"N", r.n}, {"M", r.m}, {"self_loops", r.self_loops.get_str()}, {"new_row", strings(r.new_row)}};
  } else if (operation == "simplify") {
    out["power"] = r.m;
  }
  out["note"] = r.note;
  out["verification"] = {{"group_equal", v.group_equal},
                         {"source_good", v.source_good},
                         {"result_good", v.result_good},
                         {"eigen_identity", v.eigen_identity},
                         {"source_minimal_components", v.source_minimal_components},
                         {"result_minimal_components", v.result_minimal_components},
                         {"expected_minimal_components", v.expected_minimal_components},
                         {"class_was_minimal", v.class_was_minimal},
                         {"minimal_components_increased", v.minimal_components_increased()},
                         {"all_passed", v.all_passed()}};
  return out;
}

}  // namespace bratteli::report
