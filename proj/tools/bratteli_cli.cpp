// Command-line front end: analyze, member, good, enumerate, equal, construct.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bratteli/error.hpp"
#include "bratteli/report.hpp"

using namespace bratteli;
using report::ordered_json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitSearchFailed = 3;
constexpr int kExitInternal = 1;

Integer parse_integer(const std::string& flag, const std::string& text) {
  Rational r;
  try {
    r = exact::parse_rational(text);
  } catch (const Error&) {
    fail(ErrorKind::Precondition, flag + ": expected an integer, got \"" + text + "\"");
  }
  if (!exact::is_integer(r)) fail(ErrorKind::Precondition, flag + ": expected an integer, got \"" + text + "\"");
  return r.get_num();
}

struct Options {
  bool json = false;
  unsigned max_r = 16;
  unsigned max_n = 32;
  std::string coeff_bound = "1000000";
  std::size_t enum_budget = kDefaultEnumerationBudget;

  Budgets budgets() const {
    Budgets b;
    b.max_r = max_r;
    b.max_n = max_n;
    b.coeff_bound = parse_integer("--coeff-bound", coeff_bound);
    return b;
  }
};

std::size_t default_class(const ClassDecomposition& c) {
  for (std::size_t i = c.classes.size(); i-- > 0;)
    if (c.classes[i].distinguished) return i;
  fail(ErrorKind::InternalConsistency, "a diagram always has a distinguished class");
}

ErgodicMeasure load_measure(const std::string& path, std::optional<std::size_t> class_id) {
  Diagram d = load_diagram(path);
  ClassDecomposition c = decompose_classes(d);
  std::size_t id = class_id ? *class_id : default_class(c);
  if (id >= c.classes.size())
    fail(ErrorKind::UnknownClass, "class " + std::to_string(id) + " does not exist (diagram has " +
                                      std::to_string(c.classes.size()) + " classes)");
  return build_measure(d, c, id);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto e : v) s += (s.empty() ? "" : ",") + std::to_string(e);
  return "{" + s + "}";
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void print_analysis(const ordered_json& r) {
  const auto& d = r["diagram"];
  std::cout << "diagram" << (d.contains("name") ? " \"" + d["name"].get<std::string>() + "\"" : std::string()) << ": "
            << d["incidence"].size() << " vertices\n\nclasses:\n";
  for (const auto& c : r["classes"]) {
    std::cout << "  [" << c["id"] << "] " << join(c["members"].get<std::vector<std::size_t>>()) << "  rho = "
              << c["perron"]["approx"].get<std::string>() << " (" << c["perron"]["minpoly"].get<std::string>() << ")";
    for (const char* flag : {"minimal", "initial", "distinguished"})
      if (c[flag].get<bool>()) std::cout << " " << flag;
    std::cout << "\n";
  }
  for (const auto& m : r["measures"]) {
    std::cout << "\nmeasure of class " << m["class"] << ": lambda = " << m["lambda"]["approx"].get<std::string>()
              << ", minpoly " << m["lambda"]["minpoly"].get<std::string>() << ", interval ["
              << m["lambda"]["interval"][0].get<std::string>() << ", " << m["lambda"]["interval"][1].get<std::string>()
              << "]\n";
    for (const auto& x : m["vector"])
      std::cout << "  x[" << x["vertex"] << "] = " << x["expression"].get<std::string>() << "  ~ "
                << x["approx"].get<std::string>() << "\n";
    const auto& g = m["goodness"];
    std::cout << "  good: " << (g["good"].get<bool>() ? "yes" : "no") << " (" << g["branch"].get<std::string>();
    if (!g["exponent"].is_null()) std::cout << ", R = " << g["exponent"];
    if (!g["residual"].is_null()) std::cout << ", residual " << g["residual"].get<std::string>();
    std::cout << ")\n";
    if (!m["rational"].is_null()) {
      const auto& q = m["rational"];
      std::cout << "  rational: q = " << q["q"].get<std::string>() << ", multiplicative "
                << (q["multiplicative"].get<bool>() ? "yes" : "no");
      if (!q["bernoulli_type"].is_null()) std::cout << ", Bernoulli type " << (q["bernoulli_type"].get<bool>() ? "yes" : "no");
      std::cout << "\n";
    }
    std::cout << "  quotient condition fails: 1/" << m["quotient_witness"]["prime"].get<std::string>() << " not in S\n";
  }
  for (const auto& i : r["infinite"]) std::cout << "\nclass " << i["class"] << ": infinite measure (not reported)\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::Precondition, path + ": cannot write");
  f << content;
}

void emit_construction(const Options& opt, const ConstructionResult& r, const std::string& op, const std::string& out) {
  ordered_json v = report::construction(r, op);
  if (!out.empty()) {
    write_file(out, diagram_to_json(r.diagram));
    write_file(out + ".verification.json", v.dump(2) + "\n");
  }
  if (opt.json) {
    print_json({{"diagram", report::diagram(r.diagram)}, {"verification", v}});
    return;
  }
  if (out.empty()) std::cout << diagram_to_json(r.diagram);
  else std::cout << "wrote " << out << " and " << out << ".verification.json\n";
  const auto& ver = v["verification"];
  std::cout << "vertices " << r.diagram.size() << ", minimal components " << r.minimal_components << "\n";
  for (const char* key : {"group_equal", "source_good", "result_good", "eigen_identity", "minimal_components_increased"}) {
    if (op != "extend" && std::string(key) == "minimal_components_increased") continue;
    std::cout << "  " << key << ": " << (ver[key].get<bool>() ? "true" : "false") << "\n";
  }
  if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SearchFailed:
      return kExitSearchFailed;
    case ErrorKind::InternalConsistency:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of finite ergodic measures on stationary Bratteli diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--max-r", opt.max_r, "largest R tried by the extension search")->capture_default_str();
  app.add_option("--max-n", opt.max_n, "largest N (or power M for simplify)")->capture_default_str();
  app.add_option("--coeff-bound", opt.coeff_bound, "bound on constructed matrix entries")->capture_default_str();
  app.add_option("--enum-budget", opt.enum_budget, "largest grid enumerated by `enumerate`")->capture_default_str();

  std::string file, file_b, value, out;
  std::optional<std::size_t> class_id, class_b;
  unsigned level = 1, index = 0;
  std::string q_text, lambda_text;

  auto* analyze = app.add_subcommand("analyze", "classify every finite ergodic measure");
  analyze->add_option("file", file, "diagram JSON")->required();

  auto* member = app.add_subcommand("member", "decide membership of a value in S(mu)");
  member->add_option("file", file)->required();
  member->add_option("--class", class_id, "class id (default: last distinguished class)");
  member->add_option("--value", value, "expression in l, e.g. \"3 - l\"")->required();

  auto* good = app.add_subcommand("good", "decide goodness of a measure");
  good->add_option("file", file)->required();
  good->add_option("--class", class_id);

  auto* enumerate = app.add_subcommand("enumerate", "list the clopen values reached at one level");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--class", class_id);
  enumerate->add_option("--level", level)->capture_default_str()->check(CLI::PositiveNumber);

  auto* equal = app.add_subcommand("equal", "compare the groups of two measures");
  equal->add_option("file_a", file)->required();
  equal->add_option("file_b", file_b)->required();
  equal->add_option("--class-a", class_id);
  equal->add_option("--class-b", class_b);

  auto* construct = app.add_subcommand("construct", "build a diagram carrying a homeomorphic measure");
  construct->require_subcommand(1);
  auto* rational = construct->add_subcommand("rational", "rational family member with i minimal components");
  rational->add_option("--q", q_text)->required();
  rational->add_option("--lambda", lambda_text)->required();
  rational->add_option("--i", index)->capture_default_str();
  rational->add_option("--source", file, "measure whose group the result must match");
  rational->add_option("--class", class_id);
  auto* extend = construct->add_subcommand("extend", "add one minimal component (irrational lambda)");
  extend->add_option("file", file)->required();
  extend->add_option("--class", class_id);
  auto* simplify = construct->add_subcommand("simplify", "simple diagram with the same group");
  simplify->add_option("file", file)->required();
  simplify->add_option("--class", class_id);
  for (auto* sub : {rational, extend, simplify}) sub->add_option("--out", out, "write the diagram here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) {
      ordered_json r = report::analysis(load_diagram(file));
      opt.json ? print_json(r) : print_analysis(r);
    } else if (*member) {
      ErgodicMeasure mu = load_measure(file, class_id);
      FieldElement v = exact::parse_field_element(mu.field, value);
      ordered_json r = report::membership(member_S(mu, v), v);
      if (opt.json) {
        print_json(r);
      } else {
        std::cout << v.to_string() << (r["member"].get<bool>() ? " is" : " is not") << " in S(mu)";
        if (!r["exponent"].is_null()) std::cout << " (exponent " << r["exponent"] << ")";
        if (!r["in_range"].get<bool>()) std::cout << " (outside [0, 1])";
        std::cout << "\n";
      }
    } else if (*good) {
      ErgodicMeasure mu = load_measure(file, class_id);
      ordered_json r = {{"class", mu.class_id}};
      r.update(report::goodness(is_good(mu)));
      if (opt.json) {
        print_json(r);
      } else {
        std::cout << "class " << mu.class_id << ": " << (r["good"].get<bool>() ? "good" : "not good") << " ("
                  << r["branch"].get<std::string>();
        if (!r["exponent"].is_null()) std::cout << ", R = " << r["exponent"];
        if (!r["residual"].is_null()) std::cout << ", residual " << r["residual"].get<std::string>();
        std::cout << ")\n";
      }
    } else if (*enumerate) {
      ErgodicMeasure mu = load_measure(file, class_id);
      auto values = enumerate_level_values(mu, level, opt.enum_budget);
      ordered_json r = report::enumeration(mu, level, values);
      if (opt.json) {
        print_json(r);
      } else {
        std::cout << values.size() << " values at level " << level << "\n";
        for (const auto& v : r["values"])
          std::cout << "  " << v["expression"].get<std::string>() << "  ~ " << v["approx"].get<std::string>() << "\n";
      }
    } else if (*equal) {
      ErgodicMeasure a = load_measure(file, class_id), b = load_measure(file_b, class_b);
      ordered_json r = report::equality(group_equal(a, b));
      if (opt.json) {
        print_json(r);
      } else {
        std::cout << (r["equal"].get<bool>() ? "equal" : "not equal") << ": " << r["reason"].get<std::string>() << "\n";
      }
    } else if (*construct) {
      Budgets budgets = opt.budgets();
      if (*rational) {
        Integer q = parse_integer("--q", q_text), lambda = parse_integer("--lambda", lambda_text);
        std::optional<ErgodicMeasure> source;
        if (!file.empty()) source = load_measure(file, class_id);
        auto r = build_rational_family(q, lambda, index, source ? &*source : nullptr, budgets.max_vertices);
        emit_construction(opt, r, "rational", out);
      } else if (*extend) {
        emit_construction(opt, extend_with_minimal_component(load_measure(file, class_id), budgets), "extend", out);
      } else {
        emit_construction(opt, collapse_to_simple(load_measure(file, class_id), budgets), "simplify", out);
      }
    }
  } catch (const Error& e) {
    if (opt.json)
      print_json({{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}});
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
