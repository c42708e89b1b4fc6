#include "bratteli/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace bratteli {

namespace {

using Graph = std::vector<std::vector<std::size_t>>;

// successors of w: every v with F(v, w) > 0 (edge w -> v between levels)
Graph successors(const IntMatrix& f) {
  Graph g(f.rows());
  for (std::size_t w = 0; w < f.rows(); ++w)
    for (std::size_t v = 0; v < f.rows(); ++v)
      if (f(v, w) > 0) g[w].push_back(v);
  return g;
}

// Tarjan's algorithm; returns component index per vertex.
std::vector<std::size_t> strongly_connected(const Graph& g, std::size_t& count) {
  const std::size_t n = g.size();
  const std::size_t unset = n;
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t next = 0;
  count = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : g[v]) {
      if (index[w] == unset) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      for (;;) {
        std::size_t w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = count;
        if (w == v) break;
      }
      ++count;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == unset) visit(v);
  return comp;
}

std::vector<std::vector<bool>> closure(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> todo = {s};
    r[s][s] = true;
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      for (std::size_t w : g[v])
        if (!r[s][w]) {
          r[s][w] = true;
          todo.push_back(w);
        }
    }
  }
  return r;
}

std::optional<Integer> constant_line_sum(const IntMatrix& m, bool rows) {
  std::optional<Integer> common;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += rows ? m(i, j) : m(j, i);
    if (common && *common != s) return std::nullopt;
    common = s;
  }
  return common;
}

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  fail(ErrorKind::InvalidDiagram, where + ": " + what);
}

}  // namespace

Diagram::Diagram(IntMatrix incidence, std::string name) : f_(std::move(incidence)), name_(std::move(name)) {
  const std::size_t n = f_.rows();
  if (n == 0) invalid("incidence", "empty matrix");
  if (f_.cols() != n) invalid("incidence", "matrix is not square");
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (f_(v, w) < 0) invalid("incidence[" + std::to_string(v) + "][" + std::to_string(w) + "]", "negative entry");
  for (std::size_t v = 0; v < n; ++v) {
    bool row = false, col = false;
    for (std::size_t w = 0; w < n; ++w) {
      row = row || f_(v, w) > 0;
      col = col || f_(w, v) > 0;
    }
    if (!row) invalid("incidence[" + std::to_string(v) + "]", "zero row (vertex " + std::to_string(v) + " has no incoming edges)");
    if (!col) invalid("incidence column " + std::to_string(v), "zero column (vertex " + std::to_string(v) + " has no outgoing edges)");
  }
  std::size_t count = 0;
  auto comp = strongly_connected(successors(f_), count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  for (std::size_t v = 0; v < n; ++v)
    if (sizes[comp[v]] == 1 && f_(v, v) == 0)
      invalid("vertex " + std::to_string(v), "lies on no cycle (its diagonal block would be the 1x1 zero matrix)");
}

Diagram parse_diagram(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    invalid("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!doc.is_object()) invalid("document", "expected a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "incidence") invalid("key \"" + key + "\"", "unknown field");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) invalid("name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("incidence")) invalid("incidence", "missing field");
  const auto& rows = doc["incidence"];
  if (!rows.is_array() || rows.empty()) invalid("incidence", "expected a nonempty array of rows");
  const std::size_t n = rows.size();
  IntMatrix f(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& row = rows[v];
    std::string where = "incidence[" + std::to_string(v) + "]";
    if (!row.is_array()) invalid(where, "expected an array");
    if (row.size() != n) invalid(where, "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    for (std::size_t w = 0; w < n; ++w) {
      const auto& e = row[w];
      std::string at = where + "[" + std::to_string(w) + "]";
      if (e.is_number_integer() && !e.is_number_unsigned()) invalid(at, "negative entry");
      if (!e.is_number_unsigned()) invalid(at, "expected a nonnegative integer");
      f(v, w) = Integer(std::to_string(e.get<std::uint64_t>()));
    }
  }
  return Diagram(std::move(f), std::move(name));
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidDiagram, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_diagram(buf.str());
  } catch (const Error& e) {
    fail(e.kind(), path + ": " + e.what());
  }
}

std::string diagram_to_json(const Diagram& d) {
  std::ostringstream os;
  os << "{\n";
  if (!d.name().empty()) os << "  \"name\": " << nlohmann::json(d.name()).dump() << ",\n";
  os << "  \"incidence\": [\n";
  const auto& f = d.incidence();
  for (std::size_t v = 0; v < d.size(); ++v) {
    os << "    [";
    for (std::size_t w = 0; w < d.size(); ++w) os << (w ? ", " : "") << f(v, w).get_str();
    os << "]" << (v + 1 < d.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

PerronRoot perron_root(const IntMatrix& block) {
  for (bool rows : {true, false}) {
    if (auto s = constant_line_sum(block, rows)) {
      check_consistency(*s > 0, "Perron root of a class block must be positive");
      return {RealAlgebraic::from_rational(exact::Rational(*s)), Polynomial({exact::Rational(-*s), exact::Rational(1)})};
    }
  }
  auto cp = exact::characteristic_polynomial(block);
  Polynomial p(std::vector<exact::Rational>(cp.begin(), cp.end()));
  std::optional<PerronRoot> best;
  for (const auto& [factor, mult] : exact::factor_over_rationals(p)) {
    auto roots = exact::isolate_real_roots(factor);
    if (roots.empty()) continue;
    if (!best || exact::compare_real(roots.back(), best->value) == std::strong_ordering::greater) {
      best = PerronRoot{roots.back(), factor};
    }
  }
  check_consistency(best.has_value(), "class block without real eigenvalue");
  check_consistency(exact::compare_real(best->value, RealAlgebraic::from_rational(0)) == std::strong_ordering::greater,
                    "Perron root of a class block must be positive");
  return *best;
}

ClassDecomposition decompose_classes(const Diagram& d) {
  const std::size_t n = d.size();
  const IntMatrix& f = d.incidence();
  Graph g = successors(f);
  std::size_t count = 0;
  auto comp = strongly_connected(g, count);

  // condensation edges: class of w -> class of v
  std::vector<std::vector<bool>> edge(count, std::vector<bool>(count, false));
  std::vector<std::size_t> min_vertex(count, n);
  for (std::size_t w = 0; w < n; ++w) {
    min_vertex[comp[w]] = std::min(min_vertex[comp[w]], w);
    for (std::size_t v : g[w])
      if (comp[v] != comp[w]) edge[comp[w]][comp[v]] = true;
  }
  // Kahn: a class is ready once every class with an edge into it is placed
  std::vector<std::size_t> indeg(count, 0), order;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      if (edge[a][b]) ++indeg[b];
  using Item = std::pair<std::size_t, std::size_t>;  // (min vertex, component)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t c = 0; c < count; ++c)
    if (indeg[c] == 0) ready.push({min_vertex[c], c});
  while (!ready.empty()) {
    std::size_t c = ready.top().second;
    ready.pop();
    order.push_back(c);
    for (std::size_t b = 0; b < count; ++b)
      if (edge[c][b] && --indeg[b] == 0) ready.push({min_vertex[b], b});
  }
  check_consistency(order.size() == count, "condensation must be acyclic");

  std::vector<std::size_t> rank(count);
  for (std::size_t i = 0; i < count; ++i) rank[order[i]] = i;

  ClassDecomposition out;
  out.class_of.resize(n);
  out.classes.resize(count);
  for (std::size_t v = 0; v < n; ++v) {
    out.class_of[v] = rank[comp[v]];
    out.classes[rank[comp[v]]].members.push_back(v);
  }
  Graph cg(count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      if (edge[a][b]) cg[rank[a]].push_back(rank[b]);
  auto reach = closure(cg);  // reach[b][a]: path from class b to class a
  out.access.assign(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) out.access[a][b] = reach[b][a];

  for (std::size_t c = 0; c < count; ++c) {
    auto& cls = out.classes[c];
    auto pr = perron_root(f.submatrix(cls.members, cls.members));
    cls.perron = pr.value;
    cls.perron_minpoly = pr.minpoly;
    for (auto v : cls.members) out.permutation.push_back(v);
  }
  for (std::size_t a = 0; a < count; ++a) {
    auto& cls = out.classes[a];
    cls.minimal = cls.initial = cls.distinguished = true;
    for (std::size_t b = 0; b < count; ++b) {
      if (out.strictly_above(a, b)) {
        cls.minimal = false;
        if (exact::compare_real(cls.perron, out.classes[b].perron) != std::strong_ordering::greater)
          cls.distinguished = false;
      }
      if (out.strictly_above(b, a)) cls.initial = false;
    }
    cls.final_class = cls.minimal;
  }
  return out;
}

std::vector<Integer> heights(const Diagram& d, unsigned n) {
  if (n == 0) fail(ErrorKind::Precondition, "heights are defined for levels n >= 1");
  std::vector<Integer> h(d.size(), Integer(1));
  for (unsigned level = 1; level < n; ++level) h = d.incidence() * h;
  return h;
}

std::vector<DistinguishedEigenvalue> distinguished_eigenvalues(const ClassDecomposition& c) {
  std::vector<DistinguishedEigenvalue> out;
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    if (c.classes[i].distinguished) out.push_back({i, c.classes[i].perron, c.classes[i].perron_minpoly});
  return out;
}

std::vector<DistinguishedEigenvalue> distinguished_eigenvalues(const Diagram& d) {
  return distinguished_eigenvalues(decompose_classes(d));
}

std::size_t count_minimal_components(const Diagram& d) {
  auto c = decompose_classes(d);
  return static_cast<std::size_t>(
      std::count_if(c.classes.begin(), c.classes.end(), [](const VertexClass& v) { return v.minimal; }));
}

bool is_primitive(const IntMatrix& block) {
  const std::size_t n = block.rows();
  Graph g = successors(block);
  std::size_t count = 0;
  strongly_connected(g, count);
  if (count != 1) return false;
  // period = gcd over edges u -> v of level(u) + 1 - level(v), BFS levels
  std::vector<long> level(n, -1);
  std::queue<std::size_t> q;
  level[0] = 0;
  q.push(0);
  long period = 0;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v : g[u]) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        q.push(v);
      } else {
        period = std::gcd(period, std::labs(level[u] + 1 - level[v]));
      }
    }
  }
  return period == 1;
}

bool is_simple(const Diagram& d) {
  auto c = decompose_classes(d);
  return c.classes.size() == 1 && is_primitive(d.incidence());
}

}  // namespace bratteli
