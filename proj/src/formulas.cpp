// Copyright 2026 The stabkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stabkit/formulas.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "stabkit/errors.hpp"
#include "stabkit/text.hpp"

namespace stabkit {

InequalitySystem cnf_to_system(const Cnf& cnf, bool include_box) {
  std::vector<LinearInequality> ineqs;
  ineqs.reserve(cnf.clauses.size());
  for (const auto& clause : cnf.clauses) ineqs.push_back(clause_to_inequality(clause));
  return InequalitySystem(cnf.nvars, std::move(ineqs), include_box);
}

Graph::Graph(std::size_t nvertices, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : n_(nvertices), edges_(std::move(edges)), incident_(nvertices) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw DomainError("graph has parallel edges");
  }
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    incident_[edges_[e].first].push_back(e);
    incident_[edges_[e].second].push_back(e);
  }
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& inc : incident_) d = std::max(d, inc.size());
  return d;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<bool> seen(n_, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (auto e : incident_[v]) {
      std::uint32_t w = edges_[e].first == v ? edges_[e].second : edges_[e].first;
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw DomainError("complete graph needs at least one vertex");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw DomainError("grid dimensions must be positive");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      std::uint32_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least three vertices");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

namespace {

// Uniform in [0, bound) independent of the standard library's distributions.
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d == 0 || d >= n || (n * d) % 2 != 0) {
    throw DomainError("no simple connected " + std::to_string(d) + "-regular graph on " +
                      std::to_string(n) + " vertices");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::uint32_t> points;
    for (std::uint32_t v = 0; v < n; ++v) points.insert(points.end(), d, v);
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[uniform(rng, i)]);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      auto u = std::min(points[i], points[i + 1]);
      auto v = std::max(points[i], points[i + 1]);
      if (u == v) {
        ok = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw ResourceError("failed to sample a simple connected regular graph");
}

PebblingDag pyramid_dag(std::size_t height) {
  if (height == 0) throw DomainError("pyramid height must be positive");
  PebblingDag dag;
  std::vector<std::uint32_t> row_start;
  std::uint32_t next = 0;
  for (std::size_t r = 0; r <= height; ++r) {
    row_start.push_back(next);
    next += static_cast<std::uint32_t>(height + 1 - r);
  }
  dag.nvertices = next;
  for (std::size_t r = 1; r <= height; ++r) {
    for (std::uint32_t i = 0; i < height + 1 - r; ++i) {
      std::uint32_t v = row_start[r] + i;
      dag.arcs.emplace_back(row_start[r - 1] + i, v);
      dag.arcs.emplace_back(row_start[r - 1] + i + 1, v);
    }
  }
  return dag;
}

namespace {

std::size_t parse_count(std::string_view s, std::string_view spec) {
  if (s.empty() || s.size() > 9 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw DomainError("malformed graph spec '" + std::string(spec) + "'");
  }
  return std::stoul(std::string(s));
}

}  // namespace

Graph graph_from_spec(std::string_view spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("graph spec must look like kind:params, got '" + std::string(spec) + "'");
  }
  std::string_view kind = spec.substr(0, colon);
  std::string_view params = spec.substr(colon + 1);
  if (kind == "complete") return complete_graph(parse_count(params, spec));
  if (kind == "cycle") return cycle_graph(parse_count(params, spec));
  if (kind == "grid") {
    auto x = params.find('x');
    if (x == std::string_view::npos) throw DomainError("grid spec must be grid:RxC");
    return grid_graph(parse_count(params.substr(0, x), spec), parse_count(params.substr(x + 1), spec));
  }
  if (kind == "regular") {
    auto comma = params.find(',');
    if (comma == std::string_view::npos) throw DomainError("regular spec must be regular:N,D");
    return random_regular_graph(parse_count(params.substr(0, comma), spec),
                                parse_count(params.substr(comma + 1), spec), seed);
  }
  throw DomainError("unknown graph kind '" + std::string(kind) + "'");
}

VertexLabeling odd_labeling(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("labeling of an empty graph");
  std::mt19937_64 rng(seed);
  VertexLabeling l(n);
  unsigned parity = 0;
  for (std::size_t v = 0; v < n; ++v) {
    l[v] = static_cast<std::uint8_t>(rng() >> 63);
    parity ^= l[v];
  }
  if (parity == 0) l[uniform(rng, n)] ^= 1U;
  return l;
}

VertexLabeling parse_labeling(std::string_view bits) {
  VertexLabeling l;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("labeling must be a string of 0/1");
    l.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return l;
}

std::string labeling_to_string(const VertexLabeling& labeling) {
  std::string s;
  for (auto b : labeling) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

void check_tseitin_input(const Graph& graph, const VertexLabeling& labeling) {
  if (labeling.size() != graph.vertex_count()) {
    throw DimensionError("labeling has " + std::to_string(labeling.size()) +
                         " entries for a graph on " + std::to_string(graph.vertex_count()) +
                         " vertices");
  }
  if (!graph.is_connected()) throw DomainError("Tseitin formulas need a connected graph");
  unsigned parity = 0;
  for (auto b : labeling) {
    if (b > 1) throw DomainError("labeling entries must be 0 or 1");
    parity ^= b;
  }
  if (parity == 0) throw DomainError("labeling must have odd total weight");
}

std::size_t vertex_clause_count(std::size_t degree, std::uint8_t label) {
  if (degree == 0) return label;
  return std::size_t{1} << (degree - 1);
}

}  // namespace

Cnf tseitin_cnf(const Graph& graph, const VertexLabeling& labeling) {
  check_tseitin_input(graph, labeling);
  if (graph.max_degree() > 24) throw ResourceError("vertex degree too large for Tseitin CNF");
  Cnf cnf;
  cnf.nvars = graph.edge_count();
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    const auto& inc = graph.incident(v);
    std::uint32_t d = static_cast<std::uint32_t>(inc.size());
    for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
      if ((std::popcount(mask) & 1U) == labeling[v]) continue;
      Clause clause;
      for (std::uint32_t i = 0; i < d; ++i) {
        clause.push_back({VarId{inc[i]}, ((mask >> i) & 1U) == 0});
      }
      cnf.clauses.push_back(std::move(clause));
    }
  }
  return cnf;
}

std::vector<std::size_t> tseitin_clause_offsets(const Graph& graph,
                                                const VertexLabeling& labeling) {
  check_tseitin_input(graph, labeling);
  std::vector<std::size_t> offsets(graph.vertex_count() + 1, 0);
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    offsets[v + 1] = offsets[v] + vertex_clause_count(graph.degree(v), labeling[v]);
  }
  return offsets;
}

Cnf pebbling_cnf(const PebblingDag& dag) {
  const std::size_t n = dag.nvertices;
  if (n == 0) throw DomainError("empty pebbling DAG");
  std::vector<std::vector<std::uint32_t>> preds(n);
  std::vector<std::size_t> fanout(n, 0);
  for (auto [u, v] : dag.arcs) {
    if (u >= n || v >= n || u == v) throw DomainError("malformed arc in pebbling DAG");
    preds[v].push_back(u);
    ++fanout[u];
  }
  std::vector<std::uint32_t> sinks;
  for (std::uint32_t v = 0; v < n; ++v) {
    std::sort(preds[v].begin(), preds[v].end());
    if (std::adjacent_find(preds[v].begin(), preds[v].end()) != preds[v].end()) {
      throw DomainError("repeated arc into vertex " + std::to_string(v));
    }
    if (!preds[v].empty() && preds[v].size() != 2) {
      throw DomainError("vertex " + std::to_string(v) + " has fanin " +
                        std::to_string(preds[v].size()) + ", expected 0 or 2");
    }
    if (fanout[v] == 0) sinks.push_back(v);
  }
  if (sinks.size() != 1) throw DomainError("pebbling DAG must have a unique sink");
  const std::uint32_t t = sinks[0];
  if (preds[t].empty()) throw DomainError("the sink must not be a source");
  // Kahn's algorithm for acyclicity.
  std::vector<std::size_t> indeg(n);
  std::vector<std::uint32_t> queue;
  std::vector<std::vector<std::uint32_t>> succ(n);
  for (auto [u, v] : dag.arcs) succ[u].push_back(v);
  for (std::uint32_t v = 0; v < n; ++v) {
    indeg[v] = preds[v].size();
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::size_t visited = 0;
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    ++visited;
    for (auto w : succ[v]) {
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  if (visited != n) throw DomainError("pebbling graph has a cycle");

  Cnf cnf;
  cnf.nvars = n;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (preds[v].empty()) cnf.clauses.push_back({{VarId{v}, true}});
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (preds[v].empty()) continue;
    cnf.clauses.push_back({{VarId{preds[v][0]}, false}, {VarId{preds[v][1]}, false}, {VarId{v}, true}});
  }
  cnf.clauses.push_back({{VarId{t}, false}});
  return cnf;
}

std::size_t default_clause_budget() {
  if (const char* env = std::getenv("STABKIT_CLAUSE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

namespace {

// Saturating a * b against a cap.
std::size_t capped_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a != 0 && b > cap / a) return cap + 1;
  return std::min(a * b, cap + 1);
}

void check_clause_width(const Clause& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i].var == c[j].var) throw EncodingError("clause mentions a variable twice");
    }
  }
}

}  // namespace

Cnf lift_ind(const Cnf& f, std::size_t l, std::size_t budget) {
  if (l < 2) throw DomainError("IND lifting needs l >= 2");
  std::size_t total = f.nvars;
  for (const auto& c : f.clauses) {
    check_clause_width(c);
    std::size_t count = 1;
    for (std::size_t i = 0; i < c.size(); ++i) count = capped_mul(count, l, budget);
    total = std::min(total + count, budget + 1);
  }
  if (total > budget) {
    throw ResourceError("IND lifting would emit more than " + std::to_string(budget) + " clauses");
  }
  const std::size_t n = f.nvars;
  auto y = [&](std::uint32_t i, std::size_t j) { return VarId{static_cast<std::uint32_t>(i * l + j)}; };
  auto z = [&](std::uint32_t i, std::size_t j) {
    return VarId{static_cast<std::uint32_t>(n * l + i * l + j)};
  };
  Cnf out;
  out.nvars = 2 * n * l;
  for (std::uint32_t i = 0; i < n; ++i) {
    Clause pointer;
    for (std::size_t j = 0; j < l; ++j) pointer.push_back({y(i, j), true});
    out.clauses.push_back(std::move(pointer));
  }
  for (const auto& c : f.clauses) {
    std::vector<std::size_t> tuple(c.size(), 0);
    for (;;) {
      Clause lifted;
      for (std::size_t k = 0; k < c.size(); ++k) {
        lifted.push_back({y(c[k].var.index, tuple[k]), false});
        lifted.push_back({z(c[k].var.index, tuple[k]), c[k].positive});
      }
      out.clauses.push_back(std::move(lifted));
      std::size_t k = c.size();
      while (k > 0 && ++tuple[k - 1] == l) tuple[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

bool ver_gadget(unsigned a, unsigned b) { return ((a + b) % 4) >= 2; }

Cnf lift_ver(const Cnf& f, std::size_t budget) {
  std::size_t total = 0;
  for (const auto& c : f.clauses) {
    check_clause_width(c);
    std::size_t count = 1;
    for (std::size_t i = 0; i < c.size(); ++i) count = capped_mul(count, 8, budget);
    total = std::min(total + count, budget + 1);
  }
  if (total > budget) {
    throw ResourceError("VER lifting would emit more than " + std::to_string(budget) + " clauses");
  }
  // Gadget inputs (a, b) per required output value, as 4-bit blocks a1 a0 b1 b0.
  std::vector<unsigned> blocks[2];
  for (unsigned bits = 0; bits < 16; ++bits) {
    blocks[ver_gadget(bits >> 2, bits & 3U) ? 1 : 0].push_back(bits);
  }
  Cnf out;
  out.nvars = 4 * f.nvars;
  for (const auto& c : f.clauses) {
    // Literal k is falsified when the gadget output differs from its sign.
    std::vector<std::size_t> pick(c.size(), 0);
    for (;;) {
      Clause blocking;
      for (std::size_t k = 0; k < c.size(); ++k) {
        unsigned bits = blocks[c[k].positive ? 0 : 1][pick[k]];
        for (unsigned q = 0; q < 4; ++q) {
          bool bit = (bits >> (3 - q)) & 1U;
          blocking.push_back({VarId{4 * c[k].var.index + q}, !bit});
        }
      }
      out.clauses.push_back(std::move(blocking));
      std::size_t k = c.size();
      while (k > 0 && ++pick[k - 1] == 8) pick[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

Cnf parse_dimacs(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  Cnf cnf;
  bool header = false;
  std::size_t declared = 0;
  Clause current;
  std::size_t current_line = 0;
  while (reader.next(line)) {
    const std::size_t ln = reader.line_number();
    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t[0] == 'c') {
      std::string_view rest = t.substr(1);
      cnf.comments.emplace_back(trim(rest));
      continue;
    }
    if (t[0] == '%') break;
    if (t[0] == 'p') {
      if (header) throw ParseError("duplicate problem line", ln, 1);
      auto parts = split_ws(t);
      if (parts.size() != 4 || parts[0] != "p" || parts[1] != "cnf") {
        throw ParseError("expected 'p cnf <vars> <clauses>'", ln, 1);
      }
      auto nv = parse_bigint(parts[2]);
      auto nc = parse_bigint(parts[3]);
      if (!nv || !nc || *nv < 0 || *nc < 0 || !nv->fits_uint_p() || !nc->fits_uint_p()) {
        throw ParseError("malformed problem line counts", ln, 1);
      }
      cnf.nvars = nv->get_ui();
      declared = nc->get_ui();
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the problem line", ln, 1);
    std::size_t col = 0;
    while (col < line.size()) {
      while (col < line.size() && std::isspace(static_cast<unsigned char>(line[col]))) ++col;
      if (col == line.size()) break;
      std::size_t end = col;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      auto lit = parse_bigint(line.substr(col, end - col));
      if (!lit || !lit->fits_slong_p()) throw ParseError("malformed literal", ln, col + 1);
      long v = lit->get_si();
      if (v == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        std::size_t index = static_cast<std::size_t>(v < 0 ? -v : v);
        if (index > cnf.nvars) {
          throw ParseError("variable " + std::to_string(index) + " exceeds declared count " +
                               std::to_string(cnf.nvars),
                           ln, col + 1);
        }
        Literal l{VarId{static_cast<std::uint32_t>(index - 1)}, v > 0};
        bool duplicate = false;
        for (const auto& other : current) {
          if (other.var == l.var) {
            if (other.positive != l.positive) {
              throw ParseError("clause contains a variable and its negation", ln, col + 1);
            }
            duplicate = true;
          }
        }
        if (!duplicate) current.push_back(l);
        current_line = ln;
      }
      col = end;
    }
  }
  if (!current.empty()) throw ParseError("last clause is not terminated by 0", current_line, 1);
  if (!header) throw ParseError("missing problem line", reader.line_number() + 1, 1);
  if (cnf.clauses.size() != declared) {
    throw ParseError("problem line declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(cnf.clauses.size()),
                     reader.line_number(), 1);
  }
  return cnf;
}

std::string write_dimacs(const Cnf& cnf) {
  std::string out;
  for (const auto& c : cnf.comments) out += "c " + c + "\n";
  out += "p cnf " + std::to_string(cnf.nvars) + " " + std::to_string(cnf.clauses.size()) + "\n";
  for (const auto& clause : cnf.clauses) {
    for (const auto& lit : clause) {
      if (!lit.positive) out += '-';
      out += std::to_string(lit.var.index + 1);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

OpbInstance parse_opb_instance(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  OpbInstance inst;
  std::vector<LinearInequality> ineqs;
  std::optional<std::size_t> declared_vars;
  std::size_t max_var = 0;
  while (reader.next(line)) {
    const std::size_t ln = reader.line_number();
    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '*') {
      std::string_view rest = trim(t.substr(1));
      if (rest.starts_with("#variable=")) {
        auto parts = split_ws(rest);
        if (parts.size() < 2) throw ParseError("malformed #variable= header", ln, 1);
        auto nv = parse_bigint(parts[1]);
        if (!nv || *nv < 0 || !nv->fits_uint_p()) throw ParseError("malformed variable count", ln, 1);
        declared_vars = nv->get_ui();
      } else {
        inst.comments.emplace_back(rest);
      }
      continue;
    }
    if (t.starts_with("min:") || t.starts_with("max:")) continue;
    std::size_t offset = static_cast<std::size_t>(t.data() - line.data());
    if (t.back() != ';') throw ParseError("constraint must end with ';'", ln, line.size());
    Constraint c = parse_constraint(t.substr(0, t.size() - 1), ln, offset + 1, true);
    for (const auto& term : c.terms) {
      max_var = std::max<std::size_t>(max_var, term.var.index + 1);
      if (declared_vars && term.var.index >= *declared_vars) {
        throw ParseError("variable x" + std::to_string(term.var.index + 1) +
                             " exceeds declared count " + std::to_string(*declared_vars),
                         ln, offset + 1);
      }
    }
    for (auto& ineq : c.normalized()) ineqs.push_back(std::move(ineq));
  }
  inst.system = InequalitySystem(declared_vars.value_or(max_var), std::move(ineqs));
  return inst;
}

InequalitySystem parse_opb(std::string_view text) { return parse_opb_instance(text).system; }

std::string write_opb(const InequalitySystem& system, const std::vector<std::string>& comments) {
  std::string out = "* #variable= " + std::to_string(system.nvars()) +
                    " #constraint= " + std::to_string(system.explicit_count()) + "\n";
  for (const auto& c : comments) out += "* " + c + "\n";
  for (const auto& ineq : system.inequalities()) out += ineq.to_string() + " ;\n";
  return out;
}

}  // namespace stabkit
