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

// Command-line driver: generators, verifiers, transforms, the Tseitin
// refuter and the solver. Exit codes: 0 success, 1 reject, 2 usage or bad
// input, 3 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "stabkit/cp.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/formulas.hpp"
#include "stabkit/proof_io.hpp"
#include "stabkit/rcp.hpp"
#include "stabkit/solver.hpp"
#include "stabkit/sp.hpp"
#include "stabkit/text.hpp"
#include "stabkit/transforms.hpp"
#include "stabkit/tseitin_refuter.hpp"

namespace stabkit {
namespace {

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

// Signals an exit code after the diagnostic has been printed.
struct Exit {
  int code;
};

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

[[noreturn]] void die(int code, std::string_view kind, std::string_view message) {
  std::cerr << "status=" << (code == kReject ? "reject" : code == kResource ? "resource" : "error")
            << "\nkind=" << kind << "\nmessage=" << quote(message) << "\n";
  throw Exit{code};
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kUsage, "io", "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) die(kUsage, "io", "cannot write " + path);
  out << text;
}

// Output stream for "-" or a file path.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) die(kUsage, "io", "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

class Input {
 public:
  explicit Input(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) die(kUsage, "io", "cannot open " + path);
    }
  }
  std::istream& stream() { return file_.is_open() ? file_ : std::cin; }

 private:
  std::ifstream file_;
};

bool looks_like_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    return t[0] == 'p';
  }
  return false;
}

struct Formula {
  InequalitySystem system;
  std::vector<std::string> comments;
  std::optional<Cnf> cnf;
};

Formula read_formula(const std::string& text) {
  if (looks_like_dimacs(text)) {
    Cnf cnf = parse_dimacs(text);
    return {cnf_to_system(cnf), cnf.comments, cnf};
  }
  OpbInstance inst = parse_opb_instance(text);
  return {std::move(inst.system), std::move(inst.comments), std::nullopt};
}

std::optional<std::string> metadata(const std::vector<std::string>& comments,
                                    std::string_view key) {
  for (const auto& c : comments) {
    for (std::string_view tok : split_ws(c)) {
      if (tok.size() > key.size() && tok.substr(0, key.size()) == key &&
          tok[key.size()] == '=') {
        return std::string(tok.substr(key.size() + 1));
      }
    }
  }
  return std::nullopt;
}

void print_sp_stats(const SpStats& s) {
  std::cout << "length=" << s.length << "\ndepth=" << s.depth << "\nbitsize=" << s.bitsize
            << "\nleaves=" << s.leaves << "\nqueries=" << s.queries
            << "\nmax_abs_coeff=" << to_string(s.max_abs_coeff) << "\n";
}

void print_report(const TransformReport& r) {
  std::cout << "kind=" << r.kind << "\ninput_length=" << r.input_length
            << "\ninput_rank=" << r.input_rank << "\ninput_space=" << r.input_space
            << "\noutput_length=" << r.output.length << "\noutput_depth=" << r.output.depth
            << "\noutput_bitsize=" << r.output.bitsize << "\nbound=" << quote(r.bound)
            << "\nbound_holds=" << (r.bound_holds ? "true" : "false") << "\n";
}

// Forwards events to two sinks.
class TeeSink : public SpSink {
 public:
  TeeSink(SpSink& a, SpSink& b) : a_(a), b_(b) {}
  void on_query(const LinearInequality& p, const LinearInequality& n) override {
    a_.on_query(p, n);
    b_.on_query(p, n);
  }
  void on_leaf(const FarkasCertificate& c) override {
    a_.on_leaf(c);
    b_.on_leaf(c);
  }

 private:
  SpSink& a_;
  SpSink& b_;
};

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string graph;
  std::string labeling;
  std::uint64_t seed = 1;
  std::size_t height = 3;
  std::size_t l = 2;
  std::string input = "-";
  std::string output = "-";
  std::string format = "dimacs";
  std::optional<std::size_t> budget;
};

void emit_formula(const GenerateOptions& o, const Cnf& cnf) {
  if (o.format == "opb") {
    write_text(o.output, write_opb(cnf_to_system(cnf), cnf.comments));
  } else {
    write_text(o.output, write_dimacs(cnf));
  }
}

Graph graph_arg(const std::string& spec, std::uint64_t seed) {
  try {
    return graph_from_spec(spec, seed);
  } catch (const Error& e) {
    die(kUsage, "graph", e.what());
  }
}

int generate_tseitin(const GenerateOptions& o) {
  if (o.graph.empty()) die(kUsage, "usage", "--graph is required");
  Graph g = graph_arg(o.graph, o.seed);
  VertexLabeling lab =
      o.labeling.empty() ? odd_labeling(g.vertex_count(), o.seed) : parse_labeling(o.labeling);
  Cnf cnf = tseitin_cnf(g, lab);
  cnf.comments = {"stabkit tseitin", "graph=" + o.graph, "labeling=" + labeling_to_string(lab),
                  "seed=" + std::to_string(o.seed)};
  emit_formula(o, cnf);
  return kOk;
}

int generate_pebbling(const GenerateOptions& o) {
  Cnf cnf = pebbling_cnf(pyramid_dag(o.height));
  cnf.comments = {"stabkit pebbling", "dag=pyramid:" + std::to_string(o.height)};
  emit_formula(o, cnf);
  return kOk;
}

Cnf read_cnf(const std::string& path) {
  std::string text = read_text(path);
  if (!looks_like_dimacs(text)) die(kUsage, "format", "lifting expects a DIMACS CNF input");
  return parse_dimacs(text);
}

int generate_lift(const GenerateOptions& o, bool ind) {
  Cnf base = read_cnf(o.input);
  std::size_t budget = o.budget.value_or(default_clause_budget());
  Cnf cnf = ind ? lift_ind(base, o.l, budget) : lift_ver(base, budget);
  cnf.comments = base.comments;
  cnf.comments.push_back(ind ? "lift=ind l=" + std::to_string(o.l) : "lift=ver");
  emit_formula(o, cnf);
  return kOk;
}

// ------------------------------------------------------------------ verify

int verify_sp_stream(const std::string& path, unsigned jobs) {
  Input in(path);
  SpReader reader(in.stream());
  SpStreamVerifier verifier(reader.system(), jobs);
  try {
    reader.stream(verifier);
  } catch (const ParseError& e) {
    die(kReject, "parse", e.what());
  }
  VerifyReport r = verifier.finish();
  if (!r.ok) {
    std::cerr << "status=reject\nkind=sp\nnode=" << r.failing_node.value_or(0)
              << "\npath=" << quote(r.path) << "\nmessage=" << quote(r.message) << "\n";
    return kReject;
  }
  std::cout << "status=accept\nformat=sp\nnodes=" << r.nodes << "\n";
  return kOk;
}

int line_reject(std::string_view kind, const LineReport& r) {
  std::cerr << "status=reject\nkind=" << kind << "\nline=" << r.failing_line.value_or(0)
            << "\nmessage=" << quote(r.message) << "\n";
  return kReject;
}

template <typename Parse>
auto parse_or_reject(const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    die(kReject, "parse", e.what());
  }
}

int verify_cmd(const std::string& kind, const std::string& path, unsigned jobs) {
  if (kind == "sp") return verify_sp_stream(path, jobs);
  std::string text = read_text(path);
  if (kind == "cp") {
    CpProof p = parse_or_reject(text, [](const std::string& t) { return parse_cp(t); });
    LineReport r = verify_cp(p);
    if (!r.ok) return line_reject(kind, r);
    std::cout << "status=accept\nformat=cp\nlines=" << p.lines.size() << "\n";
    return kOk;
  }
  if (kind == "rcp") {
    RcpProof p = parse_or_reject(text, [](const std::string& t) { return parse_rcp(t); });
    LineReport r = verify_rcp(p);
    if (!r.ok) return line_reject(kind, r);
    std::cout << "status=accept\nformat=rcp\nlines=" << p.lines.size() << "\n";
    return kOk;
  }
  CpConfigProof p =
      parse_or_reject(text, [](const std::string& t) { return parse_cp_config(t); });
  CpConfigReport r = verify_cp_config(p);
  if (!r.report.ok) return line_reject(kind, r.report);
  std::cout << "status=accept\nformat=cp-config\nsteps=" << r.length << "\nspace=" << r.space
            << "\n";
  return kOk;
}

// --------------------------------------------------------------- transform

int transform_cmd(const std::string& kind, const std::string& in_path,
                  const std::string& out_path) {
  std::string text = read_text(in_path);
  // Reports go to stdout unless the proof itself does.
  const bool report = out_path != "-";
  auto check_cp = [](const CpProof& p) {
    LineReport r = verify_cp(p);
    if (!r.ok) throw Exit{line_reject("cp", r)};
  };
  if (kind == "cp-to-sp-size" || kind == "cp-to-sp-depth" || kind == "cp-to-sp-balanced") {
    CpProof in = parse_or_reject(text, [](const std::string& t) { return parse_cp(t); });
    check_cp(in);
    SpProof out;
    TransformReport rep;
    if (kind == "cp-to-sp-size") {
      out = cp_to_sp_size(in);
      rep = report_cp_to_sp_size(in, out);
    } else if (kind == "cp-to-sp-depth") {
      out = cp_tree_to_sp_depth(in);
      rep = report_cp_tree_to_sp_depth(in, out);
    } else {
      out = cp_tree_to_sp_balanced(in);
      rep = report_cp_tree_to_sp_balanced(in, out);
    }
    write_text(out_path, write_sp(out));
    if (report) print_report(rep);
    return kOk;
  }
  if (kind == "cp-space-to-sp") {
    CpConfigProof in =
        parse_or_reject(text, [](const std::string& t) { return parse_cp_config(t); });
    CpConfigReport r = verify_cp_config(in);
    if (!r.report.ok) return line_reject("cp-config", r.report);
    SpProof out = cp_space_to_sp(in);
    write_text(out_path, write_sp(out));
    if (report) print_report(report_cp_space_to_sp(in, out));
    return kOk;
  }
  if (kind == "sp-to-rcp") {
    SpProof in = parse_or_reject(text, [](const std::string& t) { return parse_sp(t); });
    VerifyReport v = verify_sp(in);
    if (!v.ok) {
      std::cerr << "status=reject\nkind=sp\nnode=" << v.failing_node.value_or(0)
                << "\nmessage=" << quote(v.message) << "\n";
      return kReject;
    }
    RcpProof out = sp_to_rcp(in);
    write_text(out_path, write_rcp(out));
    if (report) {
      RcpShape s = rcp_shape(out);
      std::cout << "kind=sp-to-rcp\ninput_length=" << sp_stats(in).length
                << "\ninput_depth=" << sp_stats(in).depth << "\noutput_length=" << s.length
                << "\noutput_depth=" << s.depth << "\noutput_width=" << s.width << "\n";
    }
    return kOk;
  }
  // rcp-to-sp
  RcpProof in = parse_or_reject(text, [](const std::string& t) { return parse_rcp(t); });
  LineReport r = verify_rcp(in);
  if (!r.ok) return line_reject("rcp", r);
  SpProof out = rcp_to_sp(in);
  write_text(out_path, write_sp(out));
  if (report) {
    RcpShape s = rcp_shape(in);
    SpStats st = sp_stats(out);
    std::cout << "kind=rcp-to-sp\ninput_length=" << s.length << "\ninput_depth=" << s.depth
              << "\noutput_length=" << st.length << "\noutput_depth=" << st.depth << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------- refute-tseitin

struct RefuteOptions {
  std::string graph;
  std::string labeling;
  std::uint64_t seed = 1;
  std::string input;
  std::string output = "-";
  bool lp_certificates = false;
  bool wide = false;
  std::optional<std::size_t> max_nodes;
  bool stats = false;
};

int refute_cmd(const RefuteOptions& o) {
  std::string graph = o.graph;
  std::string labeling = o.labeling;
  std::uint64_t seed = o.seed;
  std::optional<Formula> formula;
  if (graph.empty()) {
    formula = read_formula(read_text(o.input.empty() ? "-" : o.input));
    auto g = metadata(formula->comments, "graph");
    if (!g) die(kUsage, "usage", "input carries no graph= metadata; pass --graph");
    graph = *g;
    if (labeling.empty()) labeling = metadata(formula->comments, "labeling").value_or("");
    if (auto s = metadata(formula->comments, "seed")) seed = std::stoull(*s);
  }
  Graph g = graph_arg(graph, seed);
  VertexLabeling lab =
      labeling.empty() ? odd_labeling(g.vertex_count(), seed) : parse_labeling(labeling);
  if (formula && !(formula->system == tseitin_system(g, lab))) {
    die(kUsage, "mismatch", "input formula differs from the Tseitin formula of its metadata");
  }
  TseitinOptions opts;
  opts.tight_ranges = !o.wide;
  opts.lp_certificates = o.lp_certificates;
  if (o.max_nodes) opts.max_nodes = *o.max_nodes;
  InequalitySystem system = tseitin_system(g, lab);
  Output out(o.output);
  SpWriter writer(out.stream(), system);
  SpStatsSink stats;
  TeeSink tee(writer, stats);
  refute_tseitin_stream(g, lab, tee, opts);
  writer.finish();
  out.stream().flush();
  if (o.stats) {
    const SpStats& s = stats.stats();
    std::cerr << "graph=" << graph << "\nlabeling=" << labeling_to_string(lab)
              << "\nlength=" << s.length << "\ndepth=" << s.depth << "\nleaves=" << s.leaves
              << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------------- solve

struct SolveOptions {
  std::string input = "-";
  std::string heuristic = "variable";
  std::string proof;
  std::string expect;
  std::size_t max_nodes = SolveLimits{}.max_nodes;
  std::size_t max_depth = SolveLimits{}.max_depth;
  double time_budget = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
};

int solve_cmd(const SolveOptions& o) {
  auto h = parse_heuristic(o.heuristic);
  if (!h) die(kUsage, "usage", "unknown heuristic " + o.heuristic);
  Formula f = read_formula(read_text(o.input));
  SolveLimits limits;
  limits.max_nodes = o.max_nodes;
  limits.max_depth = o.max_depth;
  limits.time_budget_seconds = o.time_budget;
  limits.seed = o.seed;
  SolveResult r = sp_solve(f.system, *h, limits);
  std::string verdict;
  if (const auto* proof = std::get_if<SpProof>(&r.outcome)) {
    verdict = "unsat";
    std::cout << "result=unsat\n";
    print_sp_stats(sp_stats(*proof));
    if (!o.proof.empty()) write_text(o.proof, write_sp(*proof));
  } else if (const auto* a = std::get_if<Assignment>(&r.outcome)) {
    verdict = "sat";
    std::cout << "result=sat\nassignment=" << a->to_string() << "\n";
  } else {
    const auto& ex = std::get<ResourceExceeded>(r.outcome);
    std::cout << "result=unknown\nnodes=" << r.stats.nodes << "\n";
    die(kResource, "resource", ex.reason);
  }
  std::cout << "nodes=" << r.stats.nodes << "\nlp_calls=" << r.stats.lp_calls << "\n";
  if (!o.expect.empty() && o.expect != verdict) {
    die(kReject, "mismatch", "expected " + o.expect + ", solver says " + verdict);
  }
  return kOk;
}

// ------------------------------------------------------------------- stats

int stats_cmd(const std::string& path) {
  if (path != "-") {
    // Peek at the header so SP files can be streamed.
    std::ifstream probe(path, std::ios::binary);
    if (!probe) die(kUsage, "io", "cannot open " + path);
    std::string first;
    while (std::getline(probe, first) && trim(first).empty()) {
    }
    if (trim(first) == kSpHeader) {
      Input in(path);
      SpReader reader(in.stream());
      SpStatsSink sink;
      reader.stream(sink);
      std::cout << "format=sp\n";
      print_sp_stats(sink.stats());
      return kOk;
    }
  }
  std::string text = read_text(path);
  std::string header = sniff_header(text);
  if (header == kSpHeader) {
    std::cout << "format=sp\n";
    print_sp_stats(sp_stats(parse_sp(text)));
  } else if (header == kCpHeader) {
    CpProof p = parse_cp(text);
    CpShape s = cp_shape(p);
    std::cout << "format=cp\nlength=" << s.length << "\nrank=" << s.rank
              << "\ntree=" << (s.is_tree ? "true" : "false") << "\n";
  } else if (header == kCpConfigHeader) {
    CpConfigProof p = parse_cp_config(text);
    CpConfigReport r = verify_cp_config(p);
    if (!r.report.ok) return line_reject("cp-config", r.report);
    std::cout << "format=cp-config\nlength=" << r.length << "\nspace=" << r.space << "\n";
  } else if (header == kRcpHeader) {
    RcpShape s = rcp_shape(parse_rcp(text));
    std::cout << "format=rcp\nlength=" << s.length << "\ndepth=" << s.depth
              << "\nwidth=" << s.width << "\ntree=" << (s.is_tree ? "true" : "false") << "\n";
  } else {
    Formula f = read_formula(text);
    std::size_t bits = 0;
    for (const auto& ineq : f.system.inequalities()) {
      for (const auto& t : ineq.terms()) bits += bit_length(t.coeff);
      bits += bit_length(ineq.bound());
    }
    std::cout << "format=" << (f.cnf ? "dimacs" : "opb") << "\nvars=" << f.system.nvars()
              << "\nconstraints=" << f.system.explicit_count() << "\nbitsize=" << bits << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------- search-eval

int search_eval_cmd(const std::string& proof_path, const std::string& assignment) {
  SpProof proof = parse_sp(read_text(proof_path));
  std::string bits;
  for (char c : assignment) {
    if (c == '0' || c == '1') {
      bits.push_back(c);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      bits.clear();
      break;
    }
  }
  if (bits.empty() || bits.size() != assignment.size()) {
    // Not a literal bit string: treat it as a file holding one.
    std::string text = read_text(assignment);
    bits.clear();
    for (char c : text) {
      if (c == '0' || c == '1') {
        bits.push_back(c);
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        die(kUsage, "assignment", "assignment must consist of 0/1 characters");
      }
    }
  }
  if (bits.size() != proof.system.nvars()) {
    die(kUsage, "assignment",
        "assignment has " + std::to_string(bits.size()) + " entries, the system has " +
            std::to_string(proof.system.nvars()) + " variables");
  }
  std::vector<std::uint8_t> values;
  for (char c : bits) values.push_back(c == '1');
  AxiomRef ref = evaluate_search(proof, Assignment(std::move(values)));
  std::cout << "axiom=" << ref.to_string() << "\ninequality=" << quote(
      proof.system.axiom(ref.index).to_string()) << "\n";
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Stabbing Planes proof toolkit"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for leaf verification")->check(CLI::Range(1, 256));

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Emit a CNF formula");
  generate->require_subcommand(1);
  auto add_out = [&](CLI::App* c) {
    c->add_option("-o,--output", gen.output, "Output file (default stdout)");
    c->add_option("--format", gen.format, "dimacs or opb")
        ->check(CLI::IsMember({"dimacs", "opb"}));
  };
  auto* g_tseitin = generate->add_subcommand("tseitin", "Tseitin formula of a graph");
  g_tseitin->add_option("--graph", gen.graph, "complete:N, grid:RxC, cycle:N or regular:N,D")
      ->required();
  g_tseitin->add_option("--labeling", gen.labeling, "Vertex labels as a bit string");
  g_tseitin->add_option("--seed", gen.seed, "Seed for random graphs and labelings");
  add_out(g_tseitin);
  auto* g_peb = generate->add_subcommand("pebbling", "Pebbling formula of a pyramid");
  g_peb->add_option("--height", gen.height, "Pyramid height")->check(CLI::Range(1, 1000));
  add_out(g_peb);
  auto* g_ind = generate->add_subcommand("lift-ind", "Lift a CNF with the index gadget");
  g_ind->add_option("input", gen.input, "DIMACS input (default stdin)");
  g_ind->add_option("--l", gen.l, "Pointer range")->check(CLI::Range(1, 64));
  g_ind->add_option("--budget", gen.budget, "Clause budget");
  add_out(g_ind);
  auto* g_ver = generate->add_subcommand("lift-ver", "Lift a CNF with the mod-4 gadget");
  g_ver->add_option("input", gen.input, "DIMACS input (default stdin)");
  g_ver->add_option("--budget", gen.budget, "Clause budget");
  add_out(g_ver);

  std::string verify_kind;
  std::string verify_file = "-";
  auto* verify = app.add_subcommand("verify", "Check a proof file");
  verify->add_option("kind", verify_kind, "sp, cp, rcp or cp-config")
      ->required()
      ->check(CLI::IsMember({"sp", "cp", "rcp", "cp-config"}));
  verify->add_option("file", verify_file, "Proof file (default stdin)");
  verify->add_option("--jobs", jobs, "Worker threads for leaf verification")
      ->check(CLI::Range(1, 256));

  std::string t_kind, t_in, t_out;
  auto* transform = app.add_subcommand("transform", "Translate between proof systems");
  transform
      ->add_option("kind", t_kind,
                   "cp-to-sp-size, cp-to-sp-depth, cp-to-sp-balanced, cp-space-to-sp, "
                   "sp-to-rcp or rcp-to-sp")
      ->required()
      ->check(CLI::IsMember({"cp-to-sp-size", "cp-to-sp-depth", "cp-to-sp-balanced",
                             "cp-space-to-sp", "sp-to-rcp", "rcp-to-sp"}));
  transform->add_option("in", t_in, "Input proof")->required();
  transform->add_option("out", t_out, "Output proof ('-' for stdout)")->required();

  RefuteOptions ref;
  auto* refute = app.add_subcommand("refute-tseitin", "Stabbing Planes refutation of Tseitin");
  refute->add_option("input", ref.input, "Formula carrying graph= metadata (default stdin)");
  refute->add_option("--graph", ref.graph, "Graph spec; overrides the input metadata");
  refute->add_option("--labeling", ref.labeling, "Vertex labels as a bit string");
  refute->add_option("--seed", ref.seed, "Seed for random graphs and labelings");
  refute->add_option("-o,--output", ref.output, "Output proof (default stdout)");
  refute->add_flag("--lp-certificates", ref.lp_certificates, "Solve an LP at every leaf");
  refute->add_flag("--wide", ref.wide, "Pin sums over their unrestricted ranges");
  refute->add_option("--max-nodes", ref.max_nodes, "Abort beyond this many nodes");
  refute->add_flag("--stats", ref.stats, "Report length and depth on stderr");

  SolveOptions sol;
  auto* solve = app.add_subcommand("solve", "Branch on LP solutions until refuted or satisfied");
  solve->add_option("file", sol.input, "DIMACS or OPB input (default stdin)");
  solve->add_option("--heuristic", sol.heuristic, "variable or halve")
      ->check(CLI::IsMember({"variable", "halve"}));
  solve->add_option("--proof", sol.proof, "Write the refutation here");
  solve->add_option("--expect", sol.expect, "sat or unsat; mismatches exit 1")
      ->check(CLI::IsMember({"sat", "unsat"}));
  solve->add_option("--max-nodes", sol.max_nodes, "Node budget");
  solve->add_option("--max-depth", sol.max_depth, "Depth budget");
  solve->add_option("--time-budget", sol.time_budget, "Seconds");
  solve->add_option("--seed", sol.seed, "Tie-breaking seed");

  std::string stats_file = "-";
  auto* stats = app.add_subcommand("stats", "Print key=value statistics");
  stats->add_option("file", stats_file, "Proof or formula (default stdin)");

  std::string se_proof, se_assignment;
  auto* search_eval = app.add_subcommand("search-eval", "Find the falsified axiom of a point");
  search_eval->add_option("proof", se_proof, "SP proof")->required();
  search_eval->add_option("assignment", se_assignment, "Bit string or file holding one")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (generate->parsed()) {
      if (g_tseitin->parsed()) return generate_tseitin(gen);
      if (g_peb->parsed()) return generate_pebbling(gen);
      if (g_ind->parsed()) return generate_lift(gen, true);
      return generate_lift(gen, false);
    }
    if (verify->parsed()) return verify_cmd(verify_kind, verify_file, jobs);
    if (transform->parsed()) return transform_cmd(t_kind, t_in, t_out);
    if (refute->parsed()) return refute_cmd(ref);
    if (solve->parsed()) return solve_cmd(sol);
    if (stats->parsed()) return stats_cmd(stats_file);
    return search_eval_cmd(se_proof, se_assignment);
  } catch (const Exit& e) {
    return e.code;
  } catch (const ResourceError& e) {
    std::cerr << "status=resource\nkind=resource\nmessage=" << quote(e.what()) << "\n";
    return kResource;
  } catch (const InvalidProofError& e) {
    std::cerr << "status=reject\nkind=proof\nmessage=" << quote(e.what()) << "\n";
    return kReject;
  } catch (const ShapeError& e) {
    std::cerr << "status=reject\nkind=shape\nmessage=" << quote(e.what()) << "\n";
    return kReject;
  } catch (const IncompleteRefutationError& e) {
    std::cerr << "status=reject\nkind=incomplete\npath=" << quote(e.path())
              << "\nmessage=" << quote(e.what()) << "\n";
    return kReject;
  } catch (const ParseError& e) {
    std::cerr << "status=error\nkind=parse\nline=" << e.line() << "\ncolumn=" << e.column()
              << "\nmessage=" << quote(e.what()) << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "status=error\nkind=input\nmessage=" << quote(e.what()) << "\n";
    return kUsage;
  }
}

}  // namespace
}  // namespace stabkit

int main(int argc, char** argv) { return stabkit::run(argc, argv); }
