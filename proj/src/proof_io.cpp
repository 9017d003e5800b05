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


#include "stabkit/proof_io.hpp"

#include <charconv>
#include <sstream>
#include <utility>
#include <vector>

#include "stabkit/errors.hpp"
#include "stabkit/number.hpp"
#include "stabkit/text.hpp"

namespace stabkit {
namespace {

std::size_t column_of(std::string_view line, std::string_view token) {
  return static_cast<std::size_t>(token.data() - line.data()) + 1;
}

// Pulls meaningful lines (blank lines and '#' comments skipped) from a stream.
class Lines {
 public:
  explicit Lines(std::istream& in, std::size_t* counter = nullptr)
      : in_(in), counter_(counter != nullptr ? counter : &own_) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++*counter_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      return true;
    }
    return false;
  }
  std::string require(std::string_view what) {
    std::string line;
    if (!next(line)) throw ParseError("unexpected end of input, expected " + std::string(what),
                                      *counter_ + 1, 1);
    return line;
  }
  std::size_t line() const { return *counter_; }

 private:
  std::istream& in_;
  std::size_t own_ = 0;
  std::size_t* counter_;
};

std::size_t parse_index(std::string_view line, std::string_view tok, std::size_t lineno) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("expected a non-negative index, got '" + std::string(tok) + "'", lineno,
                     column_of(line, tok));
  }
  return value;
}

BigInt parse_integer(std::string_view line, std::string_view tok, std::size_t lineno) {
  auto v = parse_bigint(tok);
  if (!v) {
    throw ParseError("malformed integer '" + std::string(tok) + "'", lineno, column_of(line, tok));
  }
  return *v;
}

void expect_header(Lines& lines, std::string_view header) {
  std::string line = lines.require("header");
  if (trim(line) != header) {
    throw ParseError("expected header '" + std::string(header) + "'", lines.line(), 1);
  }
}

// "<key> <value>" with a numeric value.
std::size_t keyed(Lines& lines, std::string_view key) {
  std::string line = lines.require(key);
  auto tokens = split_ws(line);
  if (tokens.size() != 2 || tokens[0] != key) {
    throw ParseError("expected '" + std::string(key) + " <n>'", lines.line(), 1);
  }
  return parse_index(line, tokens[1], lines.line());
}

InequalitySystem read_system(Lines& lines) {
  std::size_t nvars = keyed(lines, "vars");
  std::size_t box = keyed(lines, "box");
  if (box > 1) throw ParseError("box must be 0 or 1", lines.line(), 5);
  std::size_t m = keyed(lines, "axioms");
  std::vector<LinearInequality> axioms;
  axioms.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string line = lines.require("axiom");
    axioms.push_back(parse_inequality(line, lines.line()));
  }
  try {
    return InequalitySystem(nvars, std::move(axioms), box == 1);
  } catch (const DimensionError& e) {
    throw ParseError(e.what(), lines.line(), 1);
  }
}

void write_system(std::ostream& out, const InequalitySystem& system) {
  out << "vars " << system.nvars() << "\nbox " << (system.include_box() ? 1 : 0) << "\naxioms "
      << system.explicit_count() << '\n';
  for (const auto& ineq : system.inequalities()) out << ineq.to_string() << '\n';
}

void expect_end(Lines& lines) {
  std::string line;
  if (lines.next(line)) throw ParseError("trailing content after 'end'", lines.line(), 1);
}

// Splits "<idx>: rest" and checks the index.
std::string_view numbered(std::string_view line, std::size_t expected, std::size_t lineno) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected '<index>:'", lineno, 1);
  std::string_view idx = trim(line.substr(0, colon));
  if (parse_index(line, idx, lineno) != expected) {
    throw ParseError("line index " + std::string(idx) + " out of sequence, expected " +
                         std::to_string(expected),
                     lineno, column_of(line, idx));
  }
  return line.substr(colon + 1);
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                   : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

LinearInequality inequality_at(std::string_view line, std::string_view part, std::size_t lineno) {
  return parse_inequality(part, lineno, column_of(line, part));
}

std::string cp_just_to_string(const CpJustification& just) {
  if (const auto* ax = std::get_if<CpAxiom>(&just)) return "axiom " + std::to_string(ax->index);
  if (const auto* lc = std::get_if<CpLinComb>(&just)) {
    return "lincomb " + std::to_string(lc->j) + ' ' + std::to_string(lc->k) + ' ' +
           lc->alpha.get_str() + ' ' + lc->beta.get_str();
  }
  const auto& dv = std::get<CpDivision>(just);
  return "div " + std::to_string(dv.j) + ' ' + dv.alpha.get_str();
}

// Parses lincomb/div payloads; returns false if the rule name is not one of them.
bool parse_cp_rule(std::string_view line, const std::vector<std::string_view>& t,
                   std::size_t lineno, CpLinComb* lc, CpDivision* dv, bool* is_lincomb) {
  if (t[0] == "lincomb") {
    if (t.size() != 5) throw ParseError("lincomb takes 4 arguments", lineno, column_of(line, t[0]));
    lc->j = parse_index(line, t[1], lineno);
    lc->k = parse_index(line, t[2], lineno);
    lc->alpha = parse_integer(line, t[3], lineno);
    lc->beta = parse_integer(line, t[4], lineno);
    *is_lincomb = true;
    return true;
  }
  if (t[0] == "div") {
    if (t.size() != 3) throw ParseError("div takes 2 arguments", lineno, column_of(line, t[0]));
    dv->j = parse_index(line, t[1], lineno);
    dv->alpha = parse_integer(line, t[2], lineno);
    *is_lincomb = false;
    return true;
  }
  return false;
}

CpJustification parse_cp_just(std::string_view line, std::string_view part, std::size_t lineno) {
  auto t = split_ws(part);
  if (t.empty()) throw ParseError("missing justification", lineno, column_of(line, part));
  if (t[0] == "axiom") {
    if (t.size() != 2) throw ParseError("axiom takes 1 argument", lineno, column_of(line, t[0]));
    return CpAxiom{static_cast<std::uint32_t>(parse_index(line, t[1], lineno))};
  }
  CpLinComb lc;
  CpDivision dv;
  bool is_lincomb = false;
  if (!parse_cp_rule(line, t, lineno, &lc, &dv, &is_lincomb)) {
    throw ParseError("unknown rule '" + std::string(t[0]) + "'", lineno, column_of(line, t[0]));
  }
  if (is_lincomb) return lc;
  return dv;
}

std::vector<std::size_t> parse_erase(std::string_view line, std::string_view part,
                                     std::size_t lineno) {
  auto t = split_ws(part);
  if (t.empty() || t[0] != "erase") {
    throw ParseError("expected 'erase'", lineno, column_of(line, part));
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < t.size(); ++i) out.push_back(parse_index(line, t[i], lineno));
  return out;
}

std::string erase_to_string(const std::vector<std::size_t>& erase) {
  std::string out = "erase";
  for (auto i : erase) out += ' ' + std::to_string(i);
  return out;
}

std::string rcp_rule_to_string(const RcpRule& rule) {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, RcpInput>) {
          return "input " + std::to_string(r.index);
        } else if constexpr (std::is_same_v<T, RcpAxiomIntro>) {
          return "axiom-intro";
        } else if constexpr (std::is_same_v<T, RcpWeakening>) {
          return "weaken " + std::to_string(r.j) + ' ' + r.added.to_string();
        } else if constexpr (std::is_same_v<T, CpLinComb> || std::is_same_v<T, CpDivision>) {
          return cp_just_to_string(CpJustification(r));
        } else if constexpr (std::is_same_v<T, RcpCut>) {
          return "cut " + std::to_string(r.j) + ' ' + std::to_string(r.k);
        } else {
          return "elim " + std::to_string(r.j);
        }
      },
      rule);
}

RcpRule parse_rcp_rule(std::string_view line, std::string_view part, std::size_t lineno) {
  auto t = split_ws(part);
  if (t.empty()) throw ParseError("missing rule", lineno, column_of(line, part));
  auto arity = [&](std::size_t n) {
    if (t.size() != n + 1) {
      throw ParseError(std::string(t[0]) + " takes " + std::to_string(n) + " argument(s)", lineno,
                       column_of(line, t[0]));
    }
  };
  if (t[0] == "input") {
    arity(1);
    return RcpInput{static_cast<std::uint32_t>(parse_index(line, t[1], lineno))};
  }
  if (t[0] == "axiom-intro") {
    arity(0);
    return RcpAxiomIntro{};
  }
  if (t[0] == "weaken") {
    if (t.size() < 3) throw ParseError("weaken takes an index and an inequality", lineno,
                                       column_of(line, t[0]));
    std::size_t j = parse_index(line, t[1], lineno);
    std::string_view rest = part.substr(static_cast<std::size_t>(t[2].data() - part.data()));
    return RcpWeakening{j, inequality_at(line, rest, lineno)};
  }
  if (t[0] == "cut") {
    arity(2);
    return RcpCut{parse_index(line, t[1], lineno), parse_index(line, t[2], lineno)};
  }
  if (t[0] == "elim") {
    arity(1);
    return RcpElimination{parse_index(line, t[1], lineno)};
  }
  CpLinComb lc;
  CpDivision dv;
  bool is_lincomb = false;
  if (!parse_cp_rule(line, t, lineno, &lc, &dv, &is_lincomb)) {
    throw ParseError("unknown rule '" + std::string(t[0]) + "'", lineno, column_of(line, t[0]));
  }
  if (is_lincomb) return lc;
  return dv;
}

RcpClause parse_clause(std::string_view line, std::string_view part, std::size_t lineno) {
  std::string_view t = trim(part);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw ParseError("expected a clause '[...]'", lineno, column_of(line, part));
  }
  std::string_view inner = t.substr(1, t.size() - 2);
  std::vector<LinearInequality> members;
  if (!trim(inner).empty()) {
    for (auto piece : split_on(inner, '|')) members.push_back(inequality_at(line, piece, lineno));
  }
  return RcpClause(std::move(members));
}

}  // namespace

FarkasCertificate parse_certificate(std::string_view text, std::size_t line,
                                    std::size_t column_base) {
  std::vector<CertificateTerm> terms;
  for (auto tok : split_ws(text)) {
    std::size_t col = column_base + static_cast<std::size_t>(tok.data() - text.data());
    auto colon = tok.find(':');
    if (colon == std::string_view::npos || colon < 2 || (tok[0] != 'a' && tok[0] != 'p')) {
      throw ParseError("malformed certificate term '" + std::string(tok) + "'", line, col);
    }
    std::uint32_t index = 0;
    auto digits = tok.substr(1, colon - 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed reference in '" + std::string(tok) + "'", line, col);
    }
    auto coeff = parse_rational(tok.substr(colon + 1));
    if (!coeff) throw ParseError("malformed coefficient in '" + std::string(tok) + "'", line, col);
    AxiomRef ref = tok[0] == 'a' ? AxiomRef::axiom(index) : AxiomRef::path(index);
    for (const auto& t : terms) {
      if (t.ref == ref) throw ParseError("duplicate reference " + ref.to_string(), line, col);
    }
    terms.push_back({ref, std::move(*coeff)});
  }
  return FarkasCertificate(std::move(terms));
}

SpWriter::SpWriter(std::ostream& out, const InequalitySystem& system) : out_(out) {
  out_ << kSpHeader << '\n';
  write_system(out_, system);
}

void SpWriter::on_query(const LinearInequality& affirmative, const LinearInequality& negated) {
  out_ << "q " << affirmative.to_string() << " ; " << negated.to_string() << '\n';
}

void SpWriter::on_leaf(const FarkasCertificate& cert) {
  out_ << 'l';
  if (!cert.empty()) out_ << ' ' << cert.to_string();
  out_ << '\n';
}

void SpWriter::finish() { out_ << "end\n"; }

SpReader::SpReader(std::istream& in) : in_(in) {
  Lines lines(in_, &line_);
  expect_header(lines, kSpHeader);
  system_ = read_system(lines);
}

bool SpReader::next_line(std::string& line) {
  Lines lines(in_, &line_);
  return lines.next(line);
}

void SpReader::stream(SpSink& sink) {
  std::size_t open = 1;
  std::string line;
  while (true) {
    if (!next_line(line)) throw ParseError("proof is missing its 'end' line", line_ + 1, 1);
    std::string_view v = trim(line);
    if (v == "end") {
      if (open != 0) throw ParseError("proof tree is incomplete", line_, 1);
      break;
    }
    if (open == 0) throw ParseError("node after a complete tree", line_, 1);
    if (v.size() >= 2 && v[0] == 'q' && v[1] == ' ') {
      auto semi = v.find(';');
      if (semi == std::string_view::npos) throw ParseError("query needs '<aff> ; <neg>'", line_, 1);
      std::string_view aff = v.substr(2, semi - 2);
      std::string_view neg = v.substr(semi + 1);
      LinearInequality a = parse_inequality(aff, line_, column_of(line, aff));
      LinearInequality n = parse_inequality(neg, line_, column_of(line, neg));
      ++open;
      sink.on_query(a, n);
    } else if (v == "l" || (v.size() >= 2 && v[0] == 'l' && v[1] == ' ')) {
      std::string_view body = v.substr(1);
      FarkasCertificate cert = parse_certificate(body, line_, column_of(line, body));
      --open;
      sink.on_leaf(cert);
    } else {
      throw ParseError("expected 'q', 'l' or 'end'", line_, 1);
    }
  }
  Lines lines(in_, &line_);
  expect_end(lines);
}

std::string write_sp(const SpProof& proof) {
  std::ostringstream out;
  SpWriter writer(out, proof.system);
  if (proof.root != nullptr) emit(*proof.root, writer);
  writer.finish();
  return out.str();
}

SpProof parse_sp(std::string_view text) {
  std::istringstream in{std::string(text)};
  SpReader reader(in);
  SpTreeBuilder builder;
  reader.stream(builder);
  return SpProof{reader.system(), builder.root()};
}

std::string write_cp(const CpProof& proof) {
  std::ostringstream out;
  out << kCpHeader << '\n';
  write_system(out, proof.system);
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    out << i << ": " << proof.lines[i].ineq.to_string() << " ; "
        << cp_just_to_string(proof.lines[i].just) << '\n';
  }
  out << "end\n";
  return out.str();
}

CpProof parse_cp(std::string_view text) {
  std::istringstream in{std::string(text)};
  Lines lines(in);
  expect_header(lines, kCpHeader);
  CpProof proof{read_system(lines), {}};
  while (true) {
    std::string line = lines.require("a proof line or 'end'");
    if (trim(line) == "end") break;
    std::string_view rest = numbered(line, proof.lines.size(), lines.line());
    auto parts = split_on(rest, ';');
    if (parts.size() != 2) throw ParseError("expected '<ineq> ; <rule>'", lines.line(), 1);
    proof.lines.push_back({inequality_at(line, parts[0], lines.line()),
                           parse_cp_just(line, parts[1], lines.line())});
  }
  expect_end(lines);
  return proof;
}

std::string write_cp_config(const CpConfigProof& proof) {
  std::ostringstream out;
  out << kCpConfigHeader << '\n';
  write_system(out, proof.system);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const auto& step = proof.steps[i];
    out << i << ": ";
    if (step.line) {
      out << step.line->ineq.to_string() << " ; " << cp_just_to_string(step.line->just);
      if (!step.erase.empty()) out << " ; " << erase_to_string(step.erase);
    } else {
      out << erase_to_string(step.erase);
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

CpConfigProof parse_cp_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  Lines lines(in);
  expect_header(lines, kCpConfigHeader);
  CpConfigProof proof{read_system(lines), {}};
  while (true) {
    std::string line = lines.require("a step or 'end'");
    if (trim(line) == "end") break;
    std::string_view rest = numbered(line, proof.steps.size(), lines.line());
    auto parts = split_on(rest, ';');
    CpConfigStep step;
    if (parts.size() == 1) {
      step.erase = parse_erase(line, parts[0], lines.line());
    } else if (parts.size() == 2 || parts.size() == 3) {
      step.line = CpLine{inequality_at(line, parts[0], lines.line()),
                         parse_cp_just(line, parts[1], lines.line())};
      if (parts.size() == 3) step.erase = parse_erase(line, parts[2], lines.line());
    } else {
      throw ParseError("too many ';' separated fields", lines.line(), 1);
    }
    proof.steps.push_back(std::move(step));
  }
  expect_end(lines);
  return proof;
}

std::string write_rcp(const RcpProof& proof) {
  std::ostringstream out;
  out << kRcpHeader << '\n';
  write_system(out, proof.system);
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    out << i << ": " << proof.lines[i].clause.to_string() << " ; "
        << rcp_rule_to_string(proof.lines[i].rule) << '\n';
  }
  out << "end\n";
  return out.str();
}

RcpProof parse_rcp(std::string_view text) {
  std::istringstream in{std::string(text)};
  Lines lines(in);
  expect_header(lines, kRcpHeader);
  RcpProof proof{read_system(lines), {}};
  while (true) {
    std::string line = lines.require("a proof line or 'end'");
    if (trim(line) == "end") break;
    std::string_view rest = numbered(line, proof.lines.size(), lines.line());
    auto semi = rest.rfind(';');
    auto close = rest.rfind(']');
    if (semi == std::string_view::npos || close == std::string_view::npos || semi < close) {
      throw ParseError("expected '[...] ; <rule>'", lines.line(), 1);
    }
    proof.lines.push_back({parse_clause(line, rest.substr(0, semi), lines.line()),
                           parse_rcp_rule(line, rest.substr(semi + 1), lines.line())});
  }
  expect_end(lines);
  return proof;
}

std::string sniff_header(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  while (reader.next(line)) {
    auto t = trim(line);
    if (!t.empty() && t.front() != '#') return std::string(t);
  }
  return {};
}

}  // namespace stabkit
