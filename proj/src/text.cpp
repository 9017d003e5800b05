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


#include "stabkit/text.hpp"

#include <cctype>
#include <limits>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based within the parsed text
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

bool parse_var(std::string_view tok, std::uint32_t& index) {
  if (tok.size() < 2 || tok[0] != 'x') return false;
  std::uint64_t value = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    value = value * 10 + static_cast<std::uint64_t>(tok[i] - '0');
    if (value > std::numeric_limits<std::uint32_t>::max()) return false;
  }
  if (value == 0) return false;
  index = static_cast<std::uint32_t>(value - 1);
  return true;
}

}  // namespace

std::vector<LinearInequality> Constraint::normalized() const {
  std::vector<LinearInequality> out;
  if (relation != Relation::kLe) out.emplace_back(terms, rhs);
  if (relation != Relation::kGe) {
    std::vector<Term> neg = terms;
    for (auto& t : neg) t.coeff = -t.coeff;
    out.emplace_back(std::move(neg), -rhs);
  }
  return out;
}

Constraint parse_constraint(std::string_view text, std::size_t line, std::size_t column_base,
                            bool allow_negated) {
  auto tokens = tokenize(text);
  auto fail = [&](const std::string& msg, std::size_t col) -> ParseError {
    return ParseError(msg, line, column_base + col - 1);
  };
  Constraint c;
  std::size_t i = 0;
  auto is_relation = [](std::string_view t) { return t == ">=" || t == "<=" || t == "="; };
  if (i < tokens.size() && tokens[i].text == "0" && i + 1 < tokens.size() &&
      is_relation(tokens[i + 1].text)) {
    ++i;
  } else {
    while (i < tokens.size() && !is_relation(tokens[i].text)) {
      BigInt coeff = 1;
      if (auto v = parse_bigint(tokens[i].text)) {
        coeff = *v;
        ++i;
        if (i == tokens.size()) throw fail("expected a variable after coefficient", text.size() + 1);
      }
      std::string_view tok = tokens[i].text;
      bool negated = false;
      if (!tok.empty() && tok[0] == '~') {
        if (!allow_negated) throw fail("negated literals are not allowed here", tokens[i].column);
        negated = true;
        tok.remove_prefix(1);
      }
      std::uint32_t index = 0;
      if (!parse_var(tok, index)) {
        throw fail("expected a variable name x<i>, got '" + std::string(tokens[i].text) + "'",
                   tokens[i].column);
      }
      if (negated) {
        c.terms.push_back({VarId{index}, -coeff});
        c.rhs -= coeff;
      } else {
        c.terms.push_back({VarId{index}, coeff});
      }
      ++i;
    }
  }
  if (i == tokens.size()) throw fail("missing relation", text.size() + 1);
  std::string_view rel = tokens[i].text;
  c.relation = rel == ">=" ? Relation::kGe : rel == "<=" ? Relation::kLe : Relation::kEq;
  ++i;
  if (i == tokens.size()) throw fail("missing right-hand side", text.size() + 1);
  auto rhs = parse_bigint(tokens[i].text);
  if (!rhs) throw fail("malformed integer '" + std::string(tokens[i].text) + "'", tokens[i].column);
  c.rhs += *rhs;
  ++i;
  if (i < tokens.size() && tokens[i].text == ";") ++i;
  if (i < tokens.size()) throw fail("unexpected trailing token", tokens[i].column);
  return c;
}

LinearInequality parse_inequality(std::string_view text, std::size_t line,
                                  std::size_t column_base) {
  Constraint c = parse_constraint(text, line, column_base);
  if (c.relation != Relation::kGe) {
    throw ParseError("expected a '>=' inequality", line, column_base);
  }
  return LinearInequality(std::move(c.terms), std::move(c.rhs));
}

bool LineReader::next(std::string_view& line) {
  if (pos_ >= text_.size()) return false;
  std::size_t end = text_.find('\n', pos_);
  if (end == std::string_view::npos) end = text_.size();
  line = text_.substr(pos_, end - pos_);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  pos_ = end + 1;
  ++line_;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  for (const auto& t : tokenize(s)) out.push_back(t.text);
  return out;
}

}  // namespace stabkit
