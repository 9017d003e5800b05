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


// Line-oriented text helpers shared by the formula and proof formats.

#ifndef STABKIT_TEXT_HPP_
#define STABKIT_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stabkit/inequality.hpp"

namespace stabkit {

enum class Relation { kGe, kLe, kEq };

struct Constraint {
  std::vector<Term> terms;
  Relation relation = Relation::kGe;
  BigInt rhs;

  // Normalised to >= form; equalities yield two inequalities.
  std::vector<LinearInequality> normalized() const;
};

// Parses "<coeff> x<i> ... <rel> <rhs>" with 1-based variable names. An empty
// left-hand side is written "0". Negated literals "~x<i>" are accepted when
// allow_negated is set. Positions in errors are reported relative to line and
// column_base.
Constraint parse_constraint(std::string_view text, std::size_t line, std::size_t column_base = 1,
                            bool allow_negated = false);

// A ">=" constraint, as produced by LinearInequality::to_string.
LinearInequality parse_inequality(std::string_view text, std::size_t line,
                                  std::size_t column_base = 1);

// Splits text into lines, keeping track of 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line with trailing '\r' stripped; false at end of input.
  bool next(std::string_view& line);
  std::size_t line_number() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_ws(std::string_view s);

}  // namespace stabkit

#endif  // STABKIT_TEXT_HPP_
