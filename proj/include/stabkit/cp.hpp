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


#ifndef STABKIT_CP_HPP_
#define STABKIT_CP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stabkit/inequality.hpp"
#include "stabkit/system.hpp"

namespace stabkit {

struct CpAxiom {
  std::uint32_t index = 0;
  friend bool operator==(const CpAxiom&, const CpAxiom&) = default;
};

struct CpLinComb {
  std::size_t j = 0;
  std::size_t k = 0;
  BigInt alpha = 1;
  BigInt beta = 1;
  friend bool operator==(const CpLinComb&, const CpLinComb&) = default;
};

struct CpDivision {
  std::size_t j = 0;
  BigInt alpha = 1;
  friend bool operator==(const CpDivision&, const CpDivision&) = default;
};

using CpJustification = std::variant<CpAxiom, CpLinComb, CpDivision>;

struct CpLine {
  LinearInequality ineq;
  CpJustification just;
  friend bool operator==(const CpLine&, const CpLine&) = default;
};

struct CpProof {
  InequalitySystem system;
  std::vector<CpLine> lines;
};

struct LineReport {
  bool ok = true;
  std::optional<std::size_t> failing_line;
  std::string message;
};

// Checks `line` against its premises; `premise(i)` returns nullptr for a
// reference that is not available. Returns an empty string on success.
template <typename Lookup>
std::string check_cp_step(const InequalitySystem& system, const CpLine& line, Lookup premise);

LineReport verify_cp(const CpProof& proof);

struct CpShape {
  std::size_t rank = 0;
  std::size_t length = 0;
  bool is_tree = false;
};

// Requires a verified proof.
CpShape cp_shape(const CpProof& proof);

// Configuration form: a step optionally derives one line (its id is the step
// index) and then erases the listed ids from the configuration.
struct CpConfigStep {
  std::optional<CpLine> line;
  std::vector<std::size_t> erase;
  friend bool operator==(const CpConfigStep&, const CpConfigStep&) = default;
};

struct CpConfigProof {
  InequalitySystem system;
  std::vector<CpConfigStep> steps;
};

struct CpConfigReport {
  LineReport report;
  std::size_t space = 0;
  std::size_t length = 0;
};

CpConfigReport verify_cp_config(const CpConfigProof& proof);

// Replays a line proof step by step. With erase_dead, every line is erased
// right after its last use; the final 0 >= 1 line is kept.
CpConfigProof replay_as_config(const CpProof& proof, bool erase_dead = false);

// Configurations D_1..D_k as sets of step ids, in increasing id order.
std::vector<std::vector<std::size_t>> cp_configurations(const CpConfigProof& proof);

// Implementation detail of check_cp_step.
std::string check_cp_step_impl(const InequalitySystem& system, const CpLine& line,
                               const LinearInequality* p1, const LinearInequality* p2);

template <typename Lookup>
std::string check_cp_step(const InequalitySystem& system, const CpLine& line, Lookup premise) {
  const LinearInequality* p1 = nullptr;
  const LinearInequality* p2 = nullptr;
  if (const auto* lc = std::get_if<CpLinComb>(&line.just)) {
    p1 = premise(lc->j);
    p2 = premise(lc->k);
    if (p1 == nullptr) return "premise " + std::to_string(lc->j) + " is not available";
    if (p2 == nullptr) return "premise " + std::to_string(lc->k) + " is not available";
  } else if (const auto* dv = std::get_if<CpDivision>(&line.just)) {
    p1 = premise(dv->j);
    if (p1 == nullptr) return "premise " + std::to_string(dv->j) + " is not available";
  }
  return check_cp_step_impl(system, line, p1, p2);
}

}  // namespace stabkit

#endif  // STABKIT_CP_HPP_
