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


#ifndef STABKIT_RCP_HPP_
#define STABKIT_RCP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "stabkit/cp.hpp"
#include "stabkit/inequality.hpp"
#include "stabkit/sp.hpp"
#include "stabkit/system.hpp"

namespace stabkit {

// Disjunction of inequalities kept as a sorted set.
class RcpClause {
 public:
  RcpClause() = default;
  explicit RcpClause(std::vector<LinearInequality> members);

  const std::vector<LinearInequality>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const LinearInequality& ineq) const;

  RcpClause with(const LinearInequality& ineq) const;
  RcpClause without(const LinearInequality& ineq) const;

  // "[+1 x1 >= 1 | -1 x1 >= 0]", "[]" for the empty clause.
  std::string to_string() const;

  friend bool operator==(const RcpClause&, const RcpClause&) = default;

 private:
  std::vector<LinearInequality> members_;
};

struct RcpInput {
  std::uint32_t index = 0;
  friend bool operator==(const RcpInput&, const RcpInput&) = default;
};
struct RcpAxiomIntro {
  friend bool operator==(const RcpAxiomIntro&, const RcpAxiomIntro&) = default;
};
struct RcpWeakening {
  std::size_t j = 0;
  LinearInequality added;
  friend bool operator==(const RcpWeakening&, const RcpWeakening&) = default;
};
struct RcpCut {
  std::size_t j = 0;
  std::size_t k = 0;
  friend bool operator==(const RcpCut&, const RcpCut&) = default;
};
struct RcpElimination {
  std::size_t j = 0;
  friend bool operator==(const RcpElimination&, const RcpElimination&) = default;
};

using RcpRule = std::variant<RcpInput, RcpAxiomIntro, RcpWeakening, CpLinComb, CpDivision, RcpCut,
                             RcpElimination>;

struct RcpLine {
  RcpClause clause;
  RcpRule rule;
  friend bool operator==(const RcpLine&, const RcpLine&) = default;
};

// The target is the clause of the last line.
struct RcpProof {
  InequalitySystem system;
  std::vector<RcpLine> lines;
};

LineReport verify_rcp(const RcpProof& proof);

struct RcpShape {
  std::size_t length = 0;
  std::size_t depth = 0;
  std::size_t width = 0;
  bool is_tree = false;
};

RcpShape rcp_shape(const RcpProof& proof);

// Derives the empty clause from a verified SP refutation.
RcpProof sp_to_rcp(const SpProof& proof);

// Requires a verified tree-like proof whose target members are negations of
// system axioms (the empty target is the usual case).
SpProof rcp_to_sp(const RcpProof& proof);

}  // namespace stabkit

#endif  // STABKIT_RCP_HPP_
