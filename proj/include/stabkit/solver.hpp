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


#ifndef STABKIT_SOLVER_HPP_
#define STABKIT_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "stabkit/sp.hpp"

namespace stabkit {

enum class Heuristic {
  kVariable,  // x_i >= 1 on the most fractional coordinate of the LP point
  kHalve,     // sum over the fractional support >= ceil(its mass); experimental
};

std::optional<Heuristic> parse_heuristic(std::string_view name);

struct SolveLimits {
  std::size_t max_nodes = 1'000'000;
  std::size_t max_depth = 10'000;
  double time_budget_seconds = std::numeric_limits<double>::infinity();
  // Nonzero seeds break ties between equally fractional variables at random.
  std::uint64_t seed = 0;
};

struct SolveStats {
  std::size_t nodes = 0;
  std::size_t lp_calls = 0;
  std::size_t max_depth = 0;
  double seconds = 0;
};

struct ResourceExceeded {
  std::string reason;
  SolveStats stats;
};

struct SolveResult {
  std::variant<SpProof, Assignment, ResourceExceeded> outcome;
  SolveStats stats;

  bool refuted() const { return std::holds_alternative<SpProof>(outcome); }
  bool satisfied() const { return std::holds_alternative<Assignment>(outcome); }
};

// Branch-and-prune SP search. The system must include the box axioms. A
// returned proof has passed verify_sp and a returned assignment satisfies
// every inequality.
SolveResult sp_solve(const InequalitySystem& system, Heuristic heuristic = Heuristic::kVariable,
                     const SolveLimits& limits = {});

struct BruteForceResult {
  bool unsat = false;
  std::optional<Assignment> witness;  // first satisfying point in Gray-code order
};

inline constexpr std::size_t kBruteForceCap = 25;

// Exhaustive 0/1 enumeration. Throws ResourceError above `cap` variables.
BruteForceResult brute_force_unsat(const InequalitySystem& system,
                                   std::size_t cap = kBruteForceCap);

}  // namespace stabkit

#endif  // STABKIT_SOLVER_HPP_
