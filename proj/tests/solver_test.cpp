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


#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/solver.hpp"
#include "stabkit/tseitin_refuter.hpp"

namespace stabkit {
namespace {

Cnf cnf_of(std::size_t n, std::vector<std::vector<int>> clauses) {
  Cnf cnf{n, {}, {}};
  for (const auto& c : clauses) {
    Clause clause;
    for (int lit : c) clause.push_back({VarId{static_cast<std::uint32_t>(std::abs(lit) - 1)}, lit > 0});
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

TEST(Solver, UnitContradiction) {
  for (Heuristic h : {Heuristic::kVariable, Heuristic::kHalve}) {
    SolveResult r = sp_solve(cnf_to_system(cnf_of(1, {{1}, {-1}})), h);
    ASSERT_TRUE(r.refuted());
    EXPECT_LE(sp_stats(std::get<SpProof>(r.outcome)).depth, 1u);
  }
}

TEST(Solver, Pigeonhole) {
  InequalitySystem s = cnf_to_system(testing::pigeonhole(3, 2));
  for (Heuristic h : {Heuristic::kVariable, Heuristic::kHalve}) {
    SolveResult r = sp_solve(s, h);
    ASSERT_TRUE(r.refuted());
    EXPECT_TRUE(verify_sp(std::get<SpProof>(r.outcome)).ok);
  }
  EXPECT_TRUE(brute_force_unsat(s).unsat);
}

TEST(Solver, SingleClauseIsSatisfied) {
  InequalitySystem s = cnf_to_system(cnf_of(2, {{1, 2}}));
  SolveResult r = sp_solve(s);
  ASSERT_TRUE(r.satisfied());
  const Assignment& a = std::get<Assignment>(r.outcome);
  EXPECT_TRUE(a[0] || a[1]);
}

TEST(Solver, AgreesWithBruteForce) {
  auto corpus = testing::solver_corpus(9, 60);
  for (const auto& [name, system] : corpus) {
    if (system.nvars() > 12) continue;
    BruteForceResult bf = brute_force_unsat(system);
    for (Heuristic h : {Heuristic::kVariable, Heuristic::kHalve}) {
      SolveResult r = sp_solve(system, h);
      ASSERT_EQ(r.refuted(), bf.unsat) << name;
      if (r.satisfied()) {
        for (const auto& ineq : system.axioms()) {
          EXPECT_TRUE(evaluate(ineq, std::get<Assignment>(r.outcome))) << name;
        }
      }
    }
  }
}

TEST(Solver, Deterministic) {
  InequalitySystem s = tseitin_system(complete_graph(4), odd_labeling(4, 2));
  for (Heuristic h : {Heuristic::kVariable, Heuristic::kHalve}) {
    SolveLimits limits;
    limits.seed = 17;
    SolveResult a = sp_solve(s, h, limits);
    SolveResult b = sp_solve(s, h, limits);
    ASSERT_TRUE(a.refuted());
    SpStats sa = sp_stats(std::get<SpProof>(a.outcome));
    SpStats sb = sp_stats(std::get<SpProof>(b.outcome));
    EXPECT_EQ(sa.length, sb.length);
    EXPECT_EQ(sa.bitsize, sb.bitsize);
  }
}

TEST(Solver, Limits) {
  InequalitySystem s = tseitin_system(complete_graph(5), odd_labeling(5, 1));
  SolveLimits limits;
  limits.max_nodes = 3;
  SolveResult r = sp_solve(s, Heuristic::kVariable, limits);
  ASSERT_TRUE(std::holds_alternative<ResourceExceeded>(r.outcome));
  EXPECT_GT(std::get<ResourceExceeded>(r.outcome).stats.nodes, 0u);
  limits = {};
  limits.max_depth = 1;
  r = sp_solve(s, Heuristic::kVariable, limits);
  EXPECT_TRUE(std::holds_alternative<ResourceExceeded>(r.outcome));
  EXPECT_THROW(sp_solve(InequalitySystem(1, {}, false)), DomainError);
}

TEST(BruteForce, Examples) {
  EXPECT_TRUE(brute_force_unsat(tseitin_system(complete_graph(3), {1, 0, 0})).unsat);
  BruteForceResult empty = brute_force_unsat(InequalitySystem(3, {}));
  ASSERT_FALSE(empty.unsat);
  EXPECT_EQ(*empty.witness, Assignment(3));
  EXPECT_TRUE(brute_force_unsat(cnf_to_system(cnf_of(2, {{1, 2}, {-1}, {-2}}))).unsat);
  EXPECT_THROW(brute_force_unsat(InequalitySystem(26, {})), ResourceError);
  EXPECT_THROW(brute_force_unsat(InequalitySystem(5, {}), 4), ResourceError);
}

TEST(BruteForce, WideCoefficientsUseExactFallback) {
  BigInt big = BigInt(1) << 70;
  // big*x1 - big*x2 >= 1 and x2 >= 1: unsat over 0/1.
  InequalitySystem s(2, {LinearInequality({{VarId{0}, big}, {VarId{1}, -big}}, 1),
                         LinearInequality::unit(VarId{1}, 1, 1)});
  EXPECT_TRUE(brute_force_unsat(s).unsat);
  InequalitySystem t(2, {LinearInequality({{VarId{0}, big}, {VarId{1}, -big}}, big)});
  BruteForceResult r = brute_force_unsat(t);
  ASSERT_FALSE(r.unsat);
  EXPECT_EQ(r.witness->to_string(), "10");
}

TEST(BruteForce, MatchesOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 6;
    std::vector<LinearInequality> rows;
    for (std::size_t r = 0; r < 1 + rng() % 6; ++r) {
      rows.push_back(testing::random_inequality(rng, n, 3));
    }
    EXPECT_EQ(brute_force_unsat(InequalitySystem(n, rows)).unsat, testing::brute_unsat(rows, n));
  }
}

}  // namespace
}  // namespace stabkit
