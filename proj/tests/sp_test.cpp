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

#include <functional>

#include "corpus.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/formulas.hpp"
#include "stabkit/sp.hpp"
#include "stabkit/tseitin_refuter.hpp"

namespace stabkit {
namespace {

LinearInequality ge(std::vector<std::pair<std::uint32_t, long>> terms, long bound) {
  std::vector<Term> t;
  for (auto [v, c] : terms) t.push_back({VarId{v}, BigInt(c)});
  return LinearInequality(std::move(t), BigInt(bound));
}

// Root x+y >= 2, both children x-y >= 1, over the line x - y = 1/2.
SpNodePtr figure_one_skeleton() {
  auto inner = [] { return make_query(ge({{0, 1}, {1, -1}}, 1), make_leaf(), make_leaf()); };
  return make_query(ge({{0, 1}, {1, 1}}, 2), inner(), inner());
}

InequalitySystem half_line() {
  return InequalitySystem(2, {ge({{0, 2}, {1, -2}}, 1), ge({{0, -2}, {1, 2}}, -1)});
}

TEST(Sp, FigureOneCompletes) {
  SpProof proof = complete_skeleton(half_line(), figure_one_skeleton());
  EXPECT_TRUE(verify_sp(proof).ok);
  SpStats stats = sp_stats(proof);
  EXPECT_EQ(stats.length, 7u);
  EXPECT_EQ(stats.depth, 2u);
  EXPECT_EQ(stats.leaves, 4u);
}

TEST(Sp, SingleLeaf) {
  InequalitySystem s(1, {LinearInequality::contradiction()});
  SpProof proof{s, make_leaf(FarkasCertificate::single(AxiomRef::axiom(0)))};
  EXPECT_TRUE(verify_sp(proof).ok);
  EXPECT_EQ(sp_stats(proof).length, 1u);
  EXPECT_EQ(sp_stats(proof).depth, 0u);
}

TEST(Sp, CompleteVariableTree) {
  // All 2^k points of {0,1}^k are cut off by a contradictory axiom below.
  for (std::uint32_t k = 1; k <= 4; ++k) {
    std::function<SpNodePtr(std::uint32_t)> build = [&](std::uint32_t d) -> SpNodePtr {
      if (d == k) return make_leaf();
      return make_query(LinearInequality::unit(VarId{d}, 1, 1), build(d + 1), build(d + 1));
    };
    InequalitySystem s(k, {LinearInequality::contradiction()});
    SpProof proof = complete_skeleton(s, build(0));
    EXPECT_TRUE(verify_sp(proof).ok);
    EXPECT_EQ(sp_stats(proof).length, (std::size_t{2} << k) - 1);
    EXPECT_EQ(sp_stats(proof).depth, k);
  }
}

TEST(Sp, RejectsBrokenNegation) {
  SpProof good = complete_skeleton(half_line(), figure_one_skeleton());
  const auto& q = good.root->query();
  SpProof bad{good.system, make_query(q.affirmative, ge({{0, -1}, {1, -1}}, 0), q.left, q.right)};
  VerifyReport r = verify_sp(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failing_node, 0u);
}

TEST(Sp, PerturbedCoefficientRejected) {
  SpProof good = complete_skeleton(half_line(), figure_one_skeleton());
  const auto& q = good.root->query();
  const auto& q2 = q.left->query();
  FarkasCertificate cert = q2.left->leaf().cert;
  std::vector<CertificateTerm> terms = cert.terms();
  terms[0].coeff += 1;
  SpNodePtr left = make_query(q2.affirmative, make_leaf(FarkasCertificate(terms)), q2.right);
  VerifyReport r = verify_sp({good.system, make_query(q.affirmative, left, q.right)});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failing_node, 2u);
  EXPECT_EQ(r.path, "LL");
}

TEST(Sp, DanglingPathReferenceRejected) {
  InequalitySystem s(1, {LinearInequality::contradiction()});
  SpProof proof{s, make_leaf(FarkasCertificate::single(AxiomRef::path(0)))};
  EXPECT_FALSE(verify_sp(proof).ok);
}

TEST(Sp, SkeletonWithoutQueriesOnSatisfiableSystem) {
  InequalitySystem s(2, {ge({{0, 1}, {1, 1}}, 1)});
  try {
    complete_skeleton(s, make_leaf());
    FAIL();
  } catch (const IncompleteRefutationError& e) {
    EXPECT_EQ(e.path(), "");
    ASSERT_EQ(e.witness().size(), 2u);
    EXPECT_GE(e.witness()[0] + e.witness()[1], 1);
  }
}

TEST(Sp, ClauseSkeleton) {
  Cnf cnf{2, {{{VarId{0}, true}, {VarId{1}, true}}, {{VarId{0}, false}}, {{VarId{1}, false}}}, {}};
  auto leafq = [] { return make_query(LinearInequality::unit(VarId{1}, 1, 1), make_leaf(),
                                      make_leaf()); };
  SpNodePtr sk = make_query(LinearInequality::unit(VarId{0}, 1, 1), leafq(), leafq());
  EXPECT_TRUE(verify_sp(complete_skeleton(cnf_to_system(cnf), sk)).ok);
}

TEST(Sp, EvaluateSearchSingleLeaf) {
  InequalitySystem s(1, {ge({{0, 1}}, 1), ge({{0, -1}}, 0)});
  FarkasCertificate cert({{AxiomRef::axiom(0), 1}, {AxiomRef::axiom(1), 1}});
  SpProof proof{s, make_leaf(cert)};
  EXPECT_EQ(evaluate_search(proof, Assignment(std::vector<std::uint8_t>{0})), AxiomRef::axiom(0));
  EXPECT_EQ(evaluate_search(proof, Assignment(std::vector<std::uint8_t>{1})), AxiomRef::axiom(1));
  EXPECT_THROW(evaluate_search(proof, Assignment(0)), DimensionError);
}

TEST(Sp, EvaluateSearchTseitinTriangle) {
  SpProof proof = refute_tseitin(complete_graph(3), {1, 0, 0});
  AxiomRef ref = evaluate_search(proof, Assignment(3));
  ASSERT_TRUE(ref.is_axiom());
  // Vertex 0 carries the odd label; its clauses come first.
  auto offsets = tseitin_clause_offsets(complete_graph(3), {1, 0, 0});
  EXPECT_LT(ref.index, offsets[1]);
  EXPECT_FALSE(evaluate(proof.system.axiom(ref.index), Assignment(3)));
}

TEST(Sp, EvaluateSearchExhaustive) {
  auto corpus = testing::sp_corpus(7, 8);
  ASSERT_GT(corpus.size(), 50u);
  for (const auto& [name, proof] : corpus) {
    ASSERT_TRUE(verify_sp(proof).ok) << name;
    std::size_t n = proof.system.nvars();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Assignment a = Assignment::from_mask(n, mask);
      AxiomRef ref = evaluate_search(proof, a);
      ASSERT_TRUE(ref.is_axiom()) << name;
      ASSERT_FALSE(evaluate(proof.system.axiom(ref.index), a)) << name;
    }
  }
}

TEST(Sp, ParallelVerifierAgrees) {
  SpProof proof = refute_tseitin(complete_graph(5), odd_labeling(5, 2));
  VerifyReport seq = verify_sp(proof, 1);
  VerifyReport par = verify_sp(proof, 4);
  EXPECT_TRUE(seq.ok);
  EXPECT_TRUE(par.ok);
  EXPECT_EQ(seq.nodes, par.nodes);
}

TEST(Sp, StreamVerifierFlagsTruncation) {
  InequalitySystem s = half_line();
  SpStreamVerifier v(s);
  v.on_query(ge({{0, 1}}, 1), ge({{0, -1}}, 0));
  VerifyReport r = v.finish();
  EXPECT_FALSE(r.ok);
}

}  // namespace
}  // namespace stabkit
