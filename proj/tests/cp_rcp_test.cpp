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
#include "stabkit/cp.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/rcp.hpp"
#include "stabkit/tseitin_refuter.hpp"

namespace stabkit {
namespace {

LinearInequality ge(std::vector<std::pair<std::uint32_t, long>> terms, long bound) {
  std::vector<Term> t;
  for (auto [v, c] : terms) t.push_back({VarId{v}, BigInt(c)});
  return LinearInequality(std::move(t), BigInt(bound));
}

CpProof three_lines() {
  InequalitySystem s(1, {ge({{0, 1}}, 1), ge({{0, -1}}, 0)});
  return CpProof{s,
                 {{ge({{0, 1}}, 1), CpAxiom{0}},
                  {ge({{0, -1}}, 0), CpAxiom{1}},
                  {LinearInequality::contradiction(), CpLinComb{0, 1, 1, 1}}}};
}

TEST(Cp, ThreeLineProof) {
  CpProof p = three_lines();
  EXPECT_TRUE(verify_cp(p).ok);
  CpShape shape = cp_shape(p);
  EXPECT_EQ(shape.rank, 1u);
  EXPECT_EQ(shape.length, 3u);
  EXPECT_TRUE(shape.is_tree);
}

TEST(Cp, Division) {
  InequalitySystem s(2, {ge({{0, 2}, {1, 2}}, 3), ge({{0, 2}, {1, 3}}, 3)});
  CpProof ok{s, {{s.axiom(0), CpAxiom{0}}, {ge({{0, 1}, {1, 1}}, 2), CpDivision{0, 2}}}};
  std::string err = check_cp_step(s, ok.lines[1], [&](std::size_t j) {
    return j == 0 ? &ok.lines[0].ineq : nullptr;
  });
  EXPECT_EQ(err, "");
  CpProof bad{s, {{s.axiom(1), CpAxiom{1}}, {ge({{0, 1}, {1, 1}}, 2), CpDivision{0, 2}}}};
  LineReport r = verify_cp(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failing_line, 1u);
}

TEST(Cp, RejectsWrongLines) {
  CpProof p = three_lines();
  p.lines[2].ineq = ge({}, 2);
  EXPECT_FALSE(verify_cp(p).ok);
  p = three_lines();
  p.lines[0].just = CpAxiom{1};
  EXPECT_FALSE(verify_cp(p).ok);
  p = three_lines();
  p.lines[2].just = CpLinComb{0, 2, 1, 1};
  EXPECT_FALSE(verify_cp(p).ok);
  p = three_lines();
  p.lines.pop_back();
  EXPECT_FALSE(verify_cp(p).ok);
  p = three_lines();
  p.lines[2].just = CpLinComb{0, 1, 0, 1};
  EXPECT_FALSE(verify_cp(p).ok);
}

TEST(Cp, ShapeOfChainsAndDags) {
  CpShape chain = cp_shape(testing::division_chain(4, 2));
  EXPECT_EQ(chain.rank, 8u);
  EXPECT_TRUE(chain.is_tree);
  CpProof p = three_lines();
  p.lines.push_back({LinearInequality::combine(1, p.lines[2].ineq, 1, p.lines[2].ineq),
                     CpLinComb{2, 2, 1, 1}});
  EXPECT_FALSE(cp_shape(p).is_tree);
  EXPECT_THROW(cp_shape(CpProof{p.system, {}}), InvalidProofError);
}

TEST(Cp, CorpusShapes) {
  for (const auto& [name, p] : testing::cp_corpus(1, 20)) {
    ASSERT_TRUE(verify_cp(p).ok) << name;
    CpShape s = cp_shape(p);
    EXPECT_LE(s.rank + 1, s.length) << name;
  }
}

TEST(CpConfig, SpaceOfReplays) {
  CpProof p = three_lines();
  CpConfigReport keep = verify_cp_config(replay_as_config(p, false));
  EXPECT_TRUE(keep.report.ok);
  EXPECT_EQ(keep.space, 3u);
  CpConfigProof erasing = replay_as_config(p, false);
  erasing.steps[2].erase = {0};
  CpConfigReport r = verify_cp_config(erasing);
  EXPECT_TRUE(r.report.ok);
  EXPECT_EQ(r.space, 2u);
}

TEST(CpConfig, NoErasureSpaceEqualsLength) {
  for (const auto& [name, p] : testing::cp_corpus(2, 10)) {
    CpConfigReport r = verify_cp_config(replay_as_config(p, false));
    ASSERT_TRUE(r.report.ok) << name;
    EXPECT_EQ(r.space, p.lines.size()) << name;
    EXPECT_TRUE(verify_cp_config(replay_as_config(p, true)).report.ok) << name;
  }
}

TEST(CpConfig, RejectsUseOfErasedLine) {
  CpConfigProof c = replay_as_config(three_lines(), false);
  c.steps[1].erase = {0};
  CpConfigReport r = verify_cp_config(c);
  EXPECT_FALSE(r.report.ok);
  EXPECT_EQ(r.report.failing_line, 2u);
}

TEST(CpConfig, TrailingErasure) {
  CpConfigProof c = replay_as_config(three_lines(), false);
  c.steps.push_back({std::nullopt, {0, 1, 2}});
  EXPECT_TRUE(verify_cp_config(c).report.ok);
  EXPECT_TRUE(cp_configurations(c).back().empty());
  c.steps.push_back({c.steps[0].line, {}});
  EXPECT_FALSE(verify_cp_config(c).report.ok);
}

TEST(RcpClause, Canonical) {
  RcpClause a({ge({{0, 1}}, 1), ge({{1, 1}}, 1), ge({{0, 1}}, 1)});
  RcpClause b({ge({{1, 1}}, 1), ge({{0, 1}}, 1)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(RcpClause().to_string(), "[]");
}

TEST(Rcp, AxiomIntroAndCut) {
  InequalitySystem s(1, {ge({{0, 1}}, 1), ge({{0, -1}}, 0)});
  LinearInequality l = ge({{0, 1}}, 1);
  RcpProof p{s, {{RcpClause({l, integer_negation(l)}), RcpAxiomIntro{}}}};
  EXPECT_TRUE(verify_rcp(p).ok);

  RcpProof bad{s,
               {{RcpClause({l, ge({{0, 1}}, 0)}), RcpAxiomIntro{}}}};
  EXPECT_FALSE(verify_rcp(bad).ok);

  // Cut with mismatched contexts.
  LinearInequality g1 = ge({{1, 1}}, 1);
  LinearInequality g2 = ge({{1, -1}}, 0);
  InequalitySystem s2(2, {});
  RcpProof cut{s2,
               {{RcpClause({l, integer_negation(l)}), RcpAxiomIntro{}},
                {RcpClause({l, integer_negation(l), g1}), RcpWeakening{0, g1}},
                {RcpClause({g2, integer_negation(g2)}), RcpAxiomIntro{}},
                {RcpClause({g2, integer_negation(g2), integer_negation(l)}),
                 RcpWeakening{2, integer_negation(l)}},
                {RcpClause({integer_negation(l), g1, g2}), RcpCut{1, 3}}}};
  LineReport r = verify_rcp(cut);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failing_line, 4u);
}

TEST(Rcp, SingleLeafTranslation) {
  InequalitySystem s(1, {LinearInequality::contradiction()});
  SpProof sp{s, make_leaf(FarkasCertificate::single(AxiomRef::axiom(0)))};
  RcpProof r = sp_to_rcp(sp);
  EXPECT_TRUE(verify_rcp(r).ok);
  EXPECT_TRUE(r.lines.back().clause.empty());
}

TEST(Rcp, DepthOneTranslation) {
  InequalitySystem s(1, {ge({{0, 1}}, 1), ge({{0, -1}}, 0)});
  SpNodePtr sk = make_query(ge({{0, 1}}, 1), make_leaf(), make_leaf());
  SpProof sp = complete_skeleton(s, sk);
  RcpProof r = sp_to_rcp(sp);
  ASSERT_TRUE(verify_rcp(r).ok) << verify_rcp(r).message;
  EXPECT_LE(rcp_shape(r).width, 2u);
  SpProof back = rcp_to_sp(r);
  EXPECT_TRUE(verify_sp(back).ok);
}

TEST(Rcp, TseitinTriangle) {
  SpProof sp = refute_tseitin(complete_graph(3), {1, 0, 0});
  RcpProof r = sp_to_rcp(sp);
  ASSERT_TRUE(verify_rcp(r).ok);
  EXPECT_LE(rcp_shape(r).width, sp_stats(sp).depth + 1);
}

TEST(Rcp, AxiomIntroBaseCase) {
  InequalitySystem s(1, {ge({{0, -1}}, 0), ge({{0, 1}}, 1)});
  LinearInequality l = ge({{0, 1}}, 1);
  RcpProof p{s, {{RcpClause({l, integer_negation(l)}), RcpAxiomIntro{}}}};
  SpProof sp = rcp_to_sp(p);
  EXPECT_TRUE(verify_sp(sp).ok);
  EXPECT_LE(sp_stats(sp).length, 2u);
}

TEST(Rcp, RoundTripBounds) {
  for (const auto& [name, sp] : testing::sp_corpus(3, 8)) {
    RcpProof r = sp_to_rcp(sp);
    ASSERT_TRUE(verify_rcp(r).ok) << name;
    RcpShape shape = rcp_shape(r);
    EXPECT_LE(shape.width, sp_stats(sp).depth + 1) << name;
    ASSERT_TRUE(shape.is_tree) << name;
    SpProof back = rcp_to_sp(r);
    ASSERT_TRUE(verify_sp(back).ok) << name;
    SpStats st = sp_stats(back);
    EXPECT_LE(st.length, 2 * shape.length) << name;
    EXPECT_LE(st.depth, 2 * shape.depth) << name;
  }
}

TEST(Rcp, NonTreeInputRejected) {
  InequalitySystem s(1, {ge({{0, 1}}, 1), ge({{0, -1}}, 0)});
  RcpProof p{s,
             {{RcpClause({ge({{0, 1}}, 1)}), RcpInput{0}},
              {RcpClause({ge({{0, -1}}, 0)}), RcpInput{1}},
              {RcpClause({LinearInequality::contradiction()}), CpLinComb{0, 1, 1, 1}},
              {RcpClause({ge({}, 2)}), CpLinComb{2, 2, 1, 1}},
              {RcpClause(), RcpElimination{3}}}};
  ASSERT_TRUE(verify_rcp(p).ok) << verify_rcp(p).message;
  EXPECT_FALSE(rcp_shape(p).is_tree);
  EXPECT_THROW(rcp_to_sp(p), ShapeError);
}

}  // namespace
}  // namespace stabkit
