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

#include <random>

#include "oracles.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/farkas.hpp"
#include "stabkit/inequality.hpp"
#include "stabkit/system.hpp"

namespace stabkit {
namespace {

LinearInequality ineq(std::vector<std::pair<std::uint32_t, long>> terms, long bound) {
  std::vector<Term> t;
  for (auto [v, c] : terms) t.push_back({VarId{v}, BigInt(c)});
  return LinearInequality(std::move(t), BigInt(bound));
}

TEST(InequalityTest, CanonicalForm) {
  auto a = ineq({{1, 2}, {0, 3}, {1, -2}}, 4);
  EXPECT_EQ(a.terms().size(), 1u);
  EXPECT_EQ(a.to_string(), "+3 x1 >= 4");
  EXPECT_EQ(LinearInequality::contradiction().to_string(), "0 >= 1");
  EXPECT_EQ(ineq({{0, 1}}, 2), ineq({{0, 1}}, 2));
  EXPECT_NE(ineq({{0, 2}}, 2), ineq({{0, 1}}, 1));
}

TEST(InequalityTest, IntegerNegation) {
  EXPECT_EQ(integer_negation(ineq({{0, 1}, {1, 1}}, 2)), ineq({{0, -1}, {1, -1}}, -1));
  EXPECT_EQ(integer_negation(ineq({{0, 1}}, 0)), ineq({{0, -1}}, 1));
  auto l = ineq({{0, 2}, {1, -3}}, 5);
  EXPECT_EQ(integer_negation(integer_negation(l)), l);
}

TEST(InequalityTest, Evaluate) {
  auto l = ineq({{0, 1}, {1, 1}}, 2);
  EXPECT_TRUE(evaluate(l, Assignment({1, 1})));
  EXPECT_FALSE(evaluate(l, Assignment({1, 0})));
  EXPECT_TRUE(evaluate(integer_negation(l), Assignment({1, 0})));
  EXPECT_FALSE(evaluate(LinearInequality::contradiction(), Assignment({0, 1})));
  EXPECT_THROW(evaluate(l, Assignment(std::vector<std::uint8_t>{1})), DimensionError);
  EXPECT_THROW(Assignment(std::vector<std::uint8_t>{2}), DomainError);
}

TEST(InequalityTest, NegationDichotomyAndSlab) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 12;
    auto l = testing::random_inequality(rng, n, 4);
    auto neg = integer_negation(l);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 1 + (mask % 7)) {
      auto a = Assignment::from_mask(n, mask);
      EXPECT_NE(evaluate(l, a), evaluate(neg, a));
      BigInt lhs = l.lhs_at(a.values());
      EXPECT_FALSE(lhs > l.bound() - 1 && lhs < l.bound());
    }
  }
}

TEST(InequalityTest, ClauseTranslation) {
  std::vector<Literal> c1{{VarId{0}, true}, {VarId{1}, false}};
  EXPECT_EQ(clause_to_inequality(c1), ineq({{0, 1}, {1, -1}}, 0));
  std::vector<Literal> c2{{VarId{0}, false}};
  EXPECT_EQ(clause_to_inequality(c2), ineq({{0, -1}}, 0));
  std::vector<Literal> c3{{VarId{0}, true}, {VarId{1}, true}, {VarId{2}, true}};
  EXPECT_EQ(clause_to_inequality(c3), ineq({{0, 1}, {1, 1}, {2, 1}}, 1));
  std::vector<Literal> dup{{VarId{0}, true}, {VarId{0}, false}};
  EXPECT_THROW(clause_to_inequality(dup), EncodingError);
}

TEST(InequalityTest, Division) {
  auto d = ineq({{0, 2}, {1, 2}}, 3).divided(BigInt(2));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, ineq({{0, 1}, {1, 1}}, 2));
  EXPECT_FALSE(ineq({{0, 2}, {1, 3}}, 3).divided(BigInt(2)).has_value());
}

TEST(SystemTest, BoxAxiomIndices) {
  InequalitySystem sys(2, {ineq({{0, 1}}, 1)});
  EXPECT_EQ(sys.axiom_count(), 5u);
  EXPECT_EQ(sys.box_lower(VarId{1}), 3u);
  EXPECT_EQ(sys.axiom(3), ineq({{1, 1}}, 0));
  EXPECT_EQ(sys.axiom(4), ineq({{1, -1}}, -1));
  EXPECT_TRUE(sys.is_box_axiom(1));
  EXPECT_FALSE(sys.is_box_axiom(0));
  EXPECT_THROW(InequalitySystem(1, {ineq({{3, 1}}, 1)}), DimensionError);
}

TEST(FarkasTest, VerifyExamples) {
  std::vector<LinearInequality> ctx1{ineq({{0, 1}}, 1), ineq({{0, -1}}, 0)};
  AxiomContext c1(ctx1);
  EXPECT_TRUE(verify_certificate(
      c1, FarkasCertificate({{AxiomRef::axiom(0), 1}, {AxiomRef::axiom(1), 1}})));
  EXPECT_FALSE(verify_certificate(c1, FarkasCertificate::single(AxiomRef::axiom(0))));
  EXPECT_THROW(verify_certificate(c1, FarkasCertificate::single(AxiomRef::axiom(5))),
               ReferenceError);

  std::vector<LinearInequality> ctx2{ineq({{0, 2}, {1, 2}}, 3), ineq({{0, -1}, {1, -1}}, -1)};
  AxiomContext c2(ctx2);
  // 1/2 (2x + 2y) - (x + y) = 0 >= 3/2 - 1 = 1/2.
  EXPECT_FALSE(verify_certificate(
      c2, FarkasCertificate({{AxiomRef::axiom(0), Rational(1, 2)}, {AxiomRef::axiom(1), 1}})));
  EXPECT_TRUE(verify_certificate(
      c2, FarkasCertificate({{AxiomRef::axiom(0), 1}, {AxiomRef::axiom(1), 2}})));
  EXPECT_FALSE(verify_certificate(
      c2, FarkasCertificate({{AxiomRef::axiom(0), -1}, {AxiomRef::axiom(1), 2}})));
}

TEST(FarkasTest, FindExamples) {
  std::vector<LinearInequality> ctx1{ineq({{0, 1}}, 1), ineq({{0, -1}}, 0)};
  auto r1 = find_certificate(AxiomContext(ctx1));
  ASSERT_TRUE(std::holds_alternative<FarkasCertificate>(r1));
  EXPECT_EQ(std::get<FarkasCertificate>(r1),
            FarkasCertificate({{AxiomRef::axiom(0), 1}, {AxiomRef::axiom(1), 1}}));

  // Certificate (1, 1, 1) on {x + y >= 2, -x >= 0, -y >= 0}: by FM, eliminating x
  // pairs rows 0 and 1, then eliminating y pairs the result with row 2.
  std::vector<LinearInequality> ctx2{ineq({{0, 1}, {1, 1}}, 2), ineq({{0, -1}}, 0),
                                     ineq({{1, -1}}, 0)};
  ASSERT_TRUE(testing::fm_empty(ctx2, 2));
  auto r2 = find_certificate(AxiomContext(ctx2));
  ASSERT_TRUE(std::holds_alternative<FarkasCertificate>(r2));
  auto cert2 = std::get<FarkasCertificate>(r2);
  ASSERT_EQ(cert2.size(), 3u);
  EXPECT_EQ(cert2.terms()[0].coeff, cert2.terms()[1].coeff);
  EXPECT_EQ(cert2.terms()[1].coeff, cert2.terms()[2].coeff);

  InequalitySystem box(2, {});
  auto r3 = find_certificate(AxiomContext(box.axioms()));
  ASSERT_TRUE(std::holds_alternative<Witness>(r3));
  EXPECT_EQ(std::get<Witness>(r3).point, (std::vector<Rational>{0, 0}));

  std::vector<LinearInequality> ctx4{LinearInequality::contradiction()};
  auto r4 = find_certificate(AxiomContext(ctx4));
  ASSERT_TRUE(std::holds_alternative<FarkasCertificate>(r4));
  EXPECT_EQ(std::get<FarkasCertificate>(r4), FarkasCertificate::single(AxiomRef::axiom(0)));
}

TEST(FarkasTest, PathReferences) {
  std::vector<LinearInequality> axioms{ineq({{0, 1}}, 1)};
  LinearInequality edge = ineq({{0, -1}}, 0);
  std::vector<const LinearInequality*> path{&edge};
  AxiomContext ctx(axioms, path);
  auto r = find_certificate(ctx);
  ASSERT_TRUE(std::holds_alternative<FarkasCertificate>(r));
  EXPECT_EQ(std::get<FarkasCertificate>(r).to_string(), "a0:1 p0:1");
}

TEST(FarkasTest, AgreesWithFourierMotzkin) {
  std::mt19937_64 rng(2024);
  int empties = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 6;
    std::size_t m = 1 + (trial * 7) % 10;
    std::vector<LinearInequality> ctx;
    for (std::size_t i = 0; i < m; ++i) ctx.push_back(testing::random_inequality(rng, n, 3));
    bool empty = testing::fm_empty(ctx, n);
    auto r = find_certificate(AxiomContext(ctx), n);
    ASSERT_EQ(std::holds_alternative<FarkasCertificate>(r), empty) << "trial " << trial;
    if (empty) {
      ++empties;
      EXPECT_TRUE(verify_certificate(AxiomContext(ctx), std::get<FarkasCertificate>(r)));
    } else {
      const auto& w = std::get<Witness>(r).point;
      for (const auto& l : ctx) {
        Rational s = 0;
        for (const auto& t : l.terms()) s += w[t.var.index] * t.coeff;
        EXPECT_GE(s, Rational(l.bound()));
      }
    }
  }
  EXPECT_GT(empties, 20);
}

TEST(FarkasTest, RescalingInvariance) {
  std::vector<LinearInequality> ctx{ineq({{0, 2}, {1, 2}}, 3), ineq({{0, -1}, {1, -1}}, -1)};
  FarkasCertificate c({{AxiomRef::axiom(0), 1}, {AxiomRef::axiom(1), 2}});
  for (int k = 1; k < 6; ++k) {
    EXPECT_TRUE(verify_certificate(AxiomContext(ctx), c.scaled(Rational(k + 3, k))));
  }
}

TEST(FarkasTest, ReduceSupport) {
  std::vector<LinearInequality> dup{ineq({{0, 1}}, 1), ineq({{0, -1}}, 0), ineq({{0, 1}}, 1)};
  FarkasCertificate c3({{AxiomRef::axiom(0), 1}, {AxiomRef::axiom(1), 2},
                        {AxiomRef::axiom(2), 1}});
  auto r = reduce_support(AxiomContext(dup), c3);
  EXPECT_LE(r.size(), 2u);
  EXPECT_TRUE(verify_certificate(AxiomContext(dup), r));

  FarkasCertificate minimal({{AxiomRef::axiom(0), 1}, {AxiomRef::axiom(1), 1}});
  EXPECT_EQ(reduce_support(AxiomContext(dup), minimal), minimal);

  EXPECT_THROW(reduce_support(AxiomContext(dup), FarkasCertificate::single(AxiomRef::axiom(0))),
               InvalidCertificateError);

  // Four redundant inequalities in two variables.
  std::vector<LinearInequality> four{ineq({{0, 1}, {1, 1}}, 2), ineq({{0, -1}}, 0),
                                     ineq({{1, -1}}, 0), ineq({{0, -1}, {1, -1}}, -1)};
  FarkasCertificate c4({{AxiomRef::axiom(0), 2}, {AxiomRef::axiom(1), 1},
                        {AxiomRef::axiom(2), 1}, {AxiomRef::axiom(3), 1}});
  ASSERT_TRUE(verify_certificate(AxiomContext(four), c4));
  auto r4 = reduce_support(AxiomContext(four), c4);
  EXPECT_LE(r4.size(), 3u);
  EXPECT_TRUE(verify_certificate(AxiomContext(four), r4));
  // Oracle: the support of r4 alone is already empty by FM.
  std::vector<LinearInequality> sub;
  for (const auto& t : r4.terms()) sub.push_back(four[t.ref.index]);
  EXPECT_TRUE(testing::fm_empty(sub, 2));
}

TEST(FarkasTest, ReduceSupportRandom) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    std::vector<LinearInequality> ctx;
    for (std::size_t i = 0; i < 9; ++i) ctx.push_back(testing::random_inequality(rng, n, 3));
    auto r = find_certificate(AxiomContext(ctx), n);
    if (!std::holds_alternative<FarkasCertificate>(r)) continue;
    // Pad with a redundant multiple of every row pair to enlarge the support.
    auto cert = std::get<FarkasCertificate>(r);
    auto red = reduce_support(AxiomContext(ctx), cert);
    EXPECT_LE(red.size(), n + 1);
    EXPECT_TRUE(verify_certificate(AxiomContext(ctx), red));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace stabkit
