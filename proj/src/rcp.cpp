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


#include "stabkit/rcp.hpp"

#include <algorithm>
#include <optional>

#include "stabkit/errors.hpp"

namespace stabkit {

RcpClause::RcpClause(std::vector<LinearInequality> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool RcpClause::contains(const LinearInequality& ineq) const {
  return std::binary_search(members_.begin(), members_.end(), ineq);
}

RcpClause RcpClause::with(const LinearInequality& ineq) const {
  RcpClause out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), ineq);
  if (it == out.members_.end() || *it != ineq) out.members_.insert(it, ineq);
  return out;
}

RcpClause RcpClause::without(const LinearInequality& ineq) const {
  RcpClause out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), ineq);
  if (it != out.members_.end() && *it == ineq) out.members_.erase(it);
  return out;
}

std::string RcpClause::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += " | ";
    out += members_[i].to_string();
  }
  return out + "]";
}

namespace {

bool subset_of(const RcpClause& a, const RcpClause& b) {
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(),
                       a.members().end());
}

RcpClause set_union(const RcpClause& a, const RcpClause& b) {
  std::vector<LinearInequality> out = a.members();
  out.insert(out.end(), b.members().begin(), b.members().end());
  return RcpClause(std::move(out));
}

// True when some context G satisfies pj = G + {a}, pk = G + {b}, r = G + {c}
// (pk and b optional). The smallest candidate G decides.
bool context_matches(const RcpClause& pj, const LinearInequality& a, const RcpClause* pk,
                     const LinearInequality* b, const RcpClause& r, const LinearInequality& c) {
  if (!pj.contains(a) || !r.contains(c)) return false;
  RcpClause gamma = set_union(pj.without(a), r.without(c));
  if (pk != nullptr) {
    if (!pk->contains(*b)) return false;
    gamma = set_union(gamma, pk->without(*b));
    if (!subset_of(gamma, *pk)) return false;
  }
  return subset_of(gamma, pj) && subset_of(gamma, r);
}

struct LinCombMatch {
  LinearInequality a;
  LinearInequality b;
  LinearInequality c;
};

std::optional<LinCombMatch> match_lincomb(const RcpClause& pj, const RcpClause& pk,
                                          const RcpClause& r, const CpLinComb& lc) {
  if (lc.alpha <= 0 || lc.beta <= 0) return std::nullopt;
  for (const auto& a : pj.members()) {
    for (const auto& b : pk.members()) {
      LinearInequality c = LinearInequality::combine(lc.alpha, a, lc.beta, b);
      if (context_matches(pj, a, &pk, &b, r, c)) return LinCombMatch{a, b, c};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<LinearInequality, LinearInequality>> match_division(
    const RcpClause& pj, const RcpClause& r, const BigInt& alpha) {
  if (alpha <= 0) return std::nullopt;
  for (const auto& a : pj.members()) {
    auto c = a.divided(alpha);
    if (c && context_matches(pj, a, nullptr, nullptr, r, *c)) return std::make_pair(a, *c);
  }
  return std::nullopt;
}

std::optional<LinearInequality> match_cut(const RcpClause& pj, const RcpClause& pk,
                                          const RcpClause& r) {
  for (const auto& l : pj.members()) {
    if (r.with(l) == pj && r.with(integer_negation(l)) == pk) return l;
  }
  return std::nullopt;
}

std::optional<LinearInequality> match_elimination(const RcpClause& pj, const RcpClause& r) {
  for (const auto& z : pj.members()) {
    if (z.is_contradiction() && r.with(z) == pj) return z;
  }
  return std::nullopt;
}

std::vector<std::size_t> rule_premises(const RcpRule& rule) {
  if (const auto* w = std::get_if<RcpWeakening>(&rule)) return {w->j};
  if (const auto* lc = std::get_if<CpLinComb>(&rule)) return {lc->j, lc->k};
  if (const auto* dv = std::get_if<CpDivision>(&rule)) return {dv->j};
  if (const auto* c = std::get_if<RcpCut>(&rule)) return {c->j, c->k};
  if (const auto* e = std::get_if<RcpElimination>(&rule)) return {e->j};
  return {};
}

std::string check_rcp_line(const RcpProof& proof, std::size_t i) {
  const RcpLine& line = proof.lines[i];
  for (std::size_t j : rule_premises(line.rule)) {
    if (j >= i) return "premise " + std::to_string(j) + " is not an earlier line";
  }
  auto clause = [&](std::size_t j) -> const RcpClause& { return proof.lines[j].clause; };
  const RcpClause& r = line.clause;
  return std::visit(
      [&](const auto& rule) -> std::string {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, RcpInput>) {
          if (rule.index >= proof.system.axiom_count()) return "input index out of range";
          if (r != RcpClause({proof.system.axiom(rule.index)})) {
            return "clause does not match axiom " + std::to_string(rule.index);
          }
          return {};
        } else if constexpr (std::is_same_v<T, RcpAxiomIntro>) {
          if (r.size() != 2 || integer_negation(r.members()[0]) != r.members()[1]) {
            return "axiom introduction needs exactly {L, not L}";
          }
          return {};
        } else if constexpr (std::is_same_v<T, RcpWeakening>) {
          if (clause(rule.j).with(rule.added) != r) return "weakening does not add the member";
          return {};
        } else if constexpr (std::is_same_v<T, CpLinComb>) {
          if (!match_lincomb(clause(rule.j), clause(rule.k), r, rule)) {
            return "no distinguished members realise the linear combination";
          }
          return {};
        } else if constexpr (std::is_same_v<T, CpDivision>) {
          if (!match_division(clause(rule.j), r, rule.alpha)) {
            return "no distinguished member realises the division";
          }
          return {};
        } else if constexpr (std::is_same_v<T, RcpCut>) {
          if (!match_cut(clause(rule.j), clause(rule.k), r)) {
            return "premises do not differ by L and its negation over the conclusion";
          }
          return {};
        } else {
          if (!match_elimination(clause(rule.j), r)) {
            return "premise is not the conclusion plus a 0 >= b contradiction";
          }
          return {};
        }
      },
      line.rule);
}

}  // namespace

LineReport verify_rcp(const RcpProof& proof) {
  LineReport report;
  if (proof.lines.empty()) {
    report.ok = false;
    report.failing_line = 0;
    report.message = "proof has no lines";
    return report;
  }
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    std::string error = check_rcp_line(proof, i);
    if (!error.empty()) {
      report.ok = false;
      report.failing_line = i;
      report.message = std::move(error);
      return report;
    }
  }
  return report;
}

RcpShape rcp_shape(const RcpProof& proof) {
  LineReport r = verify_rcp(proof);
  if (!r.ok) throw InvalidProofError("line " + std::to_string(*r.failing_line) + ": " + r.message);
  const std::size_t n = proof.lines.size();
  std::vector<std::size_t> depth(n, 0), uses(n, 0);
  RcpShape shape;
  shape.length = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : rule_premises(proof.lines[i].rule)) {
      depth[i] = std::max(depth[i], depth[j] + 1);
      ++uses[j];
    }
    shape.width = std::max(shape.width, proof.lines[i].clause.size());
  }
  shape.depth = depth[n - 1];
  shape.is_tree = uses[n - 1] == 0;
  for (std::size_t i = 0; i + 1 < n; ++i) shape.is_tree = shape.is_tree && uses[i] <= 1;
  return shape;
}

namespace {

class SpToRcp {
 public:
  explicit SpToRcp(const SpProof& proof) : proof_(proof) { out_.system = proof.system; }

  RcpProof run() {
    std::vector<LinearInequality> path;
    derive(*proof_.root, path);
    return std::move(out_);
  }

 private:
  std::size_t push(RcpClause clause, RcpRule rule) {
    out_.lines.push_back({std::move(clause), std::move(rule)});
    return out_.lines.size() - 1;
  }

  // Weakens line `j` until its clause contains every member of `target`.
  std::size_t weaken_to(std::size_t j, const RcpClause& target) {
    for (const auto& m : target.members()) {
      if (out_.lines[j].clause.contains(m)) continue;
      RcpClause next = out_.lines[j].clause.with(m);
      j = push(std::move(next), RcpWeakening{j, m});
    }
    return j;
  }

  // Returns the line deriving {not E : E on path}.
  std::size_t derive(const SpNode& node, std::vector<LinearInequality>& path) {
    if (node.is_leaf()) return derive_leaf(node.leaf().cert, path);
    const SpQuery& q = node.query();
    path.push_back(q.negated);
    std::size_t left = derive(*q.left, path);
    path.back() = q.affirmative;
    std::size_t right = derive(*q.right, path);
    path.pop_back();
    return push(negated_path(path), RcpCut{left, right});
  }

  static RcpClause negated_path(const std::vector<LinearInequality>& path) {
    std::vector<LinearInequality> members;
    members.reserve(path.size());
    for (const auto& e : path) members.push_back(integer_negation(e));
    return RcpClause(std::move(members));
  }

  std::size_t derive_leaf(const FarkasCertificate& raw, const std::vector<LinearInequality>& path) {
    std::vector<const LinearInequality*> ptrs;
    for (const auto& e : path) ptrs.push_back(&e);
    AxiomContext ctx(proof_.system.axioms(), ptrs);
    FarkasCertificate cert = reduce_support(ctx, raw);
    const RcpClause n = negated_path(path);

    BigInt lcm = 1;
    for (const auto& t : cert.terms()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    std::vector<std::pair<std::size_t, BigInt>> parts;  // (line, multiplier)
    for (const auto& t : cert.terms()) {
      const LinearInequality& s = *ctx.resolve(t.ref);
      std::size_t line;
      if (t.ref.is_path()) {
        line = push(RcpClause({s, integer_negation(s)}), RcpAxiomIntro{});
      } else {
        line = push(RcpClause({s}), RcpInput{t.ref.index});
      }
      line = weaken_to(line, n.with(s));
      BigInt m = lcm / t.coeff.get_den() * t.coeff.get_num();
      parts.emplace_back(line, std::move(m));
    }

    std::size_t acc;
    LinearInequality sum;
    if (parts.size() == 1) {
      acc = parts[0].first;
      sum = *ctx.resolve(cert.terms()[0].ref);
    } else {
      sum = LinearInequality::combine(parts[0].second, *ctx.resolve(cert.terms()[0].ref),
                                      parts[1].second, *ctx.resolve(cert.terms()[1].ref));
      acc = push(n.with(sum), CpLinComb{parts[0].first, parts[1].first, parts[0].second,
                                        parts[1].second});
      for (std::size_t i = 2; i < parts.size(); ++i) {
        sum = LinearInequality::combine(1, sum, parts[i].second, *ctx.resolve(cert.terms()[i].ref));
        acc = push(n.with(sum), CpLinComb{acc, parts[i].first, 1, parts[i].second});
      }
    }
    if (!sum.is_contradiction()) throw InvalidProofError("leaf certificate does not sum to 0 >= b");
    if (sum.bound() > 1) {
      BigInt b = sum.bound();
      sum = *sum.divided(b);
      acc = push(n.with(sum), CpDivision{acc, b});
    }
    if (n.contains(sum)) return acc;
    return push(n, RcpElimination{acc});
  }

  const SpProof& proof_;
  RcpProof out_;
};

}  // namespace

RcpProof sp_to_rcp(const SpProof& proof) {
  VerifyReport report = verify_sp(proof);
  if (!report.ok) throw InvalidProofError("input SP proof rejected: " + report.message);
  return SpToRcp(proof).run();
}

namespace {

struct NegRef {
  enum class Kind { kPath, kAxiom, kTrivial };
  Kind kind = Kind::kTrivial;
  std::uint32_t index = 0;
  LinearInequality ineq;  // the negation of the member
};

using NegMap = std::vector<std::pair<LinearInequality, NegRef>>;

const NegRef& lookup(const NegMap& map, const LinearInequality& member) {
  for (const auto& [m, ref] : map) {
    if (m == member) return ref;
  }
  throw InvalidProofError("member " + member.to_string() + " has no available negation");
}

NegMap with_entry(const NegMap& map, const LinearInequality& member, NegRef ref) {
  NegMap out;
  out.reserve(map.size() + 1);
  for (const auto& e : map) {
    if (e.first != member) out.push_back(e);
  }
  out.emplace_back(member, std::move(ref));
  return out;
}

NegRef path_ref(std::uint32_t depth, const LinearInequality& edge) {
  return {NegRef::Kind::kPath, depth, edge};
}

NegRef negation_of(const LinearInequality& member) {
  LinearInequality neg = integer_negation(member);
  if (neg.is_tautology()) return {NegRef::Kind::kTrivial, 0, neg};
  return {NegRef::Kind::kPath, 0, neg};
}

class RcpToSp {
 public:
  explicit RcpToSp(const RcpProof& proof) : proof_(proof) {}

  SpNodePtr build(std::size_t i, const NegMap& map, std::uint32_t depth) {
    const RcpLine& line = proof_.lines[i];
    const RcpClause& r = line.clause;
    auto clause = [&](std::size_t j) -> const RcpClause& { return proof_.lines[j].clause; };
    return std::visit(
        [&](const auto& rule) -> SpNodePtr {
          using T = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<T, RcpInput>) {
            const LinearInequality& a = proof_.system.axiom(rule.index);
            return leaf({{AxiomRef::axiom(rule.index), &a, 1}}, {&lookup(map, a)});
          } else if constexpr (std::is_same_v<T, RcpAxiomIntro>) {
            return leaf({}, {&lookup(map, r.members()[0]), &lookup(map, r.members()[1])});
          } else if constexpr (std::is_same_v<T, RcpWeakening>) {
            return build(rule.j, map, depth);
          } else if constexpr (std::is_same_v<T, RcpElimination>) {
            LinearInequality z = *match_elimination(clause(rule.j), r);
            return build(rule.j, with_entry(map, z, negation_of(z)), depth);
          } else if constexpr (std::is_same_v<T, RcpCut>) {
            LinearInequality l = *match_cut(clause(rule.j), clause(rule.k), r);
            LinearInequality nl = integer_negation(l);
            SpNodePtr left = build(rule.j, with_entry(map, l, path_ref(depth, nl)), depth + 1);
            SpNodePtr right = build(rule.k, with_entry(map, nl, path_ref(depth, l)), depth + 1);
            return make_query(l, nl, std::move(left), std::move(right));
          } else if constexpr (std::is_same_v<T, CpDivision>) {
            auto [a, c] = *match_division(clause(rule.j), r, rule.alpha);
            LinearInequality na = integer_negation(a);
            SpNodePtr left = build(rule.j, with_entry(map, a, path_ref(depth, na)), depth + 1);
            SpNodePtr right = leaf({{AxiomRef::path(depth), &a, Rational(1) / rule.alpha}},
                                   {&lookup(map, c)});
            return make_query(a, na, std::move(left), std::move(right));
          } else {
            LinCombMatch m = *match_lincomb(clause(rule.j), clause(rule.k), r, rule);
            LinearInequality na = integer_negation(m.a);
            LinearInequality nb = integer_negation(m.b);
            SpNodePtr left = build(rule.j, with_entry(map, m.a, path_ref(depth, na)), depth + 1);
            SpNodePtr inner_left =
                build(rule.k, with_entry(map, m.b, path_ref(depth + 1, nb)), depth + 2);
            SpNodePtr inner_right = leaf({{AxiomRef::path(depth), &m.a, Rational(rule.alpha)},
                                          {AxiomRef::path(depth + 1), &m.b, Rational(rule.beta)}},
                                         {&lookup(map, m.c)});
            SpNodePtr right = make_query(m.b, nb, std::move(inner_left), std::move(inner_right));
            return make_query(m.a, na, std::move(left), std::move(right));
          }
        },
        line.rule);
  }

 private:
  struct Part {
    AxiomRef ref;
    const LinearInequality* ineq;
    Rational coeff;
  };

  // Leaf combining the given parts with each negation at coefficient 1,
  // rescaled so the bound reaches 1. Trivial negations are dropped.
  static SpNodePtr leaf(std::vector<Part> parts, std::vector<const NegRef*> negs) {
    for (const NegRef* n : negs) {
      if (n->kind == NegRef::Kind::kTrivial) continue;
      AxiomRef ref = n->kind == NegRef::Kind::kPath ? AxiomRef::path(n->index)
                                                    : AxiomRef::axiom(n->index);
      parts.push_back({ref, &n->ineq, 1});
    }
    Rational bound = 0;
    std::vector<CertificateTerm> terms;
    for (const auto& p : parts) {
      bound += p.coeff * p.ineq->bound();
      terms.push_back({p.ref, p.coeff});
    }
    FarkasCertificate cert(std::move(terms));
    if (bound > 0 && bound < 1) cert = cert.scaled(1 / bound);
    return make_leaf(std::move(cert));
  }

  const RcpProof& proof_;
};

}  // namespace

SpProof rcp_to_sp(const RcpProof& proof) {
  RcpShape shape = rcp_shape(proof);
  if (!shape.is_tree) throw ShapeError("rcp_to_sp requires a tree-like R(CP) proof");
  NegMap map;
  for (const auto& m : proof.lines.back().clause.members()) {
    NegRef ref = negation_of(m);
    if (ref.kind != NegRef::Kind::kTrivial) {
      bool found = false;
      for (std::uint32_t i = 0; i < proof.system.axiom_count(); ++i) {
        if (proof.system.axiom(i) == ref.ineq) {
          ref.kind = NegRef::Kind::kAxiom;
          ref.index = i;
          found = true;
          break;
        }
      }
      if (!found) {
        throw InvalidProofError("target member " + m.to_string() +
                                " is not the negation of a system axiom");
      }
    }
    map.emplace_back(m, std::move(ref));
  }
  RcpToSp builder(proof);
  return SpProof{proof.system, builder.build(proof.lines.size() - 1, map, 0)};
}

}  // namespace stabkit
