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


#include "stabkit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include "stabkit/errors.hpp"

namespace stabkit {

namespace {

void require_verified(const CpProof& proof) {
  LineReport r = verify_cp(proof);
  if (!r.ok) {
    throw InvalidProofError("input CP proof rejected at line " + std::to_string(*r.failing_line) +
                            ": " + r.message);
  }
}

void require_tree(const CpProof& proof) {
  if (!cp_shape(proof).is_tree) throw ShapeError("input CP proof is not tree-like");
}

FarkasCertificate cert_of(std::vector<CertificateTerm> terms) {
  return FarkasCertificate(std::move(terms));
}

// Right leaf of a division query: L_j + c * not(L_v), which reads
// 0 >= b + c - c * ceil(b / c) >= 1.
FarkasCertificate division_leaf(AxiomRef premise, const BigInt& c,
                                const std::optional<AxiomRef>& neg_v) {
  if (!neg_v) return FarkasCertificate::single(premise);
  return cert_of({{premise, 1}, {*neg_v, Rational(c)}});
}

// Depth simulation of the subtree rooted at v. Lines in `known` are available
// as references and are not expanded.
class DepthSimulator {
 public:
  DepthSimulator(const CpProof& proof, const std::map<std::size_t, AxiomRef>& known)
      : proof_(proof), known_(known) {}

  SpNodePtr run(std::size_t v, std::optional<AxiomRef> neg_v, std::uint32_t depth) const {
    const CpLine& line = proof_.lines[v];
    if (auto it = known_.find(v); it != known_.end()) {
      return make_leaf(cert_of({{it->second, 1}, {*neg_v, 1}}));
    }
    if (const auto* ax = std::get_if<CpAxiom>(&line.just)) {
      std::vector<CertificateTerm> terms{{AxiomRef::axiom(ax->index), 1}};
      if (neg_v) terms.push_back({*neg_v, 1});
      return make_leaf(cert_of(std::move(terms)));
    }
    if (const auto* lc = std::get_if<CpLinComb>(&line.just)) {
      const LinearInequality& lj = proof_.lines[lc->j].ineq;
      const LinearInequality& lk = proof_.lines[lc->k].ineq;
      SpNodePtr left = run(lc->j, AxiomRef::path(depth), depth + 1);
      SpNodePtr inner_left = run(lc->k, AxiomRef::path(depth + 1), depth + 2);
      std::vector<CertificateTerm> terms{{AxiomRef::path(depth), Rational(lc->alpha)},
                                         {AxiomRef::path(depth + 1), Rational(lc->beta)}};
      if (neg_v) terms.push_back({*neg_v, 1});
      SpNodePtr right = make_query(lk, std::move(inner_left), make_leaf(cert_of(std::move(terms))));
      return make_query(lj, std::move(left), std::move(right));
    }
    const auto& dv = std::get<CpDivision>(line.just);
    SpNodePtr left = run(dv.j, AxiomRef::path(depth), depth + 1);
    SpNodePtr right = make_leaf(division_leaf(AxiomRef::path(depth), dv.alpha, neg_v));
    return make_query(proof_.lines[dv.j].ineq, std::move(left), std::move(right));
  }

 private:
  const CpProof& proof_;
  const std::map<std::size_t, AxiomRef>& known_;
};

std::vector<std::size_t> premises_of(const CpJustification& just) {
  if (const auto* lc = std::get_if<CpLinComb>(&just)) return {lc->j, lc->k};
  if (const auto* dv = std::get_if<CpDivision>(&just)) return {dv->j};
  return {};
}

}  // namespace

SpProof cp_tree_to_sp_depth(const CpProof& proof) {
  require_tree(proof);
  std::map<std::size_t, AxiomRef> none;
  DepthSimulator sim(proof, none);
  return SpProof{proof.system, sim.run(proof.lines.size() - 1, std::nullopt, 0)};
}

SpProof cp_to_sp_size(const CpProof& proof) {
  require_verified(proof);
  const std::size_t m = proof.lines.size();
  // Built bottom-up: the node at depth i queries L_i.
  SpNodePtr node = make_leaf(FarkasCertificate::single(AxiomRef::path(static_cast<std::uint32_t>(m - 1))));
  for (std::size_t idx = m; idx-- > 0;) {
    const auto i = static_cast<std::uint32_t>(idx);
    const CpLine& line = proof.lines[i];
    FarkasCertificate cert;
    if (const auto* ax = std::get_if<CpAxiom>(&line.just)) {
      cert = cert_of({{AxiomRef::axiom(ax->index), 1}, {AxiomRef::path(i), 1}});
    } else if (const auto* lc = std::get_if<CpLinComb>(&line.just)) {
      cert = cert_of({{AxiomRef::path(static_cast<std::uint32_t>(lc->j)), Rational(lc->alpha)},
                      {AxiomRef::path(static_cast<std::uint32_t>(lc->k)), Rational(lc->beta)},
                      {AxiomRef::path(i), 1}});
    } else {
      // (1/c) L_j + not(L_i) reads 0 >= b/c + 1 - ceil(b/c), which lies in (0, 1].
      const auto& dv = std::get<CpDivision>(line.just);
      const BigInt& b = proof.lines[dv.j].ineq.bound();
      Rational slack = Rational(b, dv.alpha) + 1 - Rational(ceil_div(b, dv.alpha));
      slack.canonicalize();
      cert = cert_of({{AxiomRef::path(static_cast<std::uint32_t>(dv.j)), 1 / (Rational(dv.alpha) * slack)},
                      {AxiomRef::path(i), 1 / slack}});
    }
    node = make_query(line.ineq, make_leaf(std::move(cert)), std::move(node));
  }
  return SpProof{proof.system, std::move(node)};
}

namespace {

class Balancer {
 public:
  static constexpr std::size_t kBaseSize = 3;

  explicit Balancer(const CpProof& proof) : proof_(proof) {}

  SpNodePtr run(std::size_t root, const std::map<std::size_t, AxiomRef>& known,
                std::optional<AxiomRef> neg_root, std::uint32_t depth) const {
    // Collect T in preorder with subtree sizes and depths.
    std::vector<std::size_t> nodes;
    std::map<std::size_t, std::size_t> level;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto [v, lv] = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      level[v] = lv;
      if (known.count(v)) continue;
      for (std::size_t p : premises_of(proof_.lines[v].just)) stack.emplace_back(p, lv + 1);
    }
    const std::size_t total = nodes.size();
    if (total <= kBaseSize) return DepthSimulator(proof_, known).run(root, neg_root, depth);

    std::map<std::size_t, std::size_t> size;
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
      std::size_t s = 1;
      if (!known.count(*it)) {
        for (std::size_t p : premises_of(proof_.lines[*it].just)) s += size[p];
      }
      size[*it] = s;
    }
    auto better = [&](std::size_t a, std::size_t b) {
      if (level[a] != level[b]) return level[a] > level[b];
      return a < b;
    };
    std::optional<std::size_t> pick;
    for (std::size_t v : nodes) {
      if (v == root || known.count(v)) continue;
      if (3 * size[v] >= total && 3 * size[v] <= 2 * total && (!pick || better(v, *pick))) pick = v;
    }
    if (!pick) {
      auto gap = [&](std::size_t v) {
        long d = 2 * static_cast<long>(size[v]) - static_cast<long>(total);
        return d < 0 ? -d : d;
      };
      for (std::size_t v : nodes) {
        if (v == root || known.count(v) || size[v] < 2) continue;
        if (!pick || gap(v) < gap(*pick) || (gap(v) == gap(*pick) && better(v, *pick))) pick = v;
      }
    }
    const std::size_t v = *pick;
    SpNodePtr left = run(v, known, AxiomRef::path(depth), depth + 1);
    std::map<std::size_t, AxiomRef> known_right = known;
    known_right[v] = AxiomRef::path(depth);
    SpNodePtr right = run(root, known_right, neg_root, depth + 1);
    return make_query(proof_.lines[v].ineq, std::move(left), std::move(right));
  }

 private:
  const CpProof& proof_;
};

}  // namespace

SpProof cp_tree_to_sp_balanced(const CpProof& proof) {
  require_tree(proof);
  Balancer balancer(proof);
  return SpProof{proof.system, balancer.run(proof.lines.size() - 1, {}, std::nullopt, 0)};
}

namespace {

using RefMap = std::map<std::size_t, AxiomRef>;
using Continuation = std::function<SpNodePtr(const RefMap&, std::uint32_t)>;

class SpaceSimulator {
 public:
  explicit SpaceSimulator(const CpConfigProof& proof)
      : proof_(proof), configs_(cp_configurations(proof)) {}

  std::size_t contradiction_step() const {
    for (std::size_t i = 0; i < configs_.size(); ++i) {
      for (std::size_t id : configs_[i]) {
        if (proof_.steps[id].line->ineq.is_contradiction()) return i + 1;
      }
    }
    throw InvalidProofError("no configuration contains 0 >= 1");
  }

  const std::vector<std::size_t>& config(std::size_t count) const {
    static const std::vector<std::size_t> kEmpty;
    return count == 0 ? kEmpty : configs_[count - 1];
  }

  // Tree whose only open leaf knows every line of D(b), given D(a) on the path.
  SpNodePtr build(std::size_t a, std::size_t b, const RefMap& refs, std::uint32_t depth,
                  const Continuation& k) const {
    if (b == a + 1) return step(a, refs, depth, k);
    const std::size_t mid = a + (b - a + 1) / 2;
    RefMap known;
    std::vector<std::size_t> unknown;
    for (std::size_t id : config(mid)) {
      const CpLine& line = *proof_.steps[id].line;
      if (const auto* ax = std::get_if<CpAxiom>(&line.just)) {
        known[id] = AxiomRef::axiom(ax->index);
      } else if (auto it = refs.find(id); it != refs.end()) {
        known[id] = it->second;
      } else {
        unknown.push_back(id);
      }
    }
    return query_chain(a, mid, b, refs, known, unknown, 0, depth, k);
  }

 private:
  SpNodePtr query_chain(std::size_t a, std::size_t mid, std::size_t b, const RefMap& refs_a,
                        RefMap known, const std::vector<std::size_t>& unknown, std::size_t t,
                        std::uint32_t depth, const Continuation& k) const {
    if (t == unknown.size()) return build(mid, b, known, depth, k);
    const std::size_t id = unknown[t];
    const AxiomRef here = AxiomRef::path(depth);
    Continuation close = [id, here](const RefMap& refs_mid, std::uint32_t) {
      return make_leaf(FarkasCertificate({{refs_mid.at(id), 1}, {here, 1}}));
    };
    SpNodePtr left = build(a, mid, refs_a, depth + 1, close);
    known[id] = here;
    SpNodePtr right = query_chain(a, mid, b, refs_a, std::move(known), unknown, t + 1, depth + 1, k);
    return make_query(proof_.steps[id].line->ineq, std::move(left), std::move(right));
  }

  SpNodePtr step(std::size_t a, const RefMap& refs, std::uint32_t depth,
                 const Continuation& k) const {
    const CpConfigStep& s = proof_.steps[a];
    RefMap next = refs;
    if (!s.line) {
      for (std::size_t e : s.erase) next.erase(e);
      return k(next, depth);
    }
    const CpLine& line = *s.line;
    if (const auto* ax = std::get_if<CpAxiom>(&line.just)) {
      next[a] = AxiomRef::axiom(ax->index);
      for (std::size_t e : s.erase) next.erase(e);
      return k(next, depth);
    }
    const AxiomRef here = AxiomRef::path(depth);
    FarkasCertificate cert;
    if (const auto* lc = std::get_if<CpLinComb>(&line.just)) {
      cert = FarkasCertificate({{refs.at(lc->j), Rational(lc->alpha)},
                                {refs.at(lc->k), Rational(lc->beta)},
                                {here, 1}});
    } else {
      const auto& dv = std::get<CpDivision>(line.just);
      cert = division_leaf(refs.at(dv.j), dv.alpha, here);
    }
    next[a] = here;
    for (std::size_t e : s.erase) next.erase(e);
    return make_query(line.ineq, make_leaf(std::move(cert)), k(next, depth + 1));
  }

  const CpConfigProof& proof_;
  std::vector<std::vector<std::size_t>> configs_;
};

}  // namespace

SpProof cp_space_to_sp(const CpConfigProof& proof) {
  CpConfigReport r = verify_cp_config(proof);
  if (!r.report.ok) {
    throw InvalidProofError("input configuration proof rejected at step " +
                            std::to_string(*r.report.failing_line) + ": " + r.report.message);
  }
  SpaceSimulator sim(proof);
  const std::size_t end = sim.contradiction_step();
  std::size_t contradiction = 0;
  for (std::size_t id : sim.config(end)) {
    if (proof.steps[id].line->ineq.is_contradiction()) {
      contradiction = id;
      break;
    }
  }
  Continuation finish = [contradiction](const RefMap& refs, std::uint32_t) {
    return make_leaf(FarkasCertificate::single(refs.at(contradiction)));
  };
  return SpProof{proof.system, sim.build(0, end, {}, 0, finish)};
}

namespace {

double log2_at_least_one(std::size_t n) { return n <= 2 ? 1.0 : std::log2(static_cast<double>(n)); }

}  // namespace

TransformReport report_cp_tree_to_sp_depth(const CpProof& in, const SpProof& out) {
  TransformReport r;
  r.kind = "cp-to-sp-depth";
  CpShape shape = cp_shape(in);
  r.input_length = shape.length;
  r.input_rank = shape.rank;
  r.output = sp_stats(out);
  r.bound = "depth <= 2 * rank = " + std::to_string(2 * shape.rank);
  r.bound_holds = r.output.depth <= 2 * shape.rank;
  return r;
}

TransformReport report_cp_to_sp_size(const CpProof& in, const SpProof& out) {
  TransformReport r;
  r.kind = "cp-to-sp-size";
  CpShape shape = cp_shape(in);
  r.input_length = shape.length;
  r.input_rank = shape.rank;
  r.output = sp_stats(out);
  r.bound = "length == 2 * m + 1 = " + std::to_string(2 * shape.length + 1);
  r.bound_holds = r.output.length == 2 * shape.length + 1;
  return r;
}

TransformReport report_cp_tree_to_sp_balanced(const CpProof& in, const SpProof& out, double c) {
  TransformReport r;
  r.kind = "cp-to-sp-balanced";
  CpShape shape = cp_shape(in);
  r.input_length = shape.length;
  r.input_rank = shape.rank;
  r.output = sp_stats(out);
  double limit = c * log2_at_least_one(shape.length);
  r.bound = "depth <= " + std::to_string(c) + " * log2(length) = " + std::to_string(limit);
  r.bound_holds = static_cast<double>(r.output.depth) <= limit;
  return r;
}

TransformReport report_cp_space_to_sp(const CpConfigProof& in, const SpProof& out, double c) {
  TransformReport r;
  r.kind = "cp-space-to-sp";
  CpConfigReport cr = verify_cp_config(in);
  r.input_length = cr.length;
  r.input_space = cr.space;
  r.output = sp_stats(out);
  double limit = c * static_cast<double>(cr.space) * log2_at_least_one(cr.length);
  r.bound = "depth <= " + std::to_string(c) + " * space * log2(length) = " + std::to_string(limit);
  r.bound_holds = static_cast<double>(r.output.depth) <= limit;
  return r;
}

}  // namespace stabkit
