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


#include "corpus.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "stabkit/solver.hpp"
#include "stabkit/transforms.hpp"
#include "stabkit/tseitin_refuter.hpp"

namespace stabkit::testing {
namespace {

LinearInequality ge(std::vector<std::pair<std::uint32_t, long>> terms, long bound) {
  std::vector<Term> t;
  for (auto [v, c] : terms) t.push_back({VarId{v}, BigInt(c)});
  return LinearInequality(std::move(t), BigInt(bound));
}

void require_valid(const CpProof& proof, const std::string& what) {
  LineReport r = verify_cp(proof);
  if (!r.ok) throw std::logic_error(what + " is not a valid CP proof: " + r.message);
}

// DPLL tree node; `clause` is falsified by the partial assignment leading here.
struct ResNode {
  int axiom = -1;
  std::uint32_t var = 0;
  std::map<std::uint32_t, bool> clause;
  std::unique_ptr<ResNode> zero, one;
};

class ResolutionBuilder {
 public:
  ResolutionBuilder(const Cnf& cnf, bool share, long scale)
      : cnf_(cnf), share_(share), scale_(scale), proof_{cnf_to_system(cnf), {}},
        rho_(cnf.nvars, -1) {}

  CpProof build() {
    auto root = search();
    if (!root) throw std::logic_error("formula is satisfiable");
    emit(*root);
    return std::move(proof_);
  }

 private:
  std::unique_ptr<ResNode> search() {
    for (std::size_t i = 0; i < cnf_.clauses.size(); ++i) {
      bool falsified = true;
      for (const auto& lit : cnf_.clauses[i]) {
        int v = rho_[lit.var.index];
        if (v < 0 || (v == 1) == lit.positive) {
          falsified = false;
          break;
        }
      }
      if (falsified) {
        auto node = std::make_unique<ResNode>();
        node->axiom = static_cast<int>(i);
        for (const auto& lit : cnf_.clauses[i]) node->clause[lit.var.index] = lit.positive;
        return node;
      }
    }
    auto it = std::find(rho_.begin(), rho_.end(), -1);
    if (it == rho_.end()) return nullptr;
    std::uint32_t x = static_cast<std::uint32_t>(it - rho_.begin());
    *it = 0;
    auto zero = search();
    rho_[x] = -1;
    if (!zero) return nullptr;
    if (!zero->clause.count(x)) return zero;
    rho_[x] = 1;
    auto one = search();
    rho_[x] = -1;
    if (!one) return nullptr;
    if (!one->clause.count(x)) return one;
    auto node = std::make_unique<ResNode>();
    node->var = x;
    node->clause = zero->clause;
    node->clause.erase(x);
    for (auto [v, pos] : one->clause) {
      if (v != x) node->clause[v] = pos;
    }
    node->zero = std::move(zero);
    node->one = std::move(one);
    return node;
  }

  std::size_t axiom_line(std::uint32_t index) {
    if (share_) {
      auto it = axiom_lines_.find(index);
      if (it != axiom_lines_.end()) return it->second;
    }
    proof_.lines.push_back({proof_.system.axiom(index), CpAxiom{index}});
    axiom_lines_[index] = proof_.lines.size() - 1;
    return proof_.lines.size() - 1;
  }

  std::size_t lincomb(std::size_t j, std::size_t k, long alpha, long beta) {
    LinearInequality ineq = LinearInequality::combine(BigInt(alpha), proof_.lines[j].ineq,
                                                      BigInt(beta), proof_.lines[k].ineq);
    proof_.lines.push_back({std::move(ineq), CpLinComb{j, k, BigInt(alpha), BigInt(beta)}});
    return proof_.lines.size() - 1;
  }

  std::size_t emit(const ResNode& node) {
    if (node.axiom >= 0) return axiom_line(static_cast<std::uint32_t>(node.axiom));
    std::size_t a = emit(*node.zero);
    std::size_t b = emit(*node.one);
    std::size_t cur = lincomb(a, b, scale_, scale_);
    // Literals on one side only get a box axiom so every coefficient doubles.
    const auto& za = node.zero->clause;
    const auto& ob = node.one->clause;
    for (const auto& [v, pos] : node.clause) {
      bool in_a = za.count(v) != 0;
      bool in_b = ob.count(v) != 0;
      if (in_a && in_b) continue;
      std::uint32_t box = pos ? proof_.system.box_lower(VarId{v}) : proof_.system.box_upper(VarId{v});
      cur = lincomb(cur, axiom_line(box), 1, scale_);
    }
    const LinearInequality& sum = proof_.lines[cur].ineq;
    if (sum.has_zero_lhs() && scale_ == 1) return cur;
    BigInt factor(2 * scale_);
    auto divided = sum.divided(factor);
    if (!divided) throw std::logic_error("resolution step is not divisible");
    proof_.lines.push_back({std::move(*divided), CpDivision{cur, factor}});
    return proof_.lines.size() - 1;
  }

  const Cnf& cnf_;
  bool share_;
  long scale_;
  CpProof proof_;
  std::vector<int> rho_;
  std::map<std::uint32_t, std::size_t> axiom_lines_;
};

}  // namespace

Cnf random_cnf(std::mt19937_64& rng, std::size_t nvars, std::size_t nclauses, std::size_t width) {
  Cnf cnf;
  cnf.nvars = nvars;
  std::vector<std::uint32_t> vars(nvars);
  std::iota(vars.begin(), vars.end(), 0U);
  for (std::size_t c = 0; c < nclauses; ++c) {
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause clause;
    for (std::size_t i = 0; i < std::min(width, nvars); ++i) {
      clause.push_back({VarId{vars[i]}, (rng() & 1U) != 0});
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

bool cnf_unsat(const Cnf& cnf) {
  InequalitySystem s = cnf_to_system(cnf, false);
  return brute_unsat({s.axioms().begin(), s.axioms().end()}, cnf.nvars);
}

Cnf pigeonhole(std::size_t pigeons, std::size_t holes) {
  Cnf cnf;
  cnf.nvars = pigeons * holes;
  auto var = [&](std::size_t p, std::size_t h) {
    return VarId{static_cast<std::uint32_t>(p * holes + h)};
  };
  for (std::size_t p = 0; p < pigeons; ++p) {
    Clause clause;
    for (std::size_t h = 0; h < holes; ++h) clause.push_back({var(p, h), true});
    cnf.clauses.push_back(std::move(clause));
  }
  for (std::size_t h = 0; h < holes; ++h) {
    for (std::size_t p = 0; p < pigeons; ++p) {
      for (std::size_t q = p + 1; q < pigeons; ++q) {
        cnf.clauses.push_back({{var(p, h), false}, {var(q, h), false}});
      }
    }
  }
  return cnf;
}

CpProof resolution_cp_proof(const Cnf& cnf, bool share_axioms, long scale) {
  CpProof proof = ResolutionBuilder(cnf, share_axioms, scale).build();
  require_valid(proof, "resolution proof");
  return proof;
}

CpProof spine_proof(std::size_t k) {
  std::vector<LinearInequality> axioms{ge({{0, 1}}, 1)};
  for (std::uint32_t i = 1; i < k; ++i) axioms.push_back(ge({{i - 1, -1}, {i, 1}}, 0));
  axioms.push_back(ge({{static_cast<std::uint32_t>(k - 1), -1}}, 0));
  CpProof proof{InequalitySystem(k, axioms), {}};
  proof.lines.push_back({axioms[0], CpAxiom{0}});
  for (std::uint32_t i = 1; i <= k; ++i) {
    proof.lines.push_back({axioms[i], CpAxiom{i}});
    std::size_t prev = proof.lines.size() - 2;
    proof.lines.push_back({LinearInequality::combine(1, proof.lines[prev].ineq, 1, axioms[i]),
                           CpLinComb{prev, prev + 1, 1, 1}});
  }
  require_valid(proof, "spine");
  return proof;
}

CpProof division_chain(std::size_t k, long divisor) {
  std::vector<LinearInequality> axioms{ge({{0, 1}}, 1)};
  for (std::uint32_t i = 1; i < k; ++i) {
    axioms.push_back(ge({{i - 1, -divisor}, {i, divisor}}, 1 - divisor));
  }
  axioms.push_back(ge({{static_cast<std::uint32_t>(k - 1), -divisor}}, 1 - divisor));
  CpProof proof{InequalitySystem(k, axioms), {}};
  proof.lines.push_back({axioms[0], CpAxiom{0}});
  for (std::uint32_t i = 1; i <= k; ++i) {
    std::size_t prev = proof.lines.size() - 1;
    proof.lines.push_back({axioms[i], CpAxiom{i}});
    LinearInequality sum = LinearInequality::combine(divisor, proof.lines[prev].ineq, 1, axioms[i]);
    proof.lines.push_back({sum, CpLinComb{prev, prev + 1, BigInt(divisor), 1}});
    proof.lines.push_back({*sum.divided(BigInt(divisor)),
                           CpDivision{proof.lines.size() - 1, BigInt(divisor)}});
  }
  require_valid(proof, "division chain");
  return proof;
}

std::vector<NamedCp> cp_corpus(std::uint64_t seed, std::size_t random_count) {
  std::vector<NamedCp> out;
  auto keep = [&](std::string name, CpProof proof) {
    if (proof.lines.size() >= 3 && proof.lines.size() <= 200) {
      out.push_back({std::move(name), std::move(proof)});
    }
  };
  for (std::size_t k : {1, 2, 3, 5, 8, 13, 20, 40, 99}) {
    keep("spine-" + std::to_string(k), spine_proof(k));
  }
  for (long d : {2, 3, 5}) {
    for (std::size_t k : {1, 2, 4, 10, 30, 66}) {
      keep("divchain-" + std::to_string(k) + "-" + std::to_string(d), division_chain(k, d));
    }
  }
  keep("php-3-2", resolution_cp_proof(pigeonhole(3, 2), false));
  keep("php-3-2-dag", resolution_cp_proof(pigeonhole(3, 2), true));
  keep("pebbling-2", resolution_cp_proof(pebbling_cnf(pyramid_dag(2)), false));
  keep("pebbling-3-dag", resolution_cp_proof(pebbling_cnf(pyramid_dag(3)), true, 2));
  keep("tseitin-K3", resolution_cp_proof(tseitin_cnf(complete_graph(3), {1, 0, 0}), false));
  keep("tseitin-C4", resolution_cp_proof(tseitin_cnf(cycle_graph(4), {0, 1, 0, 0}), true));

  std::mt19937_64 rng(seed);
  std::size_t made = 0;
  while (made < random_count) {
    std::size_t n = 3 + rng() % 4;
    std::size_t width = n == 3 ? 2 : 3;
    std::size_t m = n * (3 + rng() % 3);
    Cnf cnf = random_cnf(rng, n, m, width);
    if (!cnf_unsat(cnf)) continue;
    bool share = (made % 2) == 1;
    long scale = 1 + static_cast<long>(rng() % 3);
    CpProof proof = resolution_cp_proof(cnf, share, scale);
    if (proof.lines.size() < 3 || proof.lines.size() > 200) continue;
    out.push_back({"random-" + std::to_string(made) + (share ? "-dag" : "-tree"),
                   std::move(proof)});
    ++made;
  }
  return out;
}

std::vector<NamedSp> sp_corpus(std::uint64_t seed, std::size_t max_vars) {
  std::vector<NamedSp> out;
  for (const auto& [name, cp] : cp_corpus(seed, 60)) {
    if (cp.system.nvars() > max_vars) continue;
    out.push_back({name + "/size", cp_to_sp_size(cp)});
    if (cp_shape(cp).is_tree) {
      out.push_back({name + "/depth", cp_tree_to_sp_depth(cp)});
      out.push_back({name + "/balanced", cp_tree_to_sp_balanced(cp)});
    }
  }
  for (const char* spec : {"complete:3", "complete:4", "cycle:5", "grid:2x3", "grid:3x3"}) {
    Graph g = graph_from_spec(spec);
    for (std::uint64_t s = 1; s <= 3; ++s) {
      out.push_back({std::string("tseitin-") + spec + "-" + std::to_string(s),
                     refute_tseitin(g, odd_labeling(g.vertex_count(), s))});
    }
  }
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::size_t made = 0;
  while (made < 40) {
    std::size_t n = 3 + rng() % 6;
    Cnf cnf = random_cnf(rng, n, n * 5, 3);
    if (!cnf_unsat(cnf)) continue;
    InequalitySystem system = cnf_to_system(cnf);
    Heuristic h = made % 2 ? Heuristic::kHalve : Heuristic::kVariable;
    SolveResult r = sp_solve(system, h);
    if (!r.refuted()) throw std::logic_error("solver failed on an unsatisfiable formula");
    out.push_back({"solved-" + std::to_string(made), std::get<SpProof>(std::move(r.outcome))});
    ++made;
  }
  return out;
}

std::vector<NamedSystem> solver_corpus(std::uint64_t seed, std::size_t random_count) {
  std::vector<NamedSystem> out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    std::string name = "random-" + std::to_string(i);
    if (i % 3 == 2) {
      // Random integer systems with wider coefficients.
      std::size_t n = 2 + rng() % 7;
      std::size_t m = 2 + rng() % 9;
      std::vector<LinearInequality> rows;
      for (std::size_t r = 0; r < m; ++r) rows.push_back(random_inequality(rng, n, 4));
      out.push_back({name + "-ineq", InequalitySystem(n, rows)});
    } else {
      std::size_t n = 3 + rng() % 14;
      std::size_t width = 2 + rng() % 2;
      double ratio = width == 2 ? 1.0 : 4.3;
      std::size_t m = static_cast<std::size_t>(ratio * static_cast<double>(n) *
                                               (0.7 + 0.6 * static_cast<double>(rng() % 100) / 100));
      out.push_back({name + "-cnf", cnf_to_system(random_cnf(rng, n, std::max<std::size_t>(m, 1),
                                                             width))});
    }
  }
  for (const char* spec : {"complete:3", "complete:4", "complete:5", "cycle:6", "grid:2x3",
                           "grid:3x3", "grid:2x4"}) {
    Graph g = graph_from_spec(spec);
    for (std::uint64_t s = 1; s <= 4; ++s) {
      out.push_back({std::string("tseitin-") + spec + "-" + std::to_string(s),
                     tseitin_system(g, odd_labeling(g.vertex_count(), s))});
    }
  }
  for (std::size_t h = 1; h <= 4; ++h) {
    out.push_back({"pebbling-" + std::to_string(h), cnf_to_system(pebbling_cnf(pyramid_dag(h)))});
  }
  out.push_back({"php-3-2", cnf_to_system(pigeonhole(3, 2))});
  out.push_back({"php-4-3", cnf_to_system(pigeonhole(4, 3))});
  out.push_back({"php-3-3", cnf_to_system(pigeonhole(3, 3))});
  out.push_back({"php-5-3", cnf_to_system(pigeonhole(5, 3))});
  out.push_back({"empty", InequalitySystem(0, {})});
  out.push_back({"contradiction", InequalitySystem(1, {LinearInequality::contradiction()})});
  return out;
}

}  // namespace stabkit::testing
