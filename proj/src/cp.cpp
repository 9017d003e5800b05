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


#include "stabkit/cp.hpp"

#include <algorithm>
#include <set>

#include "stabkit/errors.hpp"

namespace stabkit {

std::string check_cp_step_impl(const InequalitySystem& system, const CpLine& line,
                               const LinearInequality* p1, const LinearInequality* p2) {
  if (const auto* ax = std::get_if<CpAxiom>(&line.just)) {
    if (ax->index >= system.axiom_count()) {
      return "axiom index " + std::to_string(ax->index) + " out of range";
    }
    if (system.axiom(ax->index) != line.ineq) {
      return "line does not match axiom " + std::to_string(ax->index) + " (" +
             system.axiom(ax->index).to_string() + ")";
    }
    return {};
  }
  if (const auto* lc = std::get_if<CpLinComb>(&line.just)) {
    if (lc->alpha <= 0 || lc->beta <= 0) return "linear combination multipliers must be positive";
    LinearInequality expected = LinearInequality::combine(lc->alpha, *p1, lc->beta, *p2);
    if (expected != line.ineq) return "linear combination yields " + expected.to_string();
    return {};
  }
  const auto& dv = std::get<CpDivision>(line.just);
  if (dv.alpha <= 0) return "division factor must be positive";
  auto expected = p1->divided(dv.alpha);
  if (!expected) return "premise coefficients are not divisible by " + dv.alpha.get_str();
  if (*expected != line.ineq) return "division yields " + expected->to_string();
  return {};
}

LineReport verify_cp(const CpProof& proof) {
  LineReport report;
  auto fail = [&](std::size_t i, std::string msg) {
    report.ok = false;
    report.failing_line = i;
    report.message = std::move(msg);
    return report;
  };
  if (proof.lines.empty()) return fail(0, "proof has no lines");
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    auto lookup = [&](std::size_t j) -> const LinearInequality* {
      return j < i ? &proof.lines[j].ineq : nullptr;
    };
    std::string error = check_cp_step(proof.system, proof.lines[i], lookup);
    if (!error.empty()) return fail(i, error);
  }
  if (!proof.lines.back().ineq.is_contradiction()) {
    return fail(proof.lines.size() - 1, "last line is not 0 >= 1");
  }
  return report;
}

namespace {

std::vector<std::size_t> premises(const CpJustification& just) {
  if (const auto* lc = std::get_if<CpLinComb>(&just)) return {lc->j, lc->k};
  if (const auto* dv = std::get_if<CpDivision>(&just)) return {dv->j};
  return {};
}

}  // namespace

CpShape cp_shape(const CpProof& proof) {
  LineReport r = verify_cp(proof);
  if (!r.ok) throw InvalidProofError("line " + std::to_string(*r.failing_line) + ": " + r.message);
  const std::size_t n = proof.lines.size();
  std::vector<std::size_t> depth(n, 0);
  std::vector<std::size_t> uses(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : premises(proof.lines[i].just)) {
      depth[i] = std::max(depth[i], depth[j] + 1);
      ++uses[j];
    }
  }
  CpShape shape;
  shape.length = n;
  shape.rank = depth[n - 1];
  shape.is_tree = uses[n - 1] == 0;
  for (std::size_t i = 0; i + 1 < n; ++i) shape.is_tree = shape.is_tree && uses[i] == 1;
  return shape;
}

CpConfigReport verify_cp_config(const CpConfigProof& proof) {
  CpConfigReport out;
  out.length = proof.steps.size();
  auto fail = [&](std::size_t i, std::string msg) {
    out.report.ok = false;
    out.report.failing_line = i;
    out.report.message = std::move(msg);
    return out;
  };
  std::set<std::size_t> config;
  bool erasing_only = false;
  bool refuted = false;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const CpConfigStep& step = proof.steps[i];
    if (step.line) {
      if (erasing_only) return fail(i, "derivation after an erase-only step");
      auto lookup = [&](std::size_t j) -> const LinearInequality* {
        return config.count(j) ? &proof.steps[j].line->ineq : nullptr;
      };
      std::string error = check_cp_step(proof.system, *step.line, lookup);
      if (!error.empty()) return fail(i, error);
      config.insert(i);
      refuted = refuted || step.line->ineq.is_contradiction();
    } else {
      if (step.erase.empty()) return fail(i, "empty step");
      erasing_only = true;
    }
    for (std::size_t e : step.erase) {
      if (config.erase(e) == 0) {
        return fail(i, "line " + std::to_string(e) + " is not in the configuration");
      }
    }
    out.space = std::max(out.space, config.size());
  }
  if (!refuted) return fail(proof.steps.size(), "no configuration contains 0 >= 1");
  return out;
}

CpConfigProof replay_as_config(const CpProof& proof, bool erase_dead) {
  CpConfigProof out{proof.system, {}};
  const std::size_t n = proof.lines.size();
  std::vector<std::size_t> last_use(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : premises(proof.lines[i].just)) last_use[j] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    CpConfigStep step{proof.lines[i], {}};
    if (erase_dead) {
      std::vector<std::size_t> ps = premises(proof.lines[i].just);
      std::sort(ps.begin(), ps.end());
      ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
      for (std::size_t j : ps) {
        if (last_use[j] == i) step.erase.push_back(j);
      }
      if (last_use[i] == SIZE_MAX && i + 1 < n) step.erase.push_back(i);
    }
    out.steps.push_back(std::move(step));
  }
  return out;
}

std::vector<std::vector<std::size_t>> cp_configurations(const CpConfigProof& proof) {
  std::vector<std::vector<std::size_t>> out;
  std::set<std::size_t> config;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    if (proof.steps[i].line) config.insert(i);
    for (std::size_t e : proof.steps[i].erase) config.erase(e);
    out.emplace_back(config.begin(), config.end());
  }
  return out;
}

}  // namespace stabkit
