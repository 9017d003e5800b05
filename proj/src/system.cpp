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


#include "stabkit/system.hpp"

#include <algorithm>

#include "stabkit/errors.hpp"

namespace stabkit {

InequalitySystem::InequalitySystem(std::size_t nvars,
                                   std::vector<LinearInequality> inequalities,
                                   bool include_box)
    : nvars_(nvars), include_box_(include_box), explicit_count_(inequalities.size()) {
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    if (inequalities[i].var_span() > nvars) {
      throw DimensionError("inequality " + std::to_string(i) + " mentions x" +
                           std::to_string(inequalities[i].var_span()) + " but the system has " +
                           std::to_string(nvars) + " variables");
    }
  }
  axioms_ = std::move(inequalities);
  if (include_box_) {
    axioms_.reserve(explicit_count_ + 2 * nvars);
    for (std::uint32_t v = 0; v < nvars; ++v) {
      axioms_.push_back(LinearInequality::unit(VarId{v}, 1, 0));
      axioms_.push_back(LinearInequality::unit(VarId{v}, -1, -1));
    }
  }
}

std::uint32_t InequalitySystem::box_lower(VarId var) const {
  if (!include_box_ || var.index >= nvars_) throw ReferenceError("no box axiom for variable");
  return static_cast<std::uint32_t>(explicit_count_ + 2 * var.index);
}

std::uint32_t InequalitySystem::box_upper(VarId var) const {
  return box_lower(var) + 1;
}

std::string AxiomRef::to_string() const {
  return (is_axiom() ? "a" : "p") + std::to_string(index);
}

const LinearInequality* AxiomContext::resolve(AxiomRef ref) const {
  if (ref.is_axiom()) return ref.index < axioms_.size() ? &axioms_[ref.index] : nullptr;
  return ref.index < path_.size() ? path_[ref.index] : nullptr;
}

std::vector<AxiomRef> AxiomContext::refs() const {
  std::vector<AxiomRef> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < axioms_.size(); ++i) out.push_back(AxiomRef::axiom(i));
  for (std::uint32_t i = 0; i < path_.size(); ++i) out.push_back(AxiomRef::path(i));
  return out;
}

std::size_t AxiomContext::var_span() const {
  std::size_t span = 0;
  for (const auto& a : axioms_) span = std::max(span, a.var_span());
  for (const auto* p : path_) span = std::max(span, p->var_span());
  return span;
}

}  // namespace stabkit
