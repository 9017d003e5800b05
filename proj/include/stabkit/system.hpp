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

#ifndef STABKIT_SYSTEM_HPP_
#define STABKIT_SYSTEM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stabkit/inequality.hpp"

namespace stabkit {

// A variable universe plus an ordered list of inequalities. When the box is
// enabled the axioms x_i >= 0 and -x_i >= -1 are appended after the explicit
// list: x_i >= 0 at index m + 2i and -x_i >= -1 at m + 2i + 1.
class InequalitySystem {
 public:
  InequalitySystem() = default;
  InequalitySystem(std::size_t nvars, std::vector<LinearInequality> inequalities,
                   bool include_box = true);

  std::size_t nvars() const { return nvars_; }
  bool include_box() const { return include_box_; }

  // Explicit inequalities only.
  std::span<const LinearInequality> inequalities() const {
    return std::span(axioms_).first(explicit_count_);
  }
  std::size_t explicit_count() const { return explicit_count_; }

  // Explicit inequalities followed by the box axioms.
  std::span<const LinearInequality> axioms() const { return axioms_; }
  std::size_t axiom_count() const { return axioms_.size(); }
  const LinearInequality& axiom(std::size_t index) const { return axioms_.at(index); }

  bool is_box_axiom(std::size_t index) const {
    return include_box_ && index >= explicit_count_ && index < axioms_.size();
  }
  std::uint32_t box_lower(VarId var) const;
  std::uint32_t box_upper(VarId var) const;

  friend bool operator==(const InequalitySystem& a, const InequalitySystem& b) {
    return a.nvars_ == b.nvars_ && a.include_box_ == b.include_box_ &&
           a.axioms_ == b.axioms_;
  }

 private:
  std::size_t nvars_ = 0;
  bool include_box_ = true;
  std::size_t explicit_count_ = 0;
  std::vector<LinearInequality> axioms_;
};

// Addresses an inequality inside a proof context: an axiom of the system (box
// axioms included) or the edge at the given depth of the current root-to-leaf
// path.
struct AxiomRef {
  enum class Origin : std::uint8_t { kAxiom = 0, kPath = 1 };

  Origin origin = Origin::kAxiom;
  std::uint32_t index = 0;

  static AxiomRef axiom(std::uint32_t i) { return {Origin::kAxiom, i}; }
  static AxiomRef path(std::uint32_t depth) { return {Origin::kPath, depth}; }

  bool is_axiom() const { return origin == Origin::kAxiom; }
  bool is_path() const { return origin == Origin::kPath; }

  // "a<i>" or "p<depth>".
  std::string to_string() const;

  friend auto operator<=>(AxiomRef, AxiomRef) = default;
};

// Resolves AxiomRefs against a list of axioms and a path of edge labels.
// The context does not own the inequalities it points at.
class AxiomContext {
 public:
  AxiomContext() = default;
  explicit AxiomContext(std::span<const LinearInequality> axioms,
                        std::span<const LinearInequality* const> path = {})
      : axioms_(axioms), path_(path) {}

  // nullptr when the reference does not resolve.
  const LinearInequality* resolve(AxiomRef ref) const;

  std::span<const LinearInequality> axioms() const { return axioms_; }
  std::span<const LinearInequality* const> path() const { return path_; }
  std::size_t size() const { return axioms_.size() + path_.size(); }

  // Every addressable reference, axioms first.
  std::vector<AxiomRef> refs() const;

  // One past the largest variable index mentioned by any inequality.
  std::size_t var_span() const;

 private:
  std::span<const LinearInequality> axioms_;
  std::span<const LinearInequality* const> path_;
};

}  // namespace stabkit

#endif  // STABKIT_SYSTEM_HPP_
