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

#ifndef STABKIT_INEQUALITY_HPP_
#define STABKIT_INEQUALITY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/number.hpp"

namespace stabkit {

struct VarId {
  std::uint32_t index = 0;

  friend auto operator<=>(VarId, VarId) = default;
};

struct Term {
  VarId var;
  BigInt coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.var == b.var && a.coeff == b.coeff;
  }
};

// A 0/1 point. Entries are validated on construction.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t nvars) : values_(nvars, 0) {}
  explicit Assignment(std::vector<std::uint8_t> values);

  static Assignment from_mask(std::size_t nvars, std::uint64_t mask);

  std::size_t size() const { return values_.size(); }
  std::uint8_t operator[](std::size_t i) const { return values_[i]; }
  void set(std::size_t i, bool value) { values_[i] = value ? 1 : 0; }
  std::span<const std::uint8_t> values() const { return values_; }

  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

// An integer linear inequality sum_i coeff_i * x_i >= bound. Terms are kept
// sorted by variable with no zero coefficients, so two inequalities are equal
// iff their stored forms are equal.
class LinearInequality {
 public:
  // The tautology 0 >= 0.
  LinearInequality() = default;
  LinearInequality(std::vector<Term> terms, BigInt bound);

  static LinearInequality contradiction() { return {{}, BigInt(1)}; }
  static LinearInequality unit(VarId var, long coeff, long bound);

  const std::vector<Term>& terms() const { return terms_; }
  const BigInt& bound() const { return bound_; }
  BigInt coeff(VarId var) const;

  bool has_zero_lhs() const { return terms_.empty(); }
  // 0 >= b with b >= 1.
  bool is_contradiction() const { return terms_.empty() && bound_ >= 1; }
  // 0 >= b with b <= 0.
  bool is_tautology() const { return terms_.empty() && bound_ <= 0; }

  // One past the largest variable index used, or 0.
  std::size_t var_span() const {
    return terms_.empty() ? 0 : terms_.back().var.index + 1;
  }

  // Value of the left-hand side at an integral point.
  BigInt lhs_at(std::span<const std::uint8_t> point) const;

  // Multiplies every coefficient and the bound by a positive integer.
  LinearInequality scaled(const BigInt& factor) const;

  // (alpha * a) + (beta * b) term-wise, including the bounds.
  static LinearInequality combine(const BigInt& alpha, const LinearInequality& a,
                                  const BigInt& beta, const LinearInequality& b);

  // Division with rounding: requires factor > 0 dividing every coefficient.
  // Returns (A/factor) x >= ceil(bound/factor).
  std::optional<LinearInequality> divided(const BigInt& factor) const;

  std::string to_string() const;

  friend bool operator==(const LinearInequality& a, const LinearInequality& b) {
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }
  // Total order used for canonical sets of inequalities.
  friend std::strong_ordering operator<=>(const LinearInequality& a,
                                          const LinearInequality& b);

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
  BigInt bound_ = 0;
};

// A x >= b  |->  (-A) x >= 1 - b, i.e. A x <= b - 1.
LinearInequality integer_negation(const LinearInequality& ineq);

// Throws DimensionError if the assignment does not cover every variable.
bool evaluate(const LinearInequality& ineq, const Assignment& assignment);

struct Literal {
  VarId var;
  bool positive = true;

  friend bool operator==(Literal, Literal) = default;
};

// (x_1 v ... v x_k v ~y_1 v ... v ~y_l)  |->  sum x - sum y >= 1 - l.
// Throws EncodingError when a variable occurs twice.
LinearInequality clause_to_inequality(std::span<const Literal> literals);

}  // namespace stabkit

#endif  // STABKIT_INEQUALITY_HPP_
