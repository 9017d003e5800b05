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

#include "stabkit/inequality.hpp"

#include <algorithm>
#include <functional>

#include "stabkit/errors.hpp"

namespace stabkit {

Assignment::Assignment(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  for (auto v : values_) {
    if (v > 1) throw DomainError("assignment entries must be 0 or 1");
  }
}

Assignment Assignment::from_mask(std::size_t nvars, std::uint64_t mask) {
  Assignment a(nvars);
  for (std::size_t i = 0; i < nvars && i < 64; ++i) a.values_[i] = (mask >> i) & 1U;
  return a;
}

std::string Assignment::to_string() const {
  std::string out;
  out.reserve(values_.size());
  for (auto v : values_) out.push_back(v ? '1' : '0');
  return out;
}

LinearInequality::LinearInequality(std::vector<Term> terms, BigInt bound)
    : terms_(std::move(terms)), bound_(std::move(bound)) {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.var < b.var; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    BigInt sum = terms_[i].coeff;
    while (j < terms_.size() && terms_[j].var == terms_[i].var) sum += terms_[j++].coeff;
    if (sum != 0) {
      terms_[out].var = terms_[i].var;
      terms_[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

LinearInequality LinearInequality::unit(VarId var, long coeff, long bound) {
  return LinearInequality({{var, BigInt(coeff)}}, BigInt(bound));
}

BigInt LinearInequality::coeff(VarId var) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                             [](const Term& t, VarId v) { return t.var < v; });
  if (it != terms_.end() && it->var == var) return it->coeff;
  return 0;
}

BigInt LinearInequality::lhs_at(std::span<const std::uint8_t> point) const {
  BigInt sum = 0;
  for (const auto& t : terms_) {
    if (t.var.index >= point.size()) {
      throw DimensionError("assignment has " + std::to_string(point.size()) +
                           " entries but the inequality mentions x" +
                           std::to_string(t.var.index + 1));
    }
    if (point[t.var.index]) sum += t.coeff;
  }
  return sum;
}

LinearInequality LinearInequality::scaled(const BigInt& factor) const {
  LinearInequality out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  out.bound_ *= factor;
  if (factor == 0) out = LinearInequality();
  return out;
}

LinearInequality LinearInequality::combine(const BigInt& alpha, const LinearInequality& a,
                                           const BigInt& beta, const LinearInequality& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->var < ib->var)) {
      terms.push_back({ia->var, alpha * ia->coeff});
      ++ia;
    } else if (ia == a.terms_.end() || ib->var < ia->var) {
      terms.push_back({ib->var, beta * ib->coeff});
      ++ib;
    } else {
      BigInt c = alpha * ia->coeff + beta * ib->coeff;
      if (c != 0) terms.push_back({ia->var, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  LinearInequality out;
  out.terms_ = std::move(terms);
  out.bound_ = alpha * a.bound_ + beta * b.bound_;
  if (alpha == 0 || beta == 0) return LinearInequality(out.terms_, out.bound_);
  return out;
}

std::optional<LinearInequality> LinearInequality::divided(const BigInt& factor) const {
  if (factor <= 0) return std::nullopt;
  LinearInequality out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), factor.get_mpz_t())) return std::nullopt;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), factor.get_mpz_t());
    out.terms_.push_back({t.var, std::move(q)});
  }
  out.bound_ = ceil_div(bound_, factor);
  return out;
}

std::string LinearInequality::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (t.coeff > 0) out += '+';
    out += t.coeff.get_str();
    out += " x";
    out += std::to_string(t.var.index + 1);
    out += ' ';
  }
  if (terms_.empty()) out = "0 ";
  out += ">= ";
  out += bound_.get_str();
  return out;
}

std::strong_ordering operator<=>(const LinearInequality& a, const LinearInequality& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].var <=> b.terms_[i].var; c != 0) return c;
    int cmp = ::cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (cmp != 0) return cmp < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
  int cmp = ::cmp(a.bound_, b.bound_);
  if (cmp != 0) return cmp < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t LinearInequality::hash() const {
  std::size_t h = std::hash<long>{}(bound_.fits_slong_p() ? bound_.get_si() : 7919);
  for (const auto& t : terms_) {
    long c = t.coeff.fits_slong_p() ? t.coeff.get_si() : 104729;
    h ^= std::hash<std::uint64_t>{}((std::uint64_t{t.var.index} << 32) ^
                                    static_cast<std::uint64_t>(c)) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LinearInequality integer_negation(const LinearInequality& ineq) {
  std::vector<Term> terms;
  terms.reserve(ineq.terms().size());
  for (const auto& t : ineq.terms()) terms.push_back({t.var, -t.coeff});
  return LinearInequality(std::move(terms), 1 - ineq.bound());
}

bool evaluate(const LinearInequality& ineq, const Assignment& assignment) {
  return ineq.lhs_at(assignment.values()) >= ineq.bound();
}

LinearInequality clause_to_inequality(std::span<const Literal> literals) {
  std::vector<Term> terms;
  terms.reserve(literals.size());
  long negatives = 0;
  for (const auto& lit : literals) {
    for (const auto& t : terms) {
      if (t.var == lit.var) {
        throw EncodingError("variable x" + std::to_string(lit.var.index + 1) +
                            " occurs twice in a clause");
      }
    }
    terms.push_back({lit.var, BigInt(lit.positive ? 1 : -1)});
    if (!lit.positive) ++negatives;
  }
  return LinearInequality(std::move(terms), BigInt(1 - negatives));
}

}  // namespace stabkit
