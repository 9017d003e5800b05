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


// Independent oracles used by the test suites. They share no code with the
// library beyond the data types.

#ifndef STABKIT_TESTS_ORACLES_HPP_
#define STABKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "stabkit/inequality.hpp"
#include "stabkit/number.hpp"

namespace stabkit::testing {

// Rational polytope emptiness by Fourier-Motzkin elimination.
inline bool fm_empty(const std::vector<LinearInequality>& ineqs, std::size_t nvars) {
  struct Row {
    std::vector<Rational> a;
    Rational b;
    std::uint64_t history = 0;  // originating rows
  };
  std::vector<Row> rows;
  for (const auto& ineq : ineqs) {
    Row row{std::vector<Rational>(nvars, 0), Rational(ineq.bound()),
            std::uint64_t{1} << rows.size()};
    for (const auto& t : ineq.terms()) row.a[t.var.index] = Rational(t.coeff);
    rows.push_back(std::move(row));
  }
  std::vector<bool> done(nvars, false);
  for (std::size_t step = 0; step < nvars; ++step) {
    // Eliminate the variable producing the fewest new rows.
    std::size_t v = nvars;
    std::size_t best = 0;
    for (std::size_t j = 0; j < nvars; ++j) {
      if (done[j]) continue;
      std::size_t np = 0, nn = 0;
      for (const auto& r : rows) {
        np += r.a[j] > 0;
        nn += r.a[j] < 0;
      }
      if (v == nvars || np * nn < best) {
        v = j;
        best = np * nn;
      }
    }
    done[v] = true;
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[v] > 0) pos.push_back(r);
      else if (r.a[v] < 0) neg.push_back(r);
      else next.push_back(r);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Rational fp = -n.a[v];
        Rational fn = p.a[v];
        // Chernikov's rule: after k eliminations a non-redundant row combines at
        // most k + 1 original rows.
        std::uint64_t history = p.history | n.history;
        if (std::popcount(history) > static_cast<int>(step) + 2) continue;
        Row r{std::vector<Rational>(nvars), fp * p.b + fn * n.b, history};
        for (std::size_t j = 0; j < nvars; ++j) r.a[j] = fp * p.a[j] + fn * n.a[j];
        r.a[v] = 0;
        Rational scale = 0;
        for (const auto& x : r.a) {
          if (abs(x) > scale) scale = abs(x);
        }
        if (scale != 0) {
          for (auto& x : r.a) x /= scale;
          r.b /= scale;
        }
        next.push_back(std::move(r));
      }
    }
    // Drop exact duplicates, keeping the shortest history.
    std::sort(next.begin(), next.end(), [](const Row& x, const Row& y) {
      if (x.a != y.a) return x.a < y.a;
      if (x.b != y.b) return x.b > y.b;
      return std::popcount(x.history) < std::popcount(y.history);
    });
    rows.clear();
    for (auto& r : next) {
      if (!rows.empty() && rows.back().a == r.a && rows.back().b == r.b) continue;
      bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; });
      if (zero) {
        if (r.b > 0) return true;
        continue;
      }
      rows.push_back(std::move(r));
    }
  }
  for (const auto& r : rows) {
    bool zero = true;
    for (const auto& x : r.a) zero = zero && x == 0;
    if (zero && r.b > 0) return true;
  }
  return false;
}

// Exhaustive 0/1 satisfiability.
inline bool brute_unsat(const std::vector<LinearInequality>& ineqs, std::size_t nvars) {
  std::vector<std::uint8_t> point(nvars);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
    for (std::size_t i = 0; i < nvars; ++i) point[i] = (mask >> i) & 1U;
    bool ok = true;
    for (const auto& ineq : ineqs) {
      BigInt s = 0;
      for (const auto& t : ineq.terms()) {
        if (point[t.var.index]) s += t.coeff;
      }
      if (s < ineq.bound()) {
        ok = false;
        break;
      }
    }
    if (ok) return false;
  }
  return true;
}

inline LinearInequality random_inequality(std::mt19937_64& rng, std::size_t nvars, int range) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Term> terms;
  for (std::uint32_t v = 0; v < nvars; ++v) {
    int c = coeff(rng);
    if (c != 0) terms.push_back({VarId{v}, BigInt(c)});
  }
  return LinearInequality(std::move(terms), BigInt(coeff(rng)));
}

}  // namespace stabkit::testing

#endif  // STABKIT_TESTS_ORACLES_HPP_
