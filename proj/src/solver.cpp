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


#include "stabkit/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stabkit/errors.hpp"

namespace stabkit {
namespace {

using Clock = std::chrono::steady_clock;

Rational fractionality(const Rational& w) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), w.get_num_mpz_t(), w.get_den_mpz_t());
  Rational up = w - Rational(fl);
  Rational down = Rational(1) - up;
  return up < down ? up : down;
}

struct SatFound {
  Assignment assignment;
};

struct LimitHit {
  std::string reason;
};

class Search {
 public:
  Search(const InequalitySystem& system, Heuristic heuristic, const SolveLimits& limits)
      : system_(system), heuristic_(heuristic), limits_(limits), rng_(limits.seed),
        start_(Clock::now()) {}

  SpNodePtr node(std::size_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (stats_.nodes > limits_.max_nodes) throw LimitHit{"node limit reached"};
    if (seconds() > limits_.time_budget_seconds) throw LimitHit{"time budget exhausted"};

    std::vector<const LinearInequality*> path;
    path.reserve(path_.size());
    for (const auto& p : path_) path.push_back(&p);
    AxiomContext ctx(system_.axioms(), path);
    ++stats_.lp_calls;
    FarkasResult lp = find_certificate(ctx, system_.nvars());
    if (auto* cert = std::get_if<FarkasCertificate>(&lp)) return make_leaf(std::move(*cert));

    const auto& point = std::get<Witness>(lp).point;
    std::vector<std::uint32_t> fractional;
    for (std::uint32_t i = 0; i < system_.nvars(); ++i) {
      if (!is_integral(point[i])) fractional.push_back(i);
    }
    if (fractional.empty()) {
      Assignment a(system_.nvars());
      for (std::size_t i = 0; i < system_.nvars(); ++i) a.set(i, point[i] == 1);
      throw SatFound{std::move(a)};
    }
    if (depth >= limits_.max_depth) throw LimitHit{"depth limit reached"};

    LinearInequality affirmative = heuristic_ == Heuristic::kVariable
                                       ? variable_query(point, fractional)
                                       : halve_query(point, fractional);
    LinearInequality negated = integer_negation(affirmative);
    path_.push_back(negated);
    SpNodePtr left = node(depth + 1);
    path_.back() = affirmative;
    SpNodePtr right = node(depth + 1);
    path_.pop_back();
    return make_query(std::move(affirmative), std::move(negated), std::move(left),
                      std::move(right));
  }

  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }
  SolveStats& stats() { return stats_; }

 private:
  LinearInequality variable_query(const std::vector<Rational>& point,
                                  const std::vector<std::uint32_t>& fractional) {
    std::vector<std::uint32_t> best;
    Rational best_frac = -1;
    for (auto i : fractional) {
      Rational f = fractionality(point[i]);
      if (f > best_frac) {
        best_frac = f;
        best.assign(1, i);
      } else if (f == best_frac) {
        best.push_back(i);
      }
    }
    std::uint32_t pick = best.front();
    if (limits_.seed != 0 && best.size() > 1) {
      pick = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng_)];
    }
    return LinearInequality::unit(VarId{pick}, 1, 1);
  }

  // Cuts the LP point off on both sides: its fractional mass lies strictly
  // between t - 1 and t.
  LinearInequality halve_query(const std::vector<Rational>& point,
                               std::vector<std::uint32_t> support) {
    Rational mass = 0;
    for (auto i : support) mass += point[i];
    while (is_integral(mass)) {
      mass -= point[support.back()];
      support.pop_back();
    }
    std::vector<Term> terms;
    for (auto i : support) terms.push_back({VarId{i}, BigInt(1)});
    BigInt t;
    mpz_cdiv_q(t.get_mpz_t(), mass.get_num_mpz_t(), mass.get_den_mpz_t());
    return LinearInequality(std::move(terms), std::move(t));
  }

  const InequalitySystem& system_;
  Heuristic heuristic_;
  SolveLimits limits_;
  std::mt19937_64 rng_;
  Clock::time_point start_;
  SolveStats stats_;
  std::vector<LinearInequality> path_;
};

bool satisfies_all(const InequalitySystem& system, const Assignment& a) {
  for (const auto& ineq : system.axioms()) {
    if (!evaluate(ineq, a)) return false;
  }
  return true;
}

// Incremental evaluation under single-bit flips.
template <typename Value>
class FlipEvaluator {
 public:
  FlipEvaluator(std::vector<std::vector<std::pair<std::size_t, Value>>> occurrences,
                std::vector<Value> bounds)
      : occ_(std::move(occurrences)), bound_(std::move(bounds)), lhs_(bound_.size(), Value(0)) {
    for (std::size_t r = 0; r < bound_.size(); ++r) violated_ += lhs_[r] < bound_[r];
  }

  void flip(std::size_t var, bool to_one) {
    for (const auto& [r, c] : occ_[var]) {
      bool before = lhs_[r] < bound_[r];
      if (to_one) lhs_[r] += c; else lhs_[r] -= c;
      bool after = lhs_[r] < bound_[r];
      violated_ += static_cast<long>(after) - static_cast<long>(before);
    }
  }
  bool satisfied() const { return violated_ == 0; }

 private:
  std::vector<std::vector<std::pair<std::size_t, Value>>> occ_;
  std::vector<Value> bound_;
  std::vector<Value> lhs_;
  long violated_ = 0;
};

template <typename Value, typename Convert>
BruteForceResult gray_enumerate(const InequalitySystem& system, Convert&& convert) {
  const std::size_t n = system.nvars();
  const auto rows = system.inequalities();
  std::vector<std::vector<std::pair<std::size_t, Value>>> occ(n);
  std::vector<Value> bounds;
  bounds.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& t : rows[r].terms()) occ[t.var.index].emplace_back(r, convert(t.coeff));
    bounds.push_back(convert(rows[r].bound()));
  }
  FlipEvaluator<Value> eval(std::move(occ), std::move(bounds));
  Assignment a(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1;; ++step) {
    if (eval.satisfied()) return {false, a};
    if (step == total) break;
    std::size_t bit = static_cast<std::size_t>(std::countr_zero(step));
    bool to_one = a[bit] == 0;
    a.set(bit, to_one);
    eval.flip(bit, to_one);
  }
  return {true, std::nullopt};
}

// Every partial sum of a row stays within sum |a_i| + |b|, so int64 is exact
// when that total fits.
bool fits_int64(const InequalitySystem& system) {
  constexpr long kMax = std::numeric_limits<long>::max();
  for (const auto& row : system.inequalities()) {
    long total = 0;
    auto add = [&](const BigInt& v) {
      if (!v.fits_slong_p()) return false;
      long a = v.get_si();
      if (a == std::numeric_limits<long>::min()) return false;
      return !__builtin_add_overflow(total, a < 0 ? -a : a, &total);
    };
    for (const auto& t : row.terms()) {
      if (!add(t.coeff)) return false;
    }
    if (!add(row.bound()) || total > kMax / 2) return false;
  }
  return true;
}

}  // namespace

std::optional<Heuristic> parse_heuristic(std::string_view name) {
  if (name == "variable") return Heuristic::kVariable;
  if (name == "halve") return Heuristic::kHalve;
  return std::nullopt;
}

SolveResult sp_solve(const InequalitySystem& system, Heuristic heuristic,
                     const SolveLimits& limits) {
  if (!system.include_box()) throw DomainError("sp_solve needs the box axioms");
  Search search(system, heuristic, limits);
  SolveResult result;
  try {
    SpProof proof{system, search.node(0)};
    VerifyReport report = verify_sp(proof);
    if (!report.ok) throw std::logic_error("solver produced an invalid proof: " + report.message);
    result.outcome = std::move(proof);
  } catch (SatFound& sat) {
    if (!satisfies_all(system, sat.assignment)) {
      throw std::logic_error("solver produced a non-satisfying assignment");
    }
    result.outcome = std::move(sat.assignment);
  } catch (LimitHit& hit) {
    search.stats().seconds = search.seconds();
    result.outcome = ResourceExceeded{hit.reason, search.stats()};
  }
  search.stats().seconds = search.seconds();
  result.stats = search.stats();
  return result;
}

BruteForceResult brute_force_unsat(const InequalitySystem& system, std::size_t cap) {
  if (system.nvars() > cap || system.nvars() >= 63) {
    throw ResourceError("brute force limited to " + std::to_string(cap) + " variables, got " +
                        std::to_string(system.nvars()));
  }
  if (fits_int64(system)) {
    return gray_enumerate<long>(system, [](const BigInt& v) { return v.get_si(); });
  }
  return gray_enumerate<BigInt>(system, [](const BigInt& v) { return v; });
}

}  // namespace stabkit
