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


#include "stabkit/tseitin_refuter.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "stabkit/errors.hpp"

namespace stabkit {
namespace {

// Integer combination of context inequalities; merged when it becomes a leaf.
using Deriv = std::vector<std::pair<AxiomRef, long>>;

void add_to(Deriv& out, const Deriv& d, long factor = 1) {
  for (const auto& [ref, c] : d) out.emplace_back(ref, c * factor);
}

LinearInequality sum_at_least(std::span<const std::uint32_t> edges, long value) {
  std::vector<Term> terms;
  terms.reserve(edges.size());
  for (auto e : edges) terms.push_back({VarId{e}, BigInt(1)});
  return LinearInequality(std::move(terms), BigInt(value));
}

class Refuter {
 public:
  Refuter(const Graph& graph, const VertexLabeling& labeling, SpSink& sink,
          const TseitinOptions& options, RefuterObserver* observer)
      : graph_(graph),
        labeling_(labeling),
        sink_(sink),
        options_(options),
        observer_(observer),
        offsets_(tseitin_clause_offsets(graph, labeling)),
        explicit_count_(offsets_.back()),
        track_path_(observer != nullptr || options.lp_certificates) {
    if (options_.lp_certificates) system_ = tseitin_system(graph, labeling);
  }

  void run() {
    std::vector<std::uint32_t> all(graph_.vertex_count());
    for (std::uint32_t v = 0; v < all.size(); ++v) all[v] = v;
    state(all, 0, {}, {}, 0);
  }

  // Shared with binary_pin: lower/upper are nullopt at the range endpoints.
  template <typename Leaf>
  void pin(std::span<const std::uint32_t> vars, long lo, long hi, std::optional<AxiomRef> lower,
           std::optional<AxiomRef> upper, std::uint32_t depth, Leaf& leaf) {
    if (lo == hi) {
      leaf(lo, lower, upper, depth);
      return;
    }
    long mid = (lo + hi + 1) / 2;
    branch(sum_at_least(vars, mid), [&] { pin(vars, lo, mid - 1, lower, AxiomRef::path(depth),
                                               depth + 1, leaf); },
           [&] { pin(vars, mid, hi, AxiomRef::path(depth), upper, depth + 1, leaf); });
  }

 private:
  AxiomRef lower_box(std::uint32_t e) const {
    return AxiomRef::axiom(static_cast<std::uint32_t>(explicit_count_ + 2 * e));
  }
  AxiomRef upper_box(std::uint32_t e) const {
    return AxiomRef::axiom(static_cast<std::uint32_t>(explicit_count_ + 2 * e + 1));
  }
  void add_lower_boxes(Deriv& d, std::span<const std::uint32_t> edges) const {
    for (auto e : edges) d.emplace_back(lower_box(e), 1);
  }
  void add_upper_boxes(Deriv& d, std::span<const std::uint32_t> edges) const {
    for (auto e : edges) d.emplace_back(upper_box(e), 1);
  }

  void count_node() {
    if (++nodes_ > options_.max_nodes) {
      throw ResourceError("refutation exceeds the node budget of " +
                          std::to_string(options_.max_nodes));
    }
  }

  template <typename Left, typename Right>
  void branch(const LinearInequality& affirmative, Left&& left, Right&& right) {
    count_node();
    LinearInequality negated = integer_negation(affirmative);
    sink_.on_query(affirmative, negated);
    if (track_path_) path_.push_back(std::move(negated));
    left();
    if (track_path_) path_.back() = affirmative;
    right();
    if (track_path_) path_.pop_back();
  }

  void close(const Deriv& d) {
    count_node();
    if (options_.lp_certificates) {
      std::vector<const LinearInequality*> ptrs;
      for (const auto& p : path_) ptrs.push_back(&p);
      FarkasResult r = find_certificate(AxiomContext(system_.axioms(), ptrs), system_.nvars());
      if (!std::holds_alternative<FarkasCertificate>(r)) {
        throw std::logic_error("refuter leaf polytope is not empty");
      }
      sink_.on_leaf(std::get<FarkasCertificate>(r));
      return;
    }
    std::vector<CertificateTerm> terms;
    terms.reserve(d.size());
    for (const auto& [ref, c] : d) terms.push_back({ref, Rational(c)});
    sink_.on_leaf(FarkasCertificate(std::move(terms)));
  }

  unsigned parity(std::span<const std::uint32_t> u) const {
    unsigned p = 0;
    for (auto v : u) p ^= labeling_[v];
    return p;
  }

  // The path pins sum(cut(U)) == k via `lower` (>= k) and `upper` (<= k).
  void state(const std::vector<std::uint32_t>& u, long k, const Deriv& lower, const Deriv& upper,
             std::uint32_t depth) {
    if (static_cast<unsigned>(k & 1) == parity(u)) {
      throw std::logic_error("refuter reached a state with matching parity");
    }
    if (observer_ != nullptr) observer_->on_state(u, k, path_);
    if (u.size() == 1) {
      terminate(u[0], k, lower, upper, depth);
      return;
    }

    const std::size_t half = u.size() / 2;
    std::vector<std::uint32_t> u1(u.begin(), u.begin() + static_cast<long>(half));
    std::vector<std::uint32_t> u2(u.begin() + static_cast<long>(half), u.end());
    std::vector<std::uint8_t> side(graph_.vertex_count(), 0);
    for (auto v : u1) side[v] = 1;
    for (auto v : u2) side[v] = 2;
    std::vector<std::uint32_t> c12, c1o, c2o, cut1, cut2;
    const auto& edges = graph_.edges();
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      auto a = side[edges[e].first];
      auto b = side[edges[e].second];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (a == 1 && b == 2) c12.push_back(e);
      if (a == 0 && b == 1) c1o.push_back(e);
      if (a == 0 && b == 2) c2o.push_back(e);
      if (a == 1 || b == 1) cut1.push_back(e);
      if (a == 2 || b == 2) cut2.push_back(e);
    }
    const long n12 = static_cast<long>(c12.size());
    const long n1o = static_cast<long>(c1o.size());
    const long n2o = static_cast<long>(c2o.size());
    const long ncut2 = static_cast<long>(cut2.size());
    const unsigned parity1 = parity(u1);

    auto beta_leaf = [&](long beta, std::optional<AxiomRef> lref, std::optional<AxiomRef> uref,
                         std::uint32_t d1) {
      Deriv lower_beta, upper_beta;
      if (lref) lower_beta.emplace_back(*lref, 1); else add_lower_boxes(lower_beta, c12);
      if (uref) upper_beta.emplace_back(*uref, 1); else add_upper_boxes(upper_beta, c12);

      long glo, ghi;
      Deriv lower_end, upper_end;
      if (options_.tight_ranges) {
        glo = beta + std::max(0L, k - n2o);
        ghi = beta + std::min(n1o, k);
        lower_end = lower_beta;
        if (k - n2o > 0) {
          add_to(lower_end, lower);
          add_upper_boxes(lower_end, c2o);
        } else {
          add_lower_boxes(lower_end, c1o);
        }
        upper_end = upper_beta;
        if (n1o <= k) {
          add_upper_boxes(upper_end, c1o);
        } else {
          add_to(upper_end, upper);
          add_lower_boxes(upper_end, c2o);
        }
      } else {
        glo = 0;
        ghi = static_cast<long>(cut1.size());
        add_lower_boxes(lower_end, cut1);
        add_upper_boxes(upper_end, cut1);
      }

      auto gamma_leaf = [&](long gamma, std::optional<AxiomRef> gl, std::optional<AxiomRef> gu,
                            std::uint32_t d2) {
        Deriv lower_gamma, upper_gamma;
        if (gl) lower_gamma.emplace_back(*gl, 1); else lower_gamma = lower_end;
        if (gu) upper_gamma.emplace_back(*gu, 1); else upper_gamma = upper_end;

        // sum(cut(U2)) = 2 sum(c12) + sum(cut(U)) - sum(cut(U1)).
        const long delta = k + 2 * beta - gamma;
        Deriv lower_delta, upper_delta;
        add_to(lower_delta, lower_beta, 2);
        add_to(lower_delta, lower);
        add_to(lower_delta, upper_gamma);
        add_to(upper_delta, upper_beta, 2);
        add_to(upper_delta, upper);
        add_to(upper_delta, lower_gamma);

        if (observer_ != nullptr) {
          observer_->on_split({u1, u2, k, beta, gamma, delta, cut2}, path_);
        }
        if (delta < 0) {
          add_lower_boxes(upper_delta, cut2);
          close(upper_delta);
        } else if (delta > ncut2) {
          add_upper_boxes(lower_delta, cut2);
          close(lower_delta);
        } else if (static_cast<unsigned>(gamma & 1) != parity1) {
          state(u1, gamma, lower_gamma, upper_gamma, d2);
        } else {
          state(u2, delta, lower_delta, upper_delta, d2);
        }
      };
      pin(cut1, glo, ghi, std::nullopt, std::nullopt, d1, gamma_leaf);
    };
    pin(c12, 0, n12, std::nullopt, std::nullopt, depth, beta_leaf);
  }

  // Queries the incident edges of v one at a time until the partial
  // assignment contradicts sum == k or the vertex constraint.
  void terminate(std::uint32_t v, long k, const Deriv& lower, const Deriv& upper,
                 std::uint32_t depth) {
    const auto& inc = graph_.incident(v);
    std::vector<std::uint32_t> fixed_depth(inc.size(), 0);
    std::vector<std::uint8_t> value(inc.size(), 0);
    terminate_at(v, k, lower, upper, 0, 0, depth, fixed_depth, value);
  }

  void terminate_at(std::uint32_t v, long k, const Deriv& lower, const Deriv& upper,
                    std::size_t i, long s, std::uint32_t depth,
                    std::vector<std::uint32_t>& fixed_depth, std::vector<std::uint8_t>& value) {
    const auto& inc = graph_.incident(v);
    const std::size_t d = inc.size();
    const long rem = static_cast<long>(d - i);
    if (s > k) {
      Deriv cert = upper;
      for (std::size_t j = 0; j < d; ++j) {
        if (j < i && value[j]) cert.emplace_back(AxiomRef::path(fixed_depth[j]), 1);
        else cert.emplace_back(lower_box(inc[j]), 1);
      }
      close(cert);
      return;
    }
    if (s + rem < k) {
      Deriv cert = lower;
      for (std::size_t j = 0; j < d; ++j) {
        if (j < i && !value[j]) cert.emplace_back(AxiomRef::path(fixed_depth[j]), 1);
        else cert.emplace_back(upper_box(inc[j]), 1);
      }
      close(cert);
      return;
    }
    if (i + 1 >= d) {
      // The remaining edge (if any) is forced; the full local assignment has
      // the wrong parity, so one clause of v is falsified.
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < i; ++j) mask |= std::uint64_t{value[j]} << j;
      Deriv cert;
      for (std::size_t j = 0; j < i; ++j) cert.emplace_back(AxiomRef::path(fixed_depth[j]), 1);
      if (i < d) {
        const bool one = s < k;
        mask |= std::uint64_t{one} << i;
        if (one) {
          add_to(cert, lower);
          for (std::size_t j = 0; j < i; ++j) {
            cert.emplace_back(value[j] ? upper_box(inc[j]) : AxiomRef::path(fixed_depth[j]), 1);
          }
        } else {
          add_to(cert, upper);
          for (std::size_t j = 0; j < i; ++j) {
            cert.emplace_back(value[j] ? AxiomRef::path(fixed_depth[j]) : lower_box(inc[j]), 1);
          }
        }
      }
      cert.emplace_back(AxiomRef::axiom(static_cast<std::uint32_t>(offsets_[v] + (mask >> 1))), 1);
      close(cert);
      return;
    }
    fixed_depth[i] = depth;
    branch(LinearInequality::unit(VarId{inc[i]}, 1, 1),
           [&] {
             value[i] = 0;
             terminate_at(v, k, lower, upper, i + 1, s, depth + 1, fixed_depth, value);
           },
           [&] {
             value[i] = 1;
             terminate_at(v, k, lower, upper, i + 1, s + 1, depth + 1, fixed_depth, value);
           });
  }

  const Graph& graph_;
  const VertexLabeling& labeling_;
  SpSink& sink_;
  TseitinOptions options_;
  RefuterObserver* observer_;
  std::vector<std::size_t> offsets_;
  std::size_t explicit_count_;
  bool track_path_;
  InequalitySystem system_;
  std::size_t nodes_ = 0;
  std::vector<LinearInequality> path_;
};

}  // namespace

InequalitySystem tseitin_system(const Graph& graph, const VertexLabeling& labeling) {
  return cnf_to_system(tseitin_cnf(graph, labeling), true);
}

void refute_tseitin_stream(const Graph& graph, const VertexLabeling& labeling, SpSink& sink,
                           const TseitinOptions& options, RefuterObserver* observer) {
  Refuter refuter(graph, labeling, sink, options, observer);
  refuter.run();
}

SpProof refute_tseitin(const Graph& graph, const VertexLabeling& labeling,
                       const TseitinOptions& options) {
  SpProof proof{tseitin_system(graph, labeling), nullptr};
  SpTreeBuilder builder;
  refute_tseitin_stream(graph, labeling, builder, options);
  proof.root = builder.root();
  return proof;
}

void binary_pin(std::span<const VarId> vars, long lo, long hi, std::uint32_t depth, SpSink& sink,
                const PinLeaf& at_leaf) {
  if (lo > hi) throw DomainError("empty pin range");
  std::vector<std::uint32_t> ids;
  ids.reserve(vars.size());
  for (auto v : vars) ids.push_back(v.index);
  std::vector<Term> terms;
  for (auto v : vars) terms.push_back({v, BigInt(1)});
  if (LinearInequality(terms, 0).terms().size() != ids.size()) {
    throw DomainError("pinned variables must be distinct");
  }
  // Reuse the refuter's pin with an otherwise empty instance.
  static const Graph kEmpty(1, {});
  static const VertexLabeling kOdd{1};
  TseitinOptions options;
  Refuter pinner(kEmpty, kOdd, sink, options, nullptr);
  auto leaf = [&](long value, std::optional<AxiomRef> lower, std::optional<AxiomRef> upper,
                  std::uint32_t d) { at_leaf(value, lower, upper, d); };
  pinner.pin(ids, lo, hi, std::nullopt, std::nullopt, depth, leaf);
}

}  // namespace stabkit
