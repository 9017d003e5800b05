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


#ifndef STABKIT_TSEITIN_REFUTER_HPP_
#define STABKIT_TSEITIN_REFUTER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "stabkit/formulas.hpp"
#include "stabkit/sp.hpp"

namespace stabkit {

struct TseitinOptions {
  // Pin gamma only over values consistent with k; otherwise pin it over
  // [0, |cut(U1)|] and close the infeasible delta leaves from box axioms.
  bool tight_ranges = true;
  // Close leaves with find_certificate over the path context instead of the
  // tracked combinations. Much slower; meant for cross-checking.
  bool lp_certificates = false;
  std::size_t max_nodes = std::numeric_limits<std::size_t>::max();
};

// Events fired during construction; `path` holds the edge labels from the
// root to the current position.
class RefuterObserver {
 public:
  virtual ~RefuterObserver() = default;

  // A recursion node: the path pins sum(cut(U)) == k.
  virtual void on_state(const std::vector<std::uint32_t>& /*u*/, long /*k*/,
                        std::span<const LinearInequality> /*path*/) {}

  struct Split {
    const std::vector<std::uint32_t>& u1;
    const std::vector<std::uint32_t>& u2;
    long k;
    long beta;
    long gamma;
    long delta;
    const std::vector<std::uint32_t>& cut_u2;  // edge ids
  };
  // After pinning beta and gamma, before the parity dispatch.
  virtual void on_split(const Split& /*split*/, std::span<const LinearInequality> /*path*/) {}
};

// The CNF translation with box axioms, as used by the refuter.
InequalitySystem tseitin_system(const Graph& graph, const VertexLabeling& labeling);

// Streams the refutation in preorder into `sink`.
void refute_tseitin_stream(const Graph& graph, const VertexLabeling& labeling, SpSink& sink,
                           const TseitinOptions& options = {},
                           RefuterObserver* observer = nullptr);

SpProof refute_tseitin(const Graph& graph, const VertexLabeling& labeling,
                       const TseitinOptions& options = {});

// Binary search pinning sum(vars) to a value in [lo, hi] with threshold
// queries. At each leaf `at_leaf(value, lower, upper, depth)` is called, where
// lower/upper are the path edges asserting sum >= value and -sum >= -value
// (absent when the bound is the original range endpoint).
using PinLeaf = std::function<void(long value, std::optional<AxiomRef> lower,
                                   std::optional<AxiomRef> upper, std::uint32_t depth)>;
void binary_pin(std::span<const VarId> vars, long lo, long hi, std::uint32_t depth, SpSink& sink,
                const PinLeaf& at_leaf);

}  // namespace stabkit

#endif  // STABKIT_TSEITIN_REFUTER_HPP_
