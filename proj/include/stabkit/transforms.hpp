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


#ifndef STABKIT_TRANSFORMS_HPP_
#define STABKIT_TRANSFORMS_HPP_

#include <cstddef>
#include <string>

#include "stabkit/cp.hpp"
#include "stabkit/sp.hpp"

namespace stabkit {

// Tree-like CP to SP with depth at most twice the CP rank.
SpProof cp_tree_to_sp_depth(const CpProof& proof);

// Any CP proof of m lines to an SP proof of length 2m + 1.
SpProof cp_to_sp_size(const CpProof& proof);

// Tree-like CP to SP of logarithmic depth via recursive centroid splits.
SpProof cp_tree_to_sp_balanced(const CpProof& proof);

// Configuration proof of space s and length l to SP of depth O(s log l).
SpProof cp_space_to_sp(const CpConfigProof& proof);

struct TransformReport {
  std::string kind;
  std::size_t input_length = 0;
  std::size_t input_rank = 0;
  std::size_t input_space = 0;
  SpStats output;
  std::string bound;  // human-readable bound that was checked
  bool bound_holds = true;
};

TransformReport report_cp_tree_to_sp_depth(const CpProof& in, const SpProof& out);
TransformReport report_cp_to_sp_size(const CpProof& in, const SpProof& out);
TransformReport report_cp_tree_to_sp_balanced(const CpProof& in, const SpProof& out,
                                              double c = 6);
TransformReport report_cp_space_to_sp(const CpConfigProof& in, const SpProof& out, double c = 4);

}  // namespace stabkit

#endif  // STABKIT_TRANSFORMS_HPP_
