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


// Text formats for systems and proofs. Every format starts with a header
// line, continues with a system block
//
//   vars <n>
//   box <0|1>
//   axioms <m>
//   <m inequality lines>
//
// and ends with a line reading "end". Inequalities are written as
// "+2 x1 -3 x2 >= 5" with 1-based variables, certificates as "a3:1 p0:1/2".

#ifndef STABKIT_PROOF_IO_HPP_
#define STABKIT_PROOF_IO_HPP_

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "stabkit/cp.hpp"
#include "stabkit/rcp.hpp"
#include "stabkit/sp.hpp"

namespace stabkit {

inline constexpr std::string_view kSpHeader = "SPPROOF v1";
inline constexpr std::string_view kCpHeader = "CPPROOF v1";
inline constexpr std::string_view kCpConfigHeader = "CPCONFIG v1";
inline constexpr std::string_view kRcpHeader = "RCPPROOF v1";

FarkasCertificate parse_certificate(std::string_view text, std::size_t line,
                                    std::size_t column_base = 1);

// Writes nodes as they arrive: "q <affirmative> ; <negated>" for queries and
// "l <certificate>" for leaves.
class SpWriter : public SpSink {
 public:
  SpWriter(std::ostream& out, const InequalitySystem& system);

  void on_query(const LinearInequality& affirmative, const LinearInequality& negated) override;
  void on_leaf(const FarkasCertificate& cert) override;
  // Writes the trailer.
  void finish();

 private:
  std::ostream& out_;
};

// Reads the header and system eagerly; stream() then replays the nodes.
class SpReader {
 public:
  explicit SpReader(std::istream& in);

  const InequalitySystem& system() const { return system_; }
  // Throws ParseError on malformed or incomplete trees.
  void stream(SpSink& sink);

 private:
  bool next_line(std::string& line);

  std::istream& in_;
  std::size_t line_ = 0;
  InequalitySystem system_;
};

std::string write_sp(const SpProof& proof);
SpProof parse_sp(std::string_view text);

// "<idx>: <ineq> ; axiom <i> | lincomb <j> <k> <alpha> <beta> | div <j> <alpha>"
std::string write_cp(const CpProof& proof);
CpProof parse_cp(std::string_view text);

// CP lines with an optional trailing "; erase <i> ...", or "<idx>: erase <i> ...".
std::string write_cp_config(const CpConfigProof& proof);
CpConfigProof parse_cp_config(std::string_view text);

// "<idx>: [<ineq> | ...] ; input <i> | axiom-intro | weaken <j> <ineq> |
//  lincomb <j> <k> <alpha> <beta> | div <j> <alpha> | cut <j> <k> | elim <j>"
std::string write_rcp(const RcpProof& proof);
RcpProof parse_rcp(std::string_view text);

// The first non-empty line of a proof file.
std::string sniff_header(std::string_view text);

}  // namespace stabkit

#endif  // STABKIT_PROOF_IO_HPP_
