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

#ifndef STABKIT_FARKAS_HPP_
#define STABKIT_FARKAS_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "stabkit/number.hpp"
#include "stabkit/system.hpp"

namespace stabkit {

struct CertificateTerm {
  AxiomRef ref;
  Rational coeff;

  friend bool operator==(const CertificateTerm&, const CertificateTerm&) = default;
};

// A nonnegative rational combination of context inequalities. It is a valid
// emptiness certificate when the combined left-hand side vanishes and the
// combined bound is at least 1, i.e. it reads 0 >= c with c >= 1.
//
// The same type doubles as a general linear combination while proofs are
// being assembled, so add() accepts any sign.
class FarkasCertificate {
 public:
  FarkasCertificate() = default;
  explicit FarkasCertificate(std::vector<CertificateTerm> terms);

  static FarkasCertificate single(AxiomRef ref, Rational coeff = 1) {
    return FarkasCertificate({{ref, std::move(coeff)}});
  }

  const std::vector<CertificateTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Adds factor * other, merging equal refs and dropping zeros.
  FarkasCertificate& add(const FarkasCertificate& other, const Rational& factor = 1);
  FarkasCertificate& add(AxiomRef ref, const Rational& coeff);
  FarkasCertificate scaled(const Rational& factor) const;

  // "a3:1 p0:1/2" in canonical ref order.
  std::string to_string() const;

  friend bool operator==(const FarkasCertificate&, const FarkasCertificate&) = default;

 private:
  std::vector<CertificateTerm> terms_;  // sorted by ref, no zero coefficients
};

// The combination sum coeff * (A x >= b) as a single inequality (rational
// coefficients are cleared by the lcm of the denominators). Throws
// ReferenceError for unresolvable refs.
struct CombinedInequality {
  std::vector<std::pair<VarId, Rational>> lhs;  // nonzero entries only
  Rational bound;
};
CombinedInequality combine(const AxiomContext& ctx, const FarkasCertificate& cert);

// True iff all coefficients are nonnegative, the combined left-hand side is
// zero and the combined bound is at least 1. Throws ReferenceError if a ref does
// not resolve.
bool verify_certificate(const AxiomContext& ctx, const FarkasCertificate& cert);

// A rational point satisfying every inequality of the context.
struct Witness {
  std::vector<Rational> point;
};

using FarkasResult = std::variant<FarkasCertificate, Witness>;

// Exact emptiness test for the rational polytope of the context. Returns a
// certificate accepted by verify_certificate or a satisfying point with
// max(nvars, ctx.var_span()) coordinates.
FarkasResult find_certificate(const AxiomContext& ctx, std::size_t nvars = 0);

// Carathéodory reduction: an equivalent certificate supported on at most
// (number of variables involved) + 1 terms. Throws InvalidCertificateError if
// the input does not verify.
FarkasCertificate reduce_support(const AxiomContext& ctx, const FarkasCertificate& cert);

}  // namespace stabkit

#endif  // STABKIT_FARKAS_HPP_
