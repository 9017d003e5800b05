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


#ifndef STABKIT_SP_HPP_
#define STABKIT_SP_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stabkit/errors.hpp"
#include "stabkit/farkas.hpp"
#include "stabkit/inequality.hpp"
#include "stabkit/system.hpp"

namespace stabkit {

struct SpNode;
using SpNodePtr = std::shared_ptr<const SpNode>;

// Internal node. The left edge carries `negated`, the right edge carries
// `affirmative`; a well-formed query has negated == integer_negation(affirmative).
struct SpQuery {
  LinearInequality affirmative;
  LinearInequality negated;
  SpNodePtr left;
  SpNodePtr right;
};

// A leaf with an empty certificate is an open leaf of a skeleton.
struct SpLeaf {
  FarkasCertificate cert;
};

struct SpNode {
  std::variant<SpQuery, SpLeaf> body;

  bool is_leaf() const { return std::holds_alternative<SpLeaf>(body); }
  const SpQuery& query() const { return std::get<SpQuery>(body); }
  const SpLeaf& leaf() const { return std::get<SpLeaf>(body); }
};

SpNodePtr make_leaf(FarkasCertificate cert = {});
SpNodePtr make_query(LinearInequality affirmative, SpNodePtr left, SpNodePtr right);
// Keeps both labels verbatim, even when they are not a negation pair.
SpNodePtr make_query(LinearInequality affirmative, LinearInequality negated, SpNodePtr left,
                     SpNodePtr right);

struct SpProof {
  InequalitySystem system;
  SpNodePtr root;
};

// Preorder event stream over a proof tree: a query is followed by its left
// subtree and then its right subtree.
class SpSink {
 public:
  virtual ~SpSink() = default;
  virtual void on_query(const LinearInequality& affirmative, const LinearInequality& negated) = 0;
  virtual void on_leaf(const FarkasCertificate& cert) = 0;
};

void emit(const SpNode& node, SpSink& sink);

// Rebuilds a tree from an event stream.
class SpTreeBuilder : public SpSink {
 public:
  void on_query(const LinearInequality& affirmative, const LinearInequality& negated) override;
  void on_leaf(const FarkasCertificate& cert) override;

  bool complete() const { return root_ != nullptr && stack_.empty(); }
  SpNodePtr root() const;

 private:
  struct Pending {
    LinearInequality affirmative;
    LinearInequality negated;
    SpNodePtr left;
  };
  void attach(SpNodePtr node);

  std::vector<Pending> stack_;
  SpNodePtr root_;
};

struct VerifyReport {
  bool ok = true;
  std::optional<std::size_t> failing_node;  // preorder index
  std::string path;                         // 'L'/'R' steps from the root
  std::string message;
  std::size_t nodes = 0;
};

// Checks a proof as its event stream arrives, so proofs need not fit in memory.
class SpStreamVerifier : public SpSink {
 public:
  // jobs > 1 checks leaf certificates on worker threads.
  explicit SpStreamVerifier(const InequalitySystem& system, unsigned jobs = 1);
  ~SpStreamVerifier() override;

  void on_query(const LinearInequality& affirmative, const LinearInequality& negated) override;
  void on_leaf(const FarkasCertificate& cert) override;

  // Completes pending work and reports; flags truncated streams.
  VerifyReport finish();

 private:
  struct Frame {
    LinearInequality affirmative;
    LinearInequality negated;
    bool right = false;
  };
  struct LeafJob {
    std::size_t node;
    std::string path;
    std::vector<LinearInequality> edges;
    FarkasCertificate cert;
  };

  std::string current_path() const;
  void fail(std::size_t node, std::string path, std::string message);
  void unwind();
  void flush_jobs();

  InequalitySystem system_;
  unsigned jobs_;
  std::deque<Frame> frames_;
  std::vector<const LinearInequality*> path_;
  std::size_t next_node_ = 0;
  bool closed_ = false;
  VerifyReport report_;
  std::vector<LeafJob> pending_;
};

VerifyReport verify_sp(const SpProof& proof, unsigned jobs = 1);

struct SpStats {
  std::size_t length = 0;
  std::size_t depth = 0;
  std::size_t bitsize = 0;
  BigInt max_abs_coeff = 0;
  std::size_t leaves = 0;
  std::size_t queries = 0;
};

class SpStatsSink : public SpSink {
 public:
  void on_query(const LinearInequality& affirmative, const LinearInequality& negated) override;
  void on_leaf(const FarkasCertificate& cert) override;
  const SpStats& stats() const { return stats_; }

 private:
  SpStats stats_;
  std::vector<bool> stack_;  // per open query: left subtree finished
};

SpStats sp_stats(const SpProof& proof);

// Follows the branch satisfied by `assignment` and returns a system axiom used
// by the reached leaf that the assignment falsifies.
AxiomRef evaluate_search(const SpProof& proof, const Assignment& assignment);

class IncompleteRefutationError : public Error {
 public:
  IncompleteRefutationError(std::string path, std::vector<Rational> witness);

  const std::string& path() const { return path_; }
  const std::vector<Rational>& witness() const { return witness_; }

 private:
  std::string path_;
  std::vector<Rational> witness_;
};

// Fills every leaf with a certificate from find_certificate.
SpProof complete_skeleton(const InequalitySystem& system, const SpNodePtr& skeleton);

}  // namespace stabkit

#endif  // STABKIT_SP_HPP_
