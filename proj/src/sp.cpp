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


#include "stabkit/sp.hpp"

#include <algorithm>
#include <thread>

namespace stabkit {

SpNodePtr make_leaf(FarkasCertificate cert) {
  return std::make_shared<const SpNode>(SpNode{SpLeaf{std::move(cert)}});
}

SpNodePtr make_query(LinearInequality affirmative, SpNodePtr left, SpNodePtr right) {
  LinearInequality negated = integer_negation(affirmative);
  return make_query(std::move(affirmative), std::move(negated), std::move(left), std::move(right));
}

SpNodePtr make_query(LinearInequality affirmative, LinearInequality negated, SpNodePtr left,
                     SpNodePtr right) {
  return std::make_shared<const SpNode>(SpNode{SpQuery{std::move(affirmative), std::move(negated),
                                                       std::move(left), std::move(right)}});
}

void emit(const SpNode& node, SpSink& sink) {
  std::vector<const SpNode*> stack{&node};
  while (!stack.empty()) {
    const SpNode* n = stack.back();
    stack.pop_back();
    if (n->is_leaf()) {
      sink.on_leaf(n->leaf().cert);
      continue;
    }
    const SpQuery& q = n->query();
    sink.on_query(q.affirmative, q.negated);
    stack.push_back(q.right.get());
    stack.push_back(q.left.get());
  }
}

void SpTreeBuilder::on_query(const LinearInequality& affirmative,
                             const LinearInequality& negated) {
  if (root_) throw InvalidProofError("event after the tree was complete");
  stack_.push_back({affirmative, negated, nullptr});
}

void SpTreeBuilder::on_leaf(const FarkasCertificate& cert) {
  if (root_) throw InvalidProofError("event after the tree was complete");
  attach(make_leaf(cert));
}

void SpTreeBuilder::attach(SpNodePtr node) {
  while (!stack_.empty()) {
    Pending& top = stack_.back();
    if (!top.left) {
      top.left = std::move(node);
      return;
    }
    node = make_query(std::move(top.affirmative), std::move(top.negated), std::move(top.left),
                      std::move(node));
    stack_.pop_back();
  }
  root_ = std::move(node);
}

SpNodePtr SpTreeBuilder::root() const {
  if (!complete()) throw InvalidProofError("truncated proof tree");
  return root_;
}

SpStreamVerifier::SpStreamVerifier(const InequalitySystem& system, unsigned jobs)
    : system_(system), jobs_(std::max(1U, jobs)) {}

SpStreamVerifier::~SpStreamVerifier() = default;

std::string SpStreamVerifier::current_path() const {
  std::string p;
  p.reserve(frames_.size());
  for (const auto& f : frames_) p.push_back(f.right ? 'R' : 'L');
  return p;
}

void SpStreamVerifier::fail(std::size_t node, std::string path, std::string message) {
  if (report_.ok || node < *report_.failing_node) {
    report_.ok = false;
    report_.failing_node = node;
    report_.path = std::move(path);
    report_.message = std::move(message);
  }
}

void SpStreamVerifier::on_query(const LinearInequality& affirmative,
                                const LinearInequality& negated) {
  const std::size_t node = next_node_++;
  if (closed_) {
    fail(node, "", "extra nodes after the end of the tree");
    return;
  }
  if (report_.ok && negated != integer_negation(affirmative)) {
    fail(node, current_path(),
         "edge labels are not an integer negation pair: " + affirmative.to_string() + " / " +
             negated.to_string());
  }
  frames_.push_back({affirmative, negated, false});
  path_.push_back(&frames_.back().negated);
}

void SpStreamVerifier::on_leaf(const FarkasCertificate& cert) {
  const std::size_t node = next_node_++;
  if (closed_) {
    fail(node, "", "extra nodes after the end of the tree");
    return;
  }
  if (report_.ok) {
    if (jobs_ == 1) {
      AxiomContext ctx(system_.axioms(), path_);
      std::string error;
      try {
        if (!verify_certificate(ctx, cert)) error = "certificate does not derive 0 >= 1";
      } catch (const ReferenceError& e) {
        error = e.what();
      }
      if (!error.empty()) fail(node, current_path(), error);
    } else {
      LeafJob job{node, current_path(), {}, cert};
      job.edges.reserve(path_.size());
      for (const auto* p : path_) job.edges.push_back(*p);
      pending_.push_back(std::move(job));
      if (pending_.size() >= 256 * jobs_) flush_jobs();
    }
  }
  unwind();
}

void SpStreamVerifier::unwind() {
  while (!frames_.empty()) {
    Frame& top = frames_.back();
    if (!top.right) {
      top.right = true;
      path_.back() = &top.affirmative;
      return;
    }
    frames_.pop_back();
    path_.pop_back();
  }
  closed_ = true;
}

void SpStreamVerifier::flush_jobs() {
  if (pending_.empty()) return;
  std::vector<std::string> errors(pending_.size());
  auto work = [&](std::size_t begin) {
    for (std::size_t i = begin; i < pending_.size(); i += jobs_) {
      const LeafJob& job = pending_[i];
      std::vector<const LinearInequality*> path;
      path.reserve(job.edges.size());
      for (const auto& e : job.edges) path.push_back(&e);
      try {
        if (!verify_certificate(AxiomContext(system_.axioms(), path), job.cert)) {
          errors[i] = "certificate does not derive 0 >= 1";
        }
      } catch (const ReferenceError& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs_; ++t) threads.emplace_back(work, t);
  work(0);
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < pending_.size(); ++i) {
    if (!errors[i].empty()) {
      fail(pending_[i].node, pending_[i].path, errors[i]);
      break;
    }
  }
  pending_.clear();
}

VerifyReport SpStreamVerifier::finish() {
  flush_jobs();
  report_.nodes = next_node_;
  if (!closed_) fail(next_node_, current_path(), "proof tree is truncated");
  return report_;
}

VerifyReport verify_sp(const SpProof& proof, unsigned jobs) {
  SpStreamVerifier verifier(proof.system, jobs);
  if (proof.root) emit(*proof.root, verifier);
  return verifier.finish();
}

void SpStatsSink::on_query(const LinearInequality& affirmative, const LinearInequality& negated) {
  ++stats_.length;
  ++stats_.queries;
  for (const auto* ineq : {&affirmative, &negated}) {
    for (const auto& t : ineq->terms()) {
      stats_.bitsize += bit_length(t.coeff);
      if (abs(t.coeff) > stats_.max_abs_coeff) stats_.max_abs_coeff = abs(t.coeff);
    }
    stats_.bitsize += bit_length(ineq->bound());
  }
  stack_.push_back(false);
}

void SpStatsSink::on_leaf(const FarkasCertificate& cert) {
  ++stats_.length;
  ++stats_.leaves;
  stats_.depth = std::max(stats_.depth, stack_.size());
  for (const auto& t : cert.terms()) stats_.bitsize += bit_length(t.coeff);
  while (!stack_.empty()) {
    if (!stack_.back()) {
      stack_.back() = true;
      return;
    }
    stack_.pop_back();
  }
}

SpStats sp_stats(const SpProof& proof) {
  SpStatsSink sink;
  if (proof.root) emit(*proof.root, sink);
  return sink.stats();
}

AxiomRef evaluate_search(const SpProof& proof, const Assignment& assignment) {
  if (assignment.size() < proof.system.nvars()) {
    throw DimensionError("assignment has " + std::to_string(assignment.size()) +
                         " entries for a system on " + std::to_string(proof.system.nvars()) +
                         " variables");
  }
  if (!proof.root) throw InvalidProofError("empty proof");
  std::vector<const LinearInequality*> path;
  const SpNode* node = proof.root.get();
  while (!node->is_leaf()) {
    const SpQuery& q = node->query();
    if (q.negated != integer_negation(q.affirmative)) {
      throw InvalidProofError("query at depth " + std::to_string(path.size()) +
                              " is not a negation pair");
    }
    if (evaluate(q.affirmative, assignment)) {
      path.push_back(&q.affirmative);
      node = q.right.get();
    } else {
      path.push_back(&q.negated);
      node = q.left.get();
    }
  }
  const FarkasCertificate& cert = node->leaf().cert;
  AxiomContext ctx(proof.system.axioms(), path);
  if (!verify_certificate(ctx, cert)) {
    throw InvalidProofError("leaf reached by the assignment has an invalid certificate");
  }
  for (const auto& t : cert.terms()) {
    if (t.ref.is_axiom() && !evaluate(proof.system.axiom(t.ref.index), assignment)) return t.ref;
  }
  throw InvalidProofError("no certificate axiom is falsified by the assignment");
}

IncompleteRefutationError::IncompleteRefutationError(std::string path,
                                                     std::vector<Rational> witness)
    : Error("leaf at path '" + path + "' has a nonempty polytope"),
      path_(std::move(path)),
      witness_(std::move(witness)) {}

namespace {

SpNodePtr complete_node(const InequalitySystem& system, const SpNode& node,
                        std::vector<const LinearInequality*>& path, std::string& steps) {
  if (node.is_leaf()) {
    AxiomContext ctx(system.axioms(), path);
    auto result = find_certificate(ctx, system.nvars());
    if (auto* w = std::get_if<Witness>(&result)) {
      throw IncompleteRefutationError(steps, std::move(w->point));
    }
    return make_leaf(std::get<FarkasCertificate>(std::move(result)));
  }
  const SpQuery& q = node.query();
  if (q.negated != integer_negation(q.affirmative)) {
    throw InvalidProofError("skeleton query at path '" + steps + "' is not a negation pair");
  }
  path.push_back(&q.negated);
  steps.push_back('L');
  SpNodePtr left = complete_node(system, *q.left, path, steps);
  path.back() = &q.affirmative;
  steps.back() = 'R';
  SpNodePtr right = complete_node(system, *q.right, path, steps);
  path.pop_back();
  steps.pop_back();
  return make_query(q.affirmative, q.negated, std::move(left), std::move(right));
}

}  // namespace

SpProof complete_skeleton(const InequalitySystem& system, const SpNodePtr& skeleton) {
  if (!skeleton) throw InvalidProofError("empty skeleton");
  std::vector<const LinearInequality*> path;
  std::string steps;
  return SpProof{system, complete_node(system, *skeleton, path, steps)};
}

}  // namespace stabkit
