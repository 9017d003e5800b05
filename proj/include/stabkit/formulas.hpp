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


#ifndef STABKIT_FORMULAS_HPP_
#define STABKIT_FORMULAS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabkit/inequality.hpp"
#include "stabkit/system.hpp"

namespace stabkit {

using Clause = std::vector<Literal>;

struct Cnf {
  std::size_t nvars = 0;
  std::vector<Clause> clauses;
  // Free-form "key=value" metadata carried as comment lines.
  std::vector<std::string> comments;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

InequalitySystem cnf_to_system(const Cnf& cnf, bool include_box = true);

// Simple undirected graph with edges stored as (min, max) pairs in
// lexicographic order; the position of an edge is its variable index.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t nvertices, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
  // Edge indices incident to v, ascending.
  const std::vector<std::uint32_t>& incident(std::uint32_t v) const { return incident_[v]; }
  std::size_t degree(std::uint32_t v) const { return incident_[v].size(); }
  std::size_t max_degree() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<std::uint32_t>> incident_;
};

// Fanin-2 DAG for pebbling formulas: arcs (u, v) mean u is a predecessor of v.
struct PebblingDag {
  std::size_t nvertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
};

using VertexLabeling = std::vector<std::uint8_t>;

// Graph constructions. Random regular graphs are simple and connected.
Graph complete_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph cycle_graph(std::size_t n);
Graph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed);
PebblingDag pyramid_dag(std::size_t height);

// Parses "complete:N", "grid:RxC", "cycle:N" or "regular:N,D".
Graph graph_from_spec(std::string_view spec, std::uint64_t seed = 0);

// Random labeling with odd total weight.
VertexLabeling odd_labeling(std::size_t n, std::uint64_t seed);
// "10010" style bit string.
VertexLabeling parse_labeling(std::string_view bits);
std::string labeling_to_string(const VertexLabeling& labeling);

// Clauses are emitted vertex by vertex; within a vertex of degree d the
// forbidden local assignments are listed by increasing mask over its incident
// edges (bit i = i-th incident edge), so the clause forbidding mask m is the
// (m >> 1)-th one of that vertex.
Cnf tseitin_cnf(const Graph& graph, const VertexLabeling& labeling);
// Index of the first clause of every vertex in tseitin_cnf's output.
std::vector<std::size_t> tseitin_clause_offsets(const Graph& graph,
                                                const VertexLabeling& labeling);

// Source units, then one clause per internal vertex, then the sink clause.
Cnf pebbling_cnf(const PebblingDag& dag);

// Default clause budget for the lifted encodings. Honors STABKIT_CLAUSE_BUDGET.
std::size_t default_clause_budget();

// Variables y_{i,j} are numbered i*l + j and z_{i,j} are n*l + i*l + j.
Cnf lift_ind(const Cnf& f, std::size_t l, std::size_t budget = default_clause_budget());

// Variable i becomes x_{i,1..4} = 4i .. 4i+3; (x_{i,1}, x_{i,2}) and
// (x_{i,3}, x_{i,4}) are big-endian encodings of two elements of Z4.
Cnf lift_ver(const Cnf& f, std::size_t budget = default_clause_budget());
bool ver_gadget(unsigned a, unsigned b);

Cnf parse_dimacs(std::string_view text);
std::string write_dimacs(const Cnf& cnf);

struct OpbInstance {
  InequalitySystem system;
  std::vector<std::string> comments;
};

InequalitySystem parse_opb(std::string_view text);
OpbInstance parse_opb_instance(std::string_view text);
std::string write_opb(const InequalitySystem& system,
                      const std::vector<std::string>& comments = {});

}  // namespace stabkit

#endif  // STABKIT_FORMULAS_HPP_
