// Copyright 2026 The Authors.
//
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noneven/element_set.hpp"
#include "noneven/execution.hpp"
#include "noneven/oriented_matroid.hpp"

namespace noneven {

struct Edge {
  int tail;
  int head;
  std::string id;

  bool is_loop() const { return tail == head; }
};

// Labelled multidigraph; loops, parallel and anti-parallel edges allowed.
// Edge positions double as element positions of the induced matroids.
class Digraph {
 public:
  // Returns the existing index when the label is already present.
  int add_vertex(const std::string& label);
  // An empty id becomes "e<k>" with k the 1-based edge position. Throws
  // PreconditionError on a duplicate id or an unknown endpoint.
  int add_edge(int tail, int head, std::string id = "");
  int add_edge(const std::string& tail, const std::string& head,
               std::string id = "");

  int num_vertices() const { return int(vertices_.size()); }
  int num_edges() const { return int(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(i); }
  ElementSet all_edges() const { return ElementSet::range(num_edges()); }

  int find_vertex(const std::string& label) const;
  int find_edge(const std::string& id) const;
  std::vector<std::string> edge_ids(ElementSet s) const;
  // Edges incident with v, loops excluded.
  ElementSet incident(int v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

// Vertex-edge incidence representation (+1 at the head, -1 at the tail,
// loops as zero columns); labels are edge ids.
OrientedMatroid graphic_matroid(const Digraph& d);
// dual(graphic_matroid(d)).
OrientedMatroid bond_matroid(const Digraph& d);

inline constexpr int kDefaultVertexBound = 14;

// Minimal non-empty cuts with every edge leaving the same side, found by
// scanning all vertex subsets. Sorted, duplicates removed.
std::vector<ElementSet> directed_bonds(const Digraph& d,
                                       int vertex_bound = kDefaultVertexBound,
                                       Execution exec = Execution::kParallel);

bool is_odd_dijoin(const Digraph& d, ElementSet j,
                   int vertex_bound = kDefaultVertexBound);
// Edge set meeting every directed bond an odd number of times, by GF(2)
// elimination over all directed bonds.
std::optional<ElementSet> odd_dijoin(const Digraph& d,
                                     int vertex_bound = kDefaultVertexBound);

// A directed path from tail to head avoiding the edge. Loops never qualify.
bool is_deletable(const Digraph& d, int edge);

struct CutMinorStep {
  enum class Kind { kContractEdges, kDeleteDeletable, kDropIsolated };
  Kind kind;
  std::vector<std::string> edges;  // ids for kContractEdges / kDeleteDeletable
  std::string vertex;              // label for kDropIsolated

  static CutMinorStep contract_edges(std::vector<std::string> ids) {
    return {Kind::kContractEdges, std::move(ids), {}};
  }
  static CutMinorStep delete_deletable(std::string id) {
    return {Kind::kDeleteDeletable, {std::move(id)}, {}};
  }
  static CutMinorStep drop_isolated(std::string label) {
    return {Kind::kDropIsolated, {}, std::move(label)};
  }
};

struct CutMinorResult {
  Digraph digraph;
  std::vector<int> vertex_map;  // original vertex -> result vertex, or -1
  std::vector<int> edge_map;    // result edge -> original edge
};

// Contracting an edge set identifies each weak component of the selected
// subgraph into its least-indexed vertex (keeping that label) and removes the
// loops this creates. Throws PreconditionError on unknown ids, a
// non-deletable edge passed to kDeleteDeletable, or a non-isolated vertex.
CutMinorResult apply_cut_minor(const Digraph& d,
                               const std::vector<CutMinorStep>& steps);

// T-join of the underlying multigraph (orientation ignored): odd degree
// exactly on t. Pairs consecutive t-vertices of each component along
// shortest paths (least-index tie-breaking) and sums the paths.
std::optional<ElementSet> t_join(const Digraph& g, const std::vector<int>& t);

// D(n0, n1, n2): layers a1.., b1.., c1.. with all edges a->b and b->c.
Digraph build_D(int n0, int n1, int n2);
// Bicycle on v1..vk: edges f_i = v_i -> v_{i+1} and r_i = v_{i+1} -> v_i.
Digraph build_bicycle(int k);
// K_{m,n} oriented from the m-side: build_D(m, n, 0).
Digraph build_one_direction(int m, int n);

// Which case of the closed form decided D(n1, n2, n3).
enum class DFamilyClause {
  kNoEdges,    // some layer empty and no edges remain
  kTwoLayer,   // one outer layer empty: min <= 1 or equal parity
  kStar,       // n2 == 1
  kDiamond,    // n2 == 2: n1 = n3 (mod 2)
  kWide,       // n2 >= 3: n1, n3 both odd
};

struct DFamilyVerdict {
  bool has_odd_dijoin;
  DFamilyClause clause;
};

// Closed form for two-layer one-directions D(n1, n2, 0).
bool two_layer_has_odd_dijoin(int n1, int n2);
DFamilyVerdict d_family_has_odd_dijoin(int n1, int n2, int n3);
// Explicit odd dijoin of build_D(n1, n2, n3), re-verified against all
// directed bonds (so the vertex count must be within `vertex_bound`).
std::optional<ElementSet> d_family_odd_dijoin_construct(
    int n1, int n2, int n3, int vertex_bound = kDefaultVertexBound);

inline constexpr int kDefaultObstructionEdgeBound = 12;

// No odd dijoin, while every one-step cut minor has one.
bool is_minimal_obstruction(const Digraph& d,
                            int edge_bound = kDefaultObstructionEdgeBound);

}  // namespace noneven
