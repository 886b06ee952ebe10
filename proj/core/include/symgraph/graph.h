// Copyright 2026 The SymGraph Authors
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

// Undirected simple graphs and random generators whose edge sets are closed
// under the mirror vertex pairing i <-> i + floor(n/2).

#ifndef SYMGRAPH_GRAPH_H_
#define SYMGRAPH_GRAPH_H_

#include <compare>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "symgraph/random.h"

namespace symgraph {

// Unordered edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

Edge MakeEdge(int a, int b);

class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::set<Edge>& edges() const { return edges_; }

  // Returns false if the edge already exists. Self-loops and out-of-range
  // endpoints are invalid-argument.
  bool AddEdge(int u, int v);
  bool HasEdge(int u, int v) const;

  std::vector<std::vector<int>> Adjacency() const;
  bool IsConnected() const;

  bool operator==(const Graph&) const = default;

 private:
  int num_vertices_ = 0;
  std::set<Edge> edges_;
};

// The involution i <-> i + floor(n/2). When n is odd, vertex n-1 is fixed.
class MirrorPairing {
 public:
  explicit MirrorPairing(int num_vertices);

  int num_vertices() const { return num_vertices_; }
  int half() const { return num_vertices_ / 2; }
  bool has_fixed_vertex() const { return num_vertices_ % 2 == 1; }

  int Mirror(int u) const;
  Edge Mirror(Edge e) const;

 private:
  int num_vertices_;
};

enum class EdgeFeature {
  kRandomAny,          // any pair (u, v)
  kRandomNonCrossing,  // both endpoints in the left half
  kParallel,           // (u, u + half): maps onto itself
  kCrossing,           // left half to right half, v != mirror(u)
};

std::string_view EdgeFeatureName(EdgeFeature feature);

bool IsMirrorClosed(const Graph& graph);

// True for (u, mirror(u)) edges.
bool IsParallelEdge(const MirrorPairing& pairing, Edge e);
// True for edges from the left half [0, half) to [half, n) other than
// parallel edges.
bool IsCrossingEdge(const MirrorPairing& pairing, Edge e);

// Random connected mirror-closed graph with exactly `num_edges` edges, built
// by drawing edges of the requested feature kinds together with their mirror
// images. Each requested Parallel / Crossing kind appears at least once.
//
// Errors: invalid-argument for n < 4, an edge count outside
// [n, floor(1.2 n)] or an empty feature list; generation-infeasible when the
// feature kinds cannot produce a connected graph with that many edges;
// generation-retry-exhausted after kMaxRetries failed attempts.
Graph GenerateSymmetricGraph(int num_vertices, int num_edges,
                             std::span<const EdgeFeature> features, Rng& rng);

// Random connected simple graph with the given size. Used as the half (or
// wedge) component of parallel-lines, translational and rotational layouts.
Graph GenerateComponentGraph(int num_vertices, int num_edges, Rng& rng);

// Two disjoint copies of `component`: vertex i and its copy i + n_c.
Graph DuplicateComponent(const Graph& component);

enum class ConnectMode {
  kParallelOnly,  // each chosen vertex joins its copy
  kMixed,         // parallel edges and mirror-closed crossing pairs
};

// Adds exactly `count` edges between the two halves of a graph produced by
// DuplicateComponent, keeping the edge set mirror-closed.
Graph ConnectComponents(const Graph& graph, int count, ConnectMode mode,
                        Rng& rng);

}  // namespace symgraph

#endif  // SYMGRAPH_GRAPH_H_
