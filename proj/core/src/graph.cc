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

#include "symgraph/graph.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "symgraph/error.h"

namespace symgraph {

Edge MakeEdge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(int num_vertices) : num_vertices_(num_vertices) {
  if (num_vertices < 0) ThrowInvalidArgument("negative vertex count");
}

bool Graph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
    ThrowInvalidArgument("edge endpoint out of range: (" + std::to_string(u) +
                         ", " + std::to_string(v) + ")");
  }
  if (u == v) ThrowInvalidArgument("self-loop at " + std::to_string(u));
  return edges_.insert(MakeEdge(u, v)).second;
}

bool Graph::HasEdge(int u, int v) const {
  return u != v && edges_.contains(MakeEdge(u, v));
}

std::vector<std::vector<int>> Graph::Adjacency() const {
  std::vector<std::vector<int>> adjacency(num_vertices_);
  for (const Edge& e : edges_) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  return adjacency;
}

bool Graph::IsConnected() const {
  if (num_vertices_ <= 1) return true;
  const auto adjacency = Adjacency();
  std::vector<bool> seen(num_vertices_, false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == num_vertices_;
}

MirrorPairing::MirrorPairing(int num_vertices) : num_vertices_(num_vertices) {
  if (num_vertices < 2) ThrowInvalidArgument("mirror pairing needs n >= 2");
}

int MirrorPairing::Mirror(int u) const {
  if (u < 0 || u >= num_vertices_) {
    ThrowInvalidArgument("vertex " + std::to_string(u) + " out of range [0, " +
                         std::to_string(num_vertices_) + ")");
  }
  const int h = half();
  if (has_fixed_vertex() && u == num_vertices_ - 1) return u;
  return u < h ? u + h : u - h;
}

Edge MirrorPairing::Mirror(Edge e) const {
  return MakeEdge(Mirror(e.u), Mirror(e.v));
}

std::string_view EdgeFeatureName(EdgeFeature feature) {
  switch (feature) {
    case EdgeFeature::kRandomAny:
      return "random";
    case EdgeFeature::kRandomNonCrossing:
      return "non-crossing";
    case EdgeFeature::kParallel:
      return "parallel";
    case EdgeFeature::kCrossing:
      return "crossing";
  }
  return "unknown";
}

bool IsMirrorClosed(const Graph& graph) {
  if (graph.num_vertices() < 2) return true;
  const MirrorPairing pairing(graph.num_vertices());
  return std::all_of(graph.edges().begin(), graph.edges().end(),
                     [&](const Edge& e) {
                       return graph.edges().contains(pairing.Mirror(e));
                     });
}

bool IsParallelEdge(const MirrorPairing& pairing, Edge e) {
  return e.u < pairing.half() && e.v == e.u + pairing.half();
}

bool IsCrossingEdge(const MirrorPairing& pairing, Edge e) {
  return e.u < pairing.half() && e.v >= pairing.half() &&
         !IsParallelEdge(pairing, e);
}

namespace {

bool InFeatureDomain(const MirrorPairing& pairing, EdgeFeature feature,
                     Edge e) {
  switch (feature) {
    case EdgeFeature::kRandomAny:
      return true;
    case EdgeFeature::kRandomNonCrossing:
      return e.v < pairing.half();
    case EdgeFeature::kParallel:
      return IsParallelEdge(pairing, e);
    case EdgeFeature::kCrossing:
      return IsCrossingEdge(pairing, e);
  }
  return false;
}

int OrbitSize(const MirrorPairing& pairing, Edge e) {
  return pairing.Mirror(e) == e ? 1 : 2;
}

void AddOrbit(const MirrorPairing& pairing, Edge e, Graph& graph) {
  graph.AddEdge(e.u, e.v);
  const Edge mirrored = pairing.Mirror(e);
  graph.AddEdge(mirrored.u, mirrored.v);
}

// Edges of `feature` not yet in `graph` whose orbit fits in `budget`.
std::vector<Edge> Candidates(const MirrorPairing& pairing, EdgeFeature feature,
                             const Graph& graph, int budget) {
  std::vector<Edge> out;
  const int n = pairing.num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Edge e{u, v};
      if (!InFeatureDomain(pairing, feature, e)) continue;
      if (graph.edges().contains(e)) continue;
      if (OrbitSize(pairing, e) > budget) continue;
      out.push_back(e);
    }
  }
  return out;
}

template <typename T>
const T& PickOne(const std::vector<T>& items, Rng& rng) {
  return items[UniformInt(rng, 0, static_cast<int>(items.size()) - 1)];
}

void CheckFeasible(const MirrorPairing& pairing,
                   std::span<const EdgeFeature> features, int num_edges) {
  const int n = pairing.num_vertices();
  Graph reachable(n);
  bool has_self_mirrored = false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Edge e{u, v};
      for (EdgeFeature f : features) {
        if (!InFeatureDomain(pairing, f, e)) continue;
        AddOrbit(pairing, e, reachable);
        if (OrbitSize(pairing, e) == 1) has_self_mirrored = true;
      }
    }
  }
  if (reachable.num_edges() < num_edges) {
    throw Error(ErrorCode::kGenerationInfeasible,
                "only " + std::to_string(reachable.num_edges()) +
                    " mirror-closed edges available for " +
                    std::to_string(num_edges) + " requested");
  }
  if (num_edges % 2 == 1 && !has_self_mirrored) {
    throw Error(ErrorCode::kGenerationInfeasible,
                "odd edge count needs a self-mirrored (parallel) edge");
  }
  if (!reachable.IsConnected()) {
    throw Error(ErrorCode::kGenerationInfeasible,
                "requested edge features cannot connect the graph");
  }
}

}  // namespace

Graph GenerateSymmetricGraph(int num_vertices, int num_edges,
                             std::span<const EdgeFeature> features, Rng& rng) {
  if (num_vertices < 4) ThrowInvalidArgument("symmetric graphs need n >= 4");
  if (num_edges < num_vertices || num_edges > num_vertices * 6 / 5) {
    ThrowInvalidArgument("edge count " + std::to_string(num_edges) +
                         " outside [n, floor(1.2 n)] for n = " +
                         std::to_string(num_vertices));
  }
  if (features.empty()) ThrowInvalidArgument("no edge features requested");

  const MirrorPairing pairing(num_vertices);
  CheckFeasible(pairing, features, num_edges);

  // Distinct kinds that need a witness edge, in order of first request.
  std::vector<EdgeFeature> witnesses;
  for (EdgeFeature f : features) {
    if ((f == EdgeFeature::kParallel || f == EdgeFeature::kCrossing) &&
        std::find(witnesses.begin(), witnesses.end(), f) == witnesses.end()) {
      witnesses.push_back(f);
    }
  }

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Graph graph(num_vertices);
    int remaining = num_edges;
    bool stuck = false;

    auto draw = [&](EdgeFeature feature) {
      const int budget = remaining == 1 ? 1 : 2;
      const auto candidates = Candidates(pairing, feature, graph, budget);
      if (candidates.empty()) return false;
      const Edge e = PickOne(candidates, rng);
      AddOrbit(pairing, e, graph);
      remaining -= OrbitSize(pairing, e);
      return true;
    };

    for (EdgeFeature f : witnesses) {
      if (remaining == 0 || !draw(f)) {
        stuck = true;
        break;
      }
    }
    while (!stuck && remaining > 0) {
      const int budget = remaining == 1 ? 1 : 2;
      std::vector<EdgeFeature> usable;
      for (EdgeFeature f : features) {
        if (!Candidates(pairing, f, graph, budget).empty()) usable.push_back(f);
      }
      if (usable.empty()) {
        stuck = true;
        break;
      }
      draw(PickOne(usable, rng));
    }
    if (!stuck && graph.IsConnected()) return graph;
  }
  throw Error(ErrorCode::kGenerationRetryExhausted,
              "no connected symmetric graph with n = " +
                  std::to_string(num_vertices) +
                  ", m = " + std::to_string(num_edges));
}

Graph GenerateComponentGraph(int num_vertices, int num_edges, Rng& rng) {
  if (num_vertices < 2) ThrowInvalidArgument("component needs >= 2 vertices");
  if (num_edges < num_vertices - 1) {
    ThrowInvalidArgument(std::to_string(num_edges) +
                         " edges cannot connect " +
                         std::to_string(num_vertices) + " vertices");
  }
  if (num_edges > num_vertices * (num_vertices - 1) / 2) {
    ThrowInvalidArgument("too many edges for a simple graph");
  }
  Graph graph(num_vertices);
  std::vector<int> order(num_vertices);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < num_vertices; ++i) {
    graph.AddEdge(order[i], order[UniformInt(rng, 0, i - 1)]);
  }
  while (graph.num_edges() < num_edges) {
    std::vector<Edge> missing;
    for (int u = 0; u < num_vertices; ++u) {
      for (int v = u + 1; v < num_vertices; ++v) {
        if (!graph.HasEdge(u, v)) missing.push_back({u, v});
      }
    }
    const Edge e = PickOne(missing, rng);
    graph.AddEdge(e.u, e.v);
  }
  return graph;
}

Graph DuplicateComponent(const Graph& component) {
  const int c = component.num_vertices();
  Graph graph(2 * c);
  for (const Edge& e : component.edges()) {
    graph.AddEdge(e.u, e.v);
    graph.AddEdge(e.u + c, e.v + c);
  }
  return graph;
}

Graph ConnectComponents(const Graph& graph, int count, ConnectMode mode,
                        Rng& rng) {
  const int n = graph.num_vertices();
  if (n < 2 || n % 2 != 0) {
    ThrowInvalidArgument("expected two equal components, got n = " +
                         std::to_string(n));
  }
  if (count < 1 || count > n / 3) {
    ThrowInvalidArgument("connecting edge count " + std::to_string(count) +
                         " outside [1, " + std::to_string(n / 3) + "]");
  }
  const MirrorPairing pairing(n);
  for (const Edge& e : graph.edges()) {
    if (e.u < pairing.half() && e.v >= pairing.half()) {
      ThrowInvalidArgument("components are already connected");
    }
  }
  if (!IsMirrorClosed(graph)) {
    ThrowInvalidArgument("components are not mirror copies");
  }

  Graph out = graph;
  int remaining = count;
  while (remaining > 0) {
    std::vector<Edge> parallel;
    std::vector<Edge> crossing;
    for (int u = 0; u < pairing.half(); ++u) {
      for (int v = pairing.half(); v < n; ++v) {
        const Edge e{u, v};
        if (out.edges().contains(e)) continue;
        if (IsParallelEdge(pairing, e)) {
          parallel.push_back(e);
        } else if (mode == ConnectMode::kMixed && remaining >= 2) {
          crossing.push_back(e);
        }
      }
    }
    const std::vector<Edge>* pool = nullptr;
    if (!parallel.empty() && !crossing.empty()) {
      pool = UniformInt(rng, 0, 1) == 0 ? &parallel : &crossing;
    } else if (!parallel.empty()) {
      pool = &parallel;
    } else if (!crossing.empty()) {
      pool = &crossing;
    } else {
      throw Error(ErrorCode::kGenerationInfeasible,
                  "not enough distinct connections for " +
                      std::to_string(count) + " edges");
    }
    const Edge e = PickOne(*pool, rng);
    AddOrbit(pairing, e, out);
    remaining -= OrbitSize(pairing, e);
  }
  return out;
}

}  // namespace symgraph
