#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netdesc/error.hpp"

namespace netdesc {

using Vertex = std::uint32_t;

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BuildOptions {
  // Drop duplicate edges instead of rejecting them.
  bool lenient = false;
};

/// Simple connected undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted; every edge has a
/// dense id (its position in edges()) so per-edge quantities can live in
/// plain vectors. Each adjacency entry carries the id of the edge it walks.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  // Edge ids parallel to neighbors(v).
  std::span<const std::uint32_t> incident_edges(Vertex v) const {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  // Id of edge {a,b}; throws VertexOutOfRange if absent.
  std::uint32_t edge_id(Vertex a, Vertex b) const {
    const auto e = Edge::make(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    return static_cast<std::uint32_t>(it - edges_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edge_list,
                           BuildOptions options);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<std::uint32_t> adj_edge_;
};

/// Validates and canonicalizes an edge list.
///
/// Rejects self-loops, out-of-range endpoints and disconnected input.
/// Duplicate edges (in either orientation) are rejected unless
/// options.lenient is set, in which case they are dropped.
inline Graph build_graph(std::size_t n, std::span<const Edge> edge_list,
                         BuildOptions options = {}) {
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph needs at least one vertex");

  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& raw : edge_list) {
    if (raw.u >= n || raw.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                      "} outside 0.." + std::to_string(n - 1));
    }
    if (raw.u == raw.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(raw.u));
    }
    edges.push_back(Edge::make(raw.u, raw.v));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    if (!options.lenient) {
      throw Error(ErrorCode::DuplicateEdge, "edge {" + std::to_string(dup->u) + "," +
                                                std::to_string(dup->v) + "} listed twice");
    }
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adj_.resize(2 * g.edges_.size());
  g.adj_edge_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u,v): appending the smaller endpoints first and
  // then the larger ones leaves every neighbour list sorted.
  for (std::uint32_t id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.adj_[fill[e.v]] = e.u;
    g.adj_edge_[fill[e.v]++] = id;
  }
  for (std::uint32_t id = 0; id < g.edges_.size(); ++id) {
    const auto& e = g.edges_[id];
    g.adj_[fill[e.u]] = e.v;
    g.adj_edge_[fill[e.u]++] = id;
  }

  // Connectivity from vertex 0.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::Disconnected, std::to_string(n - reached) + " of " +
                                             std::to_string(n) +
                                             " vertices unreachable from vertex 0");
  }
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edge_list,
                         BuildOptions options = {}) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()), options);
}

/// Single-source BFS result: hop distances, shortest-path counts and the
/// shortest-path DAG (predecessor lists, flattened).
struct ShortestPathData {
  Vertex source = 0;
  std::vector<std::uint32_t> dist;
  std::vector<std::uint64_t> sigma;
  // Vertices in non-decreasing distance from source; bfs_order[0] == source.
  std::vector<Vertex> bfs_order;
  // preds(v) == pred_list[pred_offsets[v] .. pred_offsets[v+1]).
  std::vector<std::uint32_t> pred_offsets;
  std::vector<Vertex> pred_list;

  std::span<const Vertex> preds(Vertex v) const {
    return {pred_list.data() + pred_offsets[v], pred_list.data() + pred_offsets[v + 1]};
  }

  std::uint32_t eccentricity() const { return dist[bfs_order.back()]; }
};

/// BFS with path counting. sigma[v] is the sum of sigma over preds(v);
/// overflow of the 64-bit counter is an error.
inline ShortestPathData bfs_sssp(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  if (source >= n) {
    throw Error(ErrorCode::VertexOutOfRange, "source " + std::to_string(source));
  }
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);

  ShortestPathData sp;
  sp.source = source;
  sp.dist.assign(n, kUnseen);
  sp.sigma.assign(n, 0);
  sp.bfs_order.reserve(n);
  sp.dist[source] = 0;
  sp.sigma[source] = 1;
  sp.bfs_order.push_back(source);
  for (std::size_t head = 0; head < sp.bfs_order.size(); ++head) {
    const Vertex x = sp.bfs_order[head];
    for (Vertex y : g.neighbors(x)) {
      if (sp.dist[y] == kUnseen) {
        sp.dist[y] = sp.dist[x] + 1;
        sp.bfs_order.push_back(y);
      }
      if (sp.dist[y] == sp.dist[x] + 1) {
        if (__builtin_add_overflow(sp.sigma[y], sp.sigma[x], &sp.sigma[y])) {
          throw Error(ErrorCode::SigmaOverflow,
                      "shortest-path count to vertex " + std::to_string(y) +
                          " exceeds 64 bits");
        }
      }
    }
  }

  // Predecessors, grouped per vertex in neighbour order.
  sp.pred_offsets.assign(n + 1, 0);
  for (Vertex y = 0; y < n; ++y) {
    std::uint32_t count = 0;
    for (Vertex x : g.neighbors(y)) count += (sp.dist[x] + 1 == sp.dist[y]);
    sp.pred_offsets[y + 1] = sp.pred_offsets[y] + count;
  }
  sp.pred_list.resize(sp.pred_offsets[n]);
  for (Vertex y = 0; y < n; ++y) {
    auto out = sp.pred_offsets[y];
    for (Vertex x : g.neighbors(y)) {
      if (sp.dist[x] + 1 == sp.dist[y]) sp.pred_list[out++] = x;
    }
  }
  return sp;
}

/// Eccentricity of source.
inline std::uint32_t diameter_from(const Graph& g, Vertex source) {
  return bfs_sssp(g, source).eccentricity();
}

/// bfs_sssp for every source, indexed by source.
inline std::vector<ShortestPathData> all_sources(const Graph& g) {
  std::vector<ShortestPathData> out;
  out.reserve(g.order());
  for (Vertex s = 0; s < g.order(); ++s) out.push_back(bfs_sssp(g, s));
  return out;
}

}  // namespace netdesc
