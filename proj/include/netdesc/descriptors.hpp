#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "netdesc/error.hpp"
#include "netdesc/graph.hpp"

namespace netdesc {

/// Communication decay factor, strictly inside (0, 1).
class Lambda {
 public:
  explicit Lambda(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0)) {
      throw Error(ErrorCode::BadLambda, "lambda must lie in (0,1), got " + std::to_string(value));
    }
  }

  double value() const noexcept { return value_; }
  bool below_half() const noexcept { return value_ < 0.5; }

  friend bool operator==(const Lambda&, const Lambda&) = default;

 private:
  double value_;
};

// powers[d] = lambda^d for d = 0..max_distance, by repeated multiplication.
inline std::vector<double> lambda_powers(Lambda lam, std::size_t max_distance) {
  std::vector<double> powers(max_distance + 1);
  powers[0] = 1.0;
  for (std::size_t d = 1; d <= max_distance; ++d) powers[d] = powers[d - 1] * lam.value();
  return powers;
}

inline std::vector<double> transmission(std::span<const ShortestPathData> paths, Lambda lam) {
  std::vector<double> t(paths.size(), 0.0);
  for (std::size_t u = 0; u < paths.size(); ++u) {
    const auto& sp = paths[u];
    const auto powers = lambda_powers(lam, sp.eccentricity());
    double sum = 0.0;
    for (Vertex v : sp.bfs_order) {
      const auto d = sp.dist[v];
      sum += d * powers[d];
    }
    t[u] = sum;
  }
  return t;
}

/// t[u] = sum over v != u of d(u,v) * lambda^d(u,v).
inline std::vector<double> transmission(const Graph& g, Lambda lam) {
  return transmission(all_sources(g), lam);
}

/// Edge and vertex betweenness. edge[i] belongs to g.edges()[i].
struct Betweenness {
  std::vector<double> edge;
  std::vector<double> vertex;
};

/// One source's contribution to the edge accumulator (each unordered pair is
/// seen from both ends, so totals are twice the final values).
///
/// Targets are visited in visit_order, which must list the vertices in
/// non-increasing distance from the source; the order inside a layer does
/// not change the result. Every target w seeds lambda^d(s,w), and edge (p,w)
/// of the shortest-path DAG receives sigma_p / sigma_w of what w carries.
inline void accumulate_source(const Graph& g, const ShortestPathData& sp,
                              std::span<const double> powers,
                              std::span<const Vertex> visit_order, std::span<double> edge_acc,
                              std::span<double> delta) {
  std::fill(delta.begin(), delta.end(), 0.0);
  for (Vertex w : visit_order) {
    if (w == sp.source) continue;
    const double carried = powers[sp.dist[w]] + delta[w];
    const double per_path = carried / static_cast<double>(sp.sigma[w]);
    const auto nb = g.neighbors(w);
    const auto ids = g.incident_edges(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex p = nb[i];
      if (sp.dist[p] + 1 != sp.dist[w]) continue;
      const double share = per_path * static_cast<double>(sp.sigma[p]);
      edge_acc[ids[i]] += share;
      delta[p] += share;
    }
  }
}

inline Betweenness betweenness(const Graph& g, std::span<const ShortestPathData> paths,
                               Lambda lam) {
  const std::size_t n = g.order();
  Betweenness out;
  out.edge.assign(g.size(), 0.0);
  out.vertex.assign(n, 0.0);
  std::vector<double> delta(n);
  std::vector<Vertex> reverse_order(n);
  for (const auto& sp : paths) {
    const auto powers = lambda_powers(lam, sp.eccentricity());
    std::copy(sp.bfs_order.rbegin(), sp.bfs_order.rend(), reverse_order.begin());
    accumulate_source(g, sp, powers, reverse_order, out.edge, delta);
  }
  for (auto& b : out.edge) b *= 0.5;
  for (std::uint32_t id = 0; id < g.size(); ++id) {
    const auto& e = g.edges()[id];
    out.vertex[e.u] += out.edge[id];
    out.vertex[e.v] += out.edge[id];
  }
  return out;
}

/// Exponential edge betweenness b(e) = sum over unordered pairs {k,l} of
/// (s_e^{kl} / s^{kl}) * lambda^d(k,l), and c(u) = sum of b over edges at u.
///
/// The pair weight is lambda^d(k,l), not lambda^d(u,v) (which would be the
/// constant lambda on every edge); only the pair-distance weight gives
/// sum(c) == sum(t).
inline Betweenness betweenness(const Graph& g, Lambda lam) {
  return betweenness(g, all_sources(g), lam);
}

inline constexpr std::size_t kOracleMaxOrder = 10;

/// Distances and shortest-path counts for all ordered pairs, obtained by
/// Floyd-Warshall and explicit enumeration of every shortest path.
struct PathCensus {
  std::size_t n = 0;
  std::vector<std::uint32_t> dist;   // n*n
  std::vector<std::uint64_t> count;  // n*n, count[k*n+k] == 1

  std::uint32_t d(Vertex k, Vertex l) const { return dist[k * n + l]; }
  std::uint64_t paths(Vertex k, Vertex l) const { return count[k * n + l]; }
};

namespace detail {

inline std::vector<std::uint32_t> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kInf = 1u << 30;
  std::vector<std::uint32_t> d(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const auto& e : g.edges()) d[e.u * n + e.v] = d[e.v * n + e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return d;
}

// Calls visit(path) for every shortest k -> l path (as a vertex sequence).
template <typename Visit>
void for_each_shortest_path(const Graph& g, const std::vector<std::uint32_t>& dist, Vertex k,
                            Vertex l, Visit&& visit) {
  const std::size_t n = g.order();
  std::vector<Vertex> path{k};
  std::function<void(Vertex)> walk = [&](Vertex at) {
    if (at == l) {
      visit(std::span<const Vertex>(path));
      return;
    }
    for (Vertex x : g.neighbors(at)) {
      if (dist[x * n + l] + 1 == dist[at * n + l]) {
        path.push_back(x);
        walk(x);
        path.pop_back();
      }
    }
  };
  walk(k);
}

inline void require_oracle_size(const Graph& g) {
  if (g.order() > kOracleMaxOrder) {
    throw Error(ErrorCode::TooLarge, "path-enumeration oracle is capped at n=" +
                                         std::to_string(kOracleMaxOrder) + ", got n=" +
                                         std::to_string(g.order()));
  }
}

}  // namespace detail

inline PathCensus shortest_path_census(const Graph& g) {
  detail::require_oracle_size(g);
  PathCensus census;
  census.n = g.order();
  census.dist = detail::floyd_warshall(g);
  census.count.assign(census.n * census.n, 0);
  for (Vertex k = 0; k < census.n; ++k) {
    for (Vertex l = 0; l < census.n; ++l) {
      std::uint64_t paths = 0;
      detail::for_each_shortest_path(g, census.dist, k, l,
                                     [&](std::span<const Vertex>) { ++paths; });
      census.count[k * census.n + l] = paths;
    }
  }
  return census;
}

/// Brute-force betweenness: lists every shortest path of every unordered
/// pair and tallies edge usage directly. Independent of bfs_sssp and of the
/// dependency accumulation; intended for n <= kOracleMaxOrder.
inline Betweenness betweenness_oracle(const Graph& g, Lambda lam) {
  detail::require_oracle_size(g);
  const std::size_t n = g.order();
  const auto dist = detail::floyd_warshall(g);
  Betweenness out;
  out.edge.assign(g.size(), 0.0);
  out.vertex.assign(n, 0.0);
  std::vector<std::uint64_t> through(g.size());
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex l = k + 1; l < n; ++l) {
      std::fill(through.begin(), through.end(), 0);
      std::uint64_t total = 0;
      detail::for_each_shortest_path(g, dist, k, l, [&](std::span<const Vertex> path) {
        ++total;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) ++through[g.edge_id(path[i], path[i + 1])];
      });
      const double weight = std::pow(lam.value(), static_cast<double>(dist[k * n + l]));
      for (std::size_t e = 0; e < g.size(); ++e) {
        if (through[e] != 0) {
          out.edge[e] += static_cast<double>(through[e]) / static_cast<double>(total) * weight;
        }
      }
    }
  }
  for (std::uint32_t id = 0; id < g.size(); ++id) {
    const auto& e = g.edges()[id];
    out.vertex[e.u] += out.edge[id];
    out.vertex[e.v] += out.edge[id];
  }
  return out;
}

/// Per-vertex descriptors for one lambda.
struct DescriptorTable {
  Lambda lambda{0.5};
  std::vector<double> t;
  std::vector<double> c;
  std::vector<double> networkness;
  std::vector<double> surplus;
  // edge_betweenness[i] belongs to edges[i].
  std::vector<Edge> edges;
  std::vector<double> edge_betweenness;

  std::size_t order() const noexcept { return t.size(); }
};

inline DescriptorTable descriptor_table(const Graph& g, std::span<const ShortestPathData> paths,
                                        Lambda lam) {
  if (g.order() < 2) {
    throw Error(ErrorCode::SingletonGraph, "networkness is undefined on a single vertex");
  }
  DescriptorTable table;
  table.lambda = lam;
  table.t = transmission(paths, lam);
  auto b = betweenness(g, paths, lam);
  table.c = std::move(b.vertex);
  table.edges.assign(g.edges().begin(), g.edges().end());
  table.edge_betweenness = std::move(b.edge);
  const std::size_t n = g.order();
  table.networkness.resize(n);
  table.surplus.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    table.networkness[u] = table.c[u] / table.t[u];
    table.surplus[u] = table.c[u] - table.t[u];
  }
  return table;
}

inline DescriptorTable descriptor_table(const Graph& g, Lambda lam) {
  return descriptor_table(g, all_sources(g), lam);
}

struct Extremum {
  double value = 0.0;
  Vertex vertex = 0;
};

/// Eight min/max aggregates with witness vertices (ties -> smallest id).
struct AggregateSummary {
  Extremum mt, Mt, mc, Mc, mN, MN, mnu, Mnu;
};

namespace detail {

inline Extremum arg_min(std::span<const double> xs) {
  Extremum best{xs[0], 0};
  for (Vertex v = 1; v < xs.size(); ++v)
    if (xs[v] < best.value) best = {xs[v], v};
  return best;
}

inline Extremum arg_max(std::span<const double> xs) {
  Extremum best{xs[0], 0};
  for (Vertex v = 1; v < xs.size(); ++v)
    if (xs[v] > best.value) best = {xs[v], v};
  return best;
}

}  // namespace detail

inline AggregateSummary aggregates(const DescriptorTable& table) {
  AggregateSummary s;
  s.mt = detail::arg_min(table.t);
  s.Mt = detail::arg_max(table.t);
  s.mc = detail::arg_min(table.c);
  s.Mc = detail::arg_max(table.c);
  s.mN = detail::arg_min(table.networkness);
  s.MN = detail::arg_max(table.networkness);
  s.mnu = detail::arg_min(table.surplus);
  s.Mnu = detail::arg_max(table.surplus);
  return s;
}

inline double sum_of(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s;
}

}  // namespace netdesc
