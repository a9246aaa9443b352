#pragma once

#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "netdesc/error.hpp"
#include "netdesc/graph.hpp"

namespace netdesc {

enum class Family { Broom, Path, Star, Cycle, Complete, Circulant };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::Broom: return "broom";
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Circulant: return "circulant";
  }
  return "unknown";
}

inline Family parse_family(const std::string& name) {
  for (auto f : {Family::Broom, Family::Path, Family::Star, Family::Cycle, Family::Complete,
                 Family::Circulant}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::BadParameter, "unknown family '" + name + "'");
}

struct FamilySpec {
  Family family = Family::Path;
  int n = 1;
  int D = 0;                 // broom only
  std::vector<int> offsets;  // circulant only

  // e.g. "broom n=5 D=2", "circulant n=6 offsets=1,2"
  std::string describe() const {
    std::string s = to_string(family) + " n=" + std::to_string(n);
    if (family == Family::Broom) s += " D=" + std::to_string(D);
    if (family == Family::Circulant) {
      s += " offsets=";
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(offsets[i]);
      }
    }
    return s;
  }
};

namespace detail {

inline void require_n(int n, int min_n, const char* family) {
  if (n < min_n) {
    throw Error(ErrorCode::BadParameter, std::string(family) + " needs n >= " +
                                             std::to_string(min_n) + ", got " + std::to_string(n));
  }
}

}  // namespace detail

/// Broom on n vertices with eccentricity D at the starting vertex 0.
///
/// Path 0-1-...-D, and the remaining n-D-1 vertices D+1..n-1 hang off vertex
/// D-1, so they sit at distance D from vertex 0 like the path end. Put
/// differently: the path 0..D-1 with n-D leaves on its last vertex.
/// D = n-1 gives P_n, D = 1 gives S_n centred at 0.
inline Graph broom(int n, int D) {
  detail::require_n(n, 2, "broom");
  if (D < 1 || D > n - 1) {
    throw Error(ErrorCode::DOutOfRange,
                "broom D=" + std::to_string(D) + " outside 1.." + std::to_string(n - 1));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < D; ++i) edges.push_back(Edge::make(i, i + 1));
  for (int w = D + 1; w < n; ++w) edges.push_back(Edge::make(D - 1, w));
  return build_graph(n, edges);
}

inline Graph path(int n) {
  detail::require_n(n, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge::make(i, i + 1));
  return build_graph(n, edges);
}

// Centre is vertex 0.
inline Graph star(int n) {
  detail::require_n(n, 1, "star");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back(Edge::make(0, i));
  return build_graph(n, edges);
}

inline Graph cycle(int n) {
  detail::require_n(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::make(i, (i + 1) % n));
  return build_graph(n, edges);
}

inline Graph complete(int n) {
  detail::require_n(n, 1, "complete");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back(Edge::make(i, j));
  return build_graph(n, edges);
}

/// i ~ i +- s (mod n) for every offset s in 1..floor(n/2). Vertex-transitive;
/// disconnected when gcd(offsets, n) > 1.
inline Graph circulant(int n, const std::vector<int>& offsets) {
  detail::require_n(n, 2, "circulant");
  if (offsets.empty()) throw Error(ErrorCode::BadParameter, "circulant needs offsets");
  std::set<Edge> edges;
  for (int s : offsets) {
    if (s < 1 || s > n / 2) {
      throw Error(ErrorCode::BadParameter, "circulant offset " + std::to_string(s) +
                                               " outside 1.." + std::to_string(n / 2));
    }
    for (int i = 0; i < n; ++i) edges.insert(Edge::make(i, (i + s) % n));
  }
  return build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

inline Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Broom: return broom(spec.n, spec.D);
    case Family::Path: return path(spec.n);
    case Family::Star: return star(spec.n);
    case Family::Cycle: return cycle(spec.n);
    case Family::Complete: return complete(spec.n);
    case Family::Circulant: return circulant(spec.n, spec.offsets);
  }
  throw Error(ErrorCode::BadParameter, "unknown family");
}

}  // namespace netdesc
