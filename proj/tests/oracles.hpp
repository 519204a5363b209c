#pragma once

// Test-only oracles.  Each one answers a question the library also answers,
// by a deliberately different route, so the suites can cross-check results
// instead of trusting a single implementation.

#include <functional>
#include <vector>

#include "hk/graph.hpp"
#include "hk/word.hpp"

namespace oracle {

// Cycle detection by three-color depth-first search on the induced
// subgraph (the library peels sinks instead).
inline bool has_cycle(const hk::OrientedGraph& g, hk::VertexSet x) {
  enum Color { White, Gray, Black };
  std::vector<Color> color(static_cast<std::size_t>(g.vertex_count()) + 1, White);
  bool found = false;
  std::function<void(int)> dfs = [&](int v) {
    color[static_cast<std::size_t>(v)] = Gray;
    for (int w : (g.out(v) & x).elements()) {
      if (color[static_cast<std::size_t>(w)] == Gray) {
        found = true;
      } else if (color[static_cast<std::size_t>(w)] == White) {
        dfs(w);
      }
      if (found) return;
    }
    color[static_cast<std::size_t>(v)] = Black;
  };
  for (int v : x.elements()) {
    if (color[static_cast<std::size_t>(v)] == White && !found) dfs(v);
  }
  return found;
}

// Reachability via Floyd-Warshall transitive closure on the induced
// adjacency matrix (the library runs a frontier search).
inline hk::VertexSet reach(const hk::OrientedGraph& g, hk::VertexSet sources,
                           hk::VertexSet within) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n) + 1,
                                   std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (int u : within.elements()) {
    for (int v : (g.out(u) & within).elements()) {
      m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    }
  }
  for (int k : within.elements()) {
    for (int i : within.elements()) {
      for (int j : within.elements()) {
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
      }
    }
  }
  hk::VertexSet out = sources;
  for (int s : sources.elements()) {
    for (int v : within.elements()) {
      if (m[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)]) {
        out |= hk::VertexSet::single(v);
      }
    }
  }
  return out;
}

// The chain form of the predicate: no b in Y \ X, a in X \ Y with a chain
// b -> i_1 -> ... -> i_r -> a whose interior lies in X n Y (r = 0 meaning
// a direct arrow b -> a).
inline bool p_chain(const hk::OrientedGraph& g, hk::VertexSet x, hk::VertexSet y) {
  const hk::VertexSet interior = x & y;
  const hk::VertexSet targets = x - y;
  for (int b : (y - x).elements()) {
    if (!(g.out(b) & targets).empty()) return false;
    hk::VertexSet visited;
    hk::VertexSet stack = g.out(b) & interior;
    while (!stack.empty()) {
      const int v = stack.min();
      stack = stack.without(v);
      if (visited.contains(v)) continue;
      visited |= hk::VertexSet::single(v);
      if (!(g.out(v) & targets).empty()) return false;
      stack |= (g.out(v) & interior) - visited;
    }
  }
  return true;
}

// Every cancellation decomposition, checked letter by letter against the
// side conditions (the library scans with cumulative masks).
inline std::vector<hk::Cancellation> cancellations_brute(
    const hk::OrientedGraph& g, const hk::Word& w) {
  std::vector<hk::Cancellation> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] != w[j]) continue;
      bool right_ok = true;
      bool left_ok = true;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (g.arrow(w[k], w[i])) right_ok = false;
        if (g.arrow(w[i], w[k])) left_ok = false;
      }
      if (right_ok) out.push_back({hk::CancelKind::Right, i, j});
      if (left_ok) out.push_back({hk::CancelKind::Left, i, j});
    }
  }
  return out;
}

}  // namespace oracle
