#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hk/vertex_set.hpp"

namespace hk {

// Finite simple oriented graph on vertices 1..n: no loops, no 2-cycles, no
// multiple arrows, n <= 64.  Immutable after construction.
class OrientedGraph {
 public:
  OrientedGraph(int n, const std::vector<std::pair<int, int>>& arrows);

  // Graph file format: comments start at '#'; the first payload line is
  // "n <count>"; every further payload line is "<u> <v>" declaring u -> v.
  // Violations (malformed line, vertex out of range, self-loop, 2-cycle,
  // duplicate arrow) raise ParseError with the offending line number.
  static OrientedGraph parse(std::string_view text);

  // Emits "n <count>" then the arrows sorted by (u, v); parse(serialize(g))
  // round-trips bit-exactly.
  std::string serialize() const;

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool arrow(int u, int v) const { return out_[u - 1].contains(v); }
  bool connected(int u, int v) const { return arrow(u, v) || arrow(v, u); }
  bool disconnected(int u, int v) const { return u != v && !connected(u, v); }

  VertexSet out(int v) const { return out_[v - 1]; }
  VertexSet in(int v) const { return in_[v - 1]; }

  std::size_t arrow_count() const;
  std::vector<std::pair<int, int>> arrows() const;  // sorted by (u, v)

  bool operator==(const OrientedGraph& o) const {
    return n_ == o.n_ && out_ == o.out_;
  }

 private:
  int n_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Non-owning view of the full subgraph of g on vertex set x: an arrow is
// present iff it is present in g and both endpoints lie in x.
class InducedSubgraph {
 public:
  InducedSubgraph(const OrientedGraph& g, VertexSet x) : g_(&g), x_(x) {}

  VertexSet vertices() const { return x_; }
  bool arrow(int u, int v) const {
    return x_.contains(u) && x_.contains(v) && g_->arrow(u, v);
  }
  VertexSet out(int v) const { return g_->out(v) & x_; }
  std::vector<std::pair<int, int>> arrows() const;

 private:
  const OrientedGraph* g_;
  VertexSet x_;
};

inline InducedSubgraph induced_subgraph(const OrientedGraph& g, VertexSet x) {
  return InducedSubgraph(g, x);
}

// True iff the full subgraph on x has no directed cycle.
bool is_acyclic(const OrientedGraph& g, VertexSet x);

// Enumeration (i_1, ..., i_k) of x such that i_j -> i_j' implies j > j'
// (targets precede sources).  Ties broken by smallest vertex index.
// Throws std::invalid_argument when the subgraph on x has a cycle.
std::vector<int> topological_order(const OrientedGraph& g, VertexSet x);

// All X with is_acyclic(g, X), ordered by (cardinality, mask).  The family
// is downward closed.  Guarded to n <= 20 (the scan is over all 2^n masks).
std::vector<VertexSet> acyclic_subsets(const OrientedGraph& g);

// Vertices of `within` reachable from `sources` by a directed path that
// never leaves `within` (zero-length paths included, so the result always
// contains sources).  Requires sources to be a subset of within.
VertexSet reachable(const OrientedGraph& g, VertexSet sources, VertexSet within);

// p(X, Y): no directed path inside the subgraph on X u Y starts in Y \ X
// and ends in X \ Y.  Evaluated for arbitrary subsets; its theorem-level
// meaning (product of idempotents) is only for X, Y in A_Theta.
bool predicate_p(const OrientedGraph& g, VertexSet x, VertexSet y);

// All vertex permutations sigma with u -> v iff sigma(u) -> sigma(v),
// in lexicographic order of one-line notation.  Brute force; n <= 8.
std::vector<std::vector<int>> automorphisms(const OrientedGraph& g);

}  // namespace hk
