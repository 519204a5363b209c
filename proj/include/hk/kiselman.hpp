#pragma once

#include "hk/graph.hpp"
#include "hk/word.hpp"

namespace hk {

// The complete acyclic tournament on [n]: arrow i -> j iff i > j.  The
// monoid it presents is the classical Kiselman monoid, which this module
// exposes through direct formulas as an independent cross-check on the
// graph/rewriting code paths.
OrientedGraph kiselman_graph(int n);

// The canonical idempotent word with content x on the Kiselman graph: the
// members of x in strictly decreasing order; empty word for the empty set.
Word epsilon_word(VertexSet x);

// Order condition: every member of X \ Y exceeds every member of Y \ X.
// Evaluated directly on the indices, no graph search.  Equivalent to the
// path predicate on the Kiselman graph and to the product of the epsilon
// words being idempotent.
bool prop14_condition(VertexSet x, VertexSet y);

// The products e_{X u Y} e_X and e_Y e_{X u Y} are idempotent for every
// pair of subsets of [n]; checks both with the rewriting oracle.
bool combine_law(int n, VertexSet x, VertexSet y);

}  // namespace hk
