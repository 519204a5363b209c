#pragma once

#include <optional>
#include <vector>

#include "hk/graph.hpp"
#include "hk/word.hpp"

namespace hk {

// An idempotent of the monoid, carried as its support X (an acyclic vertex
// set) together with one X-topological word representing it: each letter of
// X occurs exactly once and every arrow between letters points left to
// right.
struct IdempotentHandle {
  VertexSet support;
  Word word;

  bool operator==(const IdempotentHandle&) const = default;
};

// The canonical idempotent with support x: letters are the reverse of
// topological_order(g, x), so arrows point left to right.  Throws when the
// subgraph on x has a cycle (no idempotent has that content).
IdempotentHandle idempotent_word(const OrientedGraph& g, VertexSet x);

// The three conditions at once: no arrow from a later letter to an earlier
// one, content equal to x, and length |x|.
bool is_x_topological(const OrientedGraph& g, const Word& w, VertexSet x);

// One handle per acyclic subset, in acyclic_subsets order.  These are all
// the idempotents of the monoid.
std::vector<IdempotentHandle> enumerate_idempotents(const OrientedGraph& g);

// Whether e_X e_Y is idempotent, answered two independent ways: via the
// path predicate p and via the rewriting oracle on the concatenated words.
// The two always agree; callers compare them to exercise that theorem.
struct IdempotencyCheck {
  bool via_p;
  bool via_oracle;
};
IdempotencyCheck product_is_idempotent(const OrientedGraph& g, VertexSet x,
                                       VertexSet y);

// When p(x, y) holds, e_X e_Y collapses to e_{X u Y}; returns the union
// support, after asserting the collapse with the rewriting engine (a
// failure there is a theorem violation and throws std::logic_error).
// Returns nothing when p fails.
std::optional<VertexSet> product_support_law(const OrientedGraph& g,
                                             VertexSet x, VertexSet y);

// Both triple-product identities e_X e_Y e_X = e_X e_Y = e_Y e_X e_Y,
// checked with the rewriting engine.  Equivalent to the product being
// idempotent.
bool braid_law(const OrientedGraph& g, VertexSet x, VertexSet y);

// Partition of X u Y from the product analysis: I = X n Y splits into
//   r: members of I reachable from Y \ X by a chain whose interior stays
//      inside I,
//   s: the rest of I,
// and then m = (Y \ X) u r, n = (X \ Y) u s.  When p(X, Y) holds, no arrow
// starts in m and ends in n.
struct MnrsPartition {
  VertexSet m;
  VertexSet n;
  VertexSet r;
  VertexSet s;
};
MnrsPartition mnrs_partition(const OrientedGraph& g, VertexSet x, VertexSet y);

}  // namespace hk
