#include "hk/idempotent.hpp"

#include <algorithm>
#include <stdexcept>

namespace hk {

IdempotentHandle idempotent_word(const OrientedGraph& g, VertexSet x) {
  auto order = topological_order(g, x);  // throws when x is not acyclic
  Word w(order.rbegin(), order.rend());
  return {x, std::move(w)};
}

bool is_x_topological(const OrientedGraph& g, const Word& w, VertexSet x) {
  if (w.size() != static_cast<std::size_t>(x.size())) return false;
  if (content(w) != x) return false;
  for (std::size_t later = 1; later < w.size(); ++later) {
    for (std::size_t earlier = 0; earlier < later; ++earlier) {
      if (g.arrow(w[later], w[earlier])) return false;
    }
  }
  return true;
}

std::vector<IdempotentHandle> enumerate_idempotents(const OrientedGraph& g) {
  std::vector<IdempotentHandle> out;
  for (VertexSet x : acyclic_subsets(g)) {
    out.push_back(idempotent_word(g, x));
  }
  return out;
}

IdempotencyCheck product_is_idempotent(const OrientedGraph& g, VertexSet x,
                                       VertexSet y) {
  Word wx = idempotent_word(g, x).word;
  const Word wy = idempotent_word(g, y).word;
  wx.insert(wx.end(), wy.begin(), wy.end());
  return {predicate_p(g, x, y), is_idempotent_word(g, wx)};
}

std::optional<VertexSet> product_support_law(const OrientedGraph& g,
                                             VertexSet x, VertexSet y) {
  if (!predicate_p(g, x, y)) return std::nullopt;
  const VertexSet join = x | y;
  if (!is_acyclic(g, join)) {
    throw std::logic_error("product law violated: p holds for " +
                           format_set(x) + ", " + format_set(y) +
                           " but their union induces a cycle");
  }
  Word product = idempotent_word(g, x).word;
  const Word wy = idempotent_word(g, y).word;
  product.insert(product.end(), wy.begin(), wy.end());
  if (!hk_equal(g, product, idempotent_word(g, join).word)) {
    throw std::logic_error("product law violated: e_X e_Y differs from the "
                           "union idempotent for " +
                           format_set(x) + ", " + format_set(y));
  }
  return join;
}

bool braid_law(const OrientedGraph& g, VertexSet x, VertexSet y) {
  const Word wx = idempotent_word(g, x).word;
  const Word wy = idempotent_word(g, y).word;
  Word xy = wx;
  xy.insert(xy.end(), wy.begin(), wy.end());
  Word xyx = xy;
  xyx.insert(xyx.end(), wx.begin(), wx.end());
  Word yxy = wy;
  yxy.insert(yxy.end(), wx.begin(), wx.end());
  yxy.insert(yxy.end(), wy.begin(), wy.end());
  return hk_equal(g, xyx, xy) && hk_equal(g, yxy, xy);
}

MnrsPartition mnrs_partition(const OrientedGraph& g, VertexSet x, VertexSet y) {
  const VertexSet interior = x & y;
  // Chains start in Y \ X and stay inside the intersection from the first
  // step on; plain reachability through X u Y would admit detours.
  VertexSet r;
  VertexSet frontier;
  for (int b : (y - x).elements()) frontier |= g.out(b);
  frontier &= interior;
  while (!frontier.empty()) {
    r |= frontier;
    VertexSet next;
    for (int v : frontier.elements()) next |= g.out(v);
    frontier = (next & interior) - r;
  }
  const VertexSet s = interior - r;
  return {(y - x) | r, (x - y) | s, r, s};
}

}  // namespace hk
