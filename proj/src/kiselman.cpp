#include "hk/kiselman.hpp"

#include <algorithm>
#include <stdexcept>

namespace hk {

OrientedGraph kiselman_graph(int n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("Kiselman graph size must be in [1, 64], got " +
                                std::to_string(n));
  }
  std::vector<std::pair<int, int>> arrows;
  arrows.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) arrows.emplace_back(i, j);
  }
  return OrientedGraph(n, arrows);
}

Word epsilon_word(VertexSet x) {
  auto members = x.elements();  // ascending
  return Word(members.rbegin(), members.rend());
}

bool prop14_condition(VertexSet x, VertexSet y) {
  for (int a : (x - y).elements()) {
    for (int b : (y - x).elements()) {
      if (a < b) return false;
    }
  }
  return true;
}

bool combine_law(int n, VertexSet x, VertexSet y) {
  if (!(x | y).subset_of(VertexSet::range(n))) {
    throw std::invalid_argument("sets exceed the Kiselman graph range [1, " +
                                std::to_string(n) + "]");
  }
  const OrientedGraph g = kiselman_graph(n);
  const Word join = epsilon_word(x | y);

  Word left = join;  // e_{X u Y} e_X
  const Word wx = epsilon_word(x);
  left.insert(left.end(), wx.begin(), wx.end());

  Word right = epsilon_word(y);  // e_Y e_{X u Y}
  right.insert(right.end(), join.begin(), join.end());

  return is_idempotent_word(g, left) && is_idempotent_word(g, right);
}

}  // namespace hk
