#include <stdexcept>

#include "doctest.h"

#include "hk/idempotent.hpp"
#include "hk/kiselman.hpp"

using namespace hk;

namespace {

VertexSet vs(std::initializer_list<int> members) {
  VertexSet out;
  for (int v : members) out |= VertexSet::single(v);
  return out;
}

}  // namespace

TEST_SUITE("kiselman") {

TEST_CASE("the complete acyclic tournament") {
  CHECK(kiselman_graph(2).arrows() == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(kiselman_graph(1).arrow_count() == 0);
  CHECK(kiselman_graph(3).arrows() ==
        std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}});
  CHECK_THROWS_AS(kiselman_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(kiselman_graph(65), std::invalid_argument);
}

TEST_CASE("epsilon words are decreasing") {
  CHECK(epsilon_word(vs({1, 3})) == Word{3, 1});
  CHECK(epsilon_word(VertexSet{}).empty());
  CHECK(epsilon_word(vs({2})) == Word{2});
  CHECK(epsilon_word(vs({1, 2, 3, 4})) == Word{4, 3, 2, 1});
}

TEST_CASE("epsilon word equals the canonical idempotent word exactly") {
  for (int n = 1; n <= 5; ++n) {
    const auto g = kiselman_graph(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto x = VertexSet::from_mask(m);
      CHECK(epsilon_word(x) == idempotent_word(g, x).word);
    }
  }
}

TEST_CASE("the order condition") {
  CHECK(prop14_condition(vs({3}), vs({1, 2})));
  CHECK_FALSE(prop14_condition(vs({1}), vs({2})));
  CHECK(prop14_condition(vs({1, 3}), vs({1, 3})));
  CHECK(prop14_condition(VertexSet{}, vs({2})));
}

TEST_CASE("order condition = path predicate = rewriting oracle, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto g = kiselman_graph(n);
    for (std::uint64_t mx = 0; mx < (std::uint64_t{1} << n); ++mx) {
      for (std::uint64_t my = 0; my < (std::uint64_t{1} << n); ++my) {
        const auto x = VertexSet::from_mask(mx);
        const auto y = VertexSet::from_mask(my);
        const bool order = prop14_condition(x, y);
        CHECK(order == predicate_p(g, x, y));
        Word product = epsilon_word(x);
        const Word wy = epsilon_word(y);
        product.insert(product.end(), wy.begin(), wy.end());
        CHECK(order == is_idempotent_word(g, product));
        if (order) CHECK(hk_equal(g, product, epsilon_word(x | y)));
      }
    }
  }
}

TEST_CASE("combined products are always idempotent") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t mx = 0; mx < (std::uint64_t{1} << n); ++mx) {
      for (std::uint64_t my = 0; my < (std::uint64_t{1} << n); ++my) {
        CHECK(combine_law(n, VertexSet::from_mask(mx), VertexSet::from_mask(my)));
      }
    }
  }
  CHECK(combine_law(2, VertexSet{}, VertexSet{}));
  // ... even where the plain product is not: on two generators, epsilon_1
  // epsilon_2 itself is not idempotent.
  CHECK_FALSE(is_idempotent_word(kiselman_graph(2), Word{1, 2}));
  CHECK(combine_law(2, vs({1}), vs({2})));
  CHECK_THROWS_AS(combine_law(2, vs({3}), vs({1})), std::invalid_argument);
}

}  // TEST_SUITE("kiselman")
