#include <algorithm>

#include "doctest.h"

#include "hk/errors.hpp"
#include "hk/graph.hpp"
#include "hk/verify.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {

OrientedGraph path3() { return OrientedGraph(3, {{1, 2}, {2, 3}}); }
OrientedGraph cycle3() { return OrientedGraph(3, {{1, 2}, {2, 3}, {3, 1}}); }

VertexSet vs(std::initializer_list<int> members) {
  VertexSet out;
  for (int v : members) out |= VertexSet::single(v);
  return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("parse accepts the basic formats") {
  auto g = OrientedGraph::parse("n 3\n1 2\n2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.arrows() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

  auto single = OrientedGraph::parse("n 1\n");
  CHECK(single.vertex_count() == 1);
  CHECK(single.arrow_count() == 0);

  auto commented = OrientedGraph::parse("# a path\nn 2\n1 2  # forward\n");
  CHECK(commented.arrow(1, 2));
}

TEST_CASE("parse rejects bad input with line numbers") {
  auto expect_line = [](const char* text, int line) {
    try {
      OrientedGraph::parse(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("n 2\n1 2\n2 1\n", 3);     // 2-cycle
  expect_line("n 2\n1 1\n", 2);          // self-loop
  expect_line("n 2\n1 2\n1 2\n", 3);     // duplicate arrow
  expect_line("n 2\n1 3\n", 2);          // out of range
  expect_line("n 2\nfoo bar\n", 2);      // malformed
  expect_line("nope\n", 1);              // bad header
  expect_line("n 0\n", 1);               // bad count
}

TEST_CASE("serialize round-trips bit-exactly") {
  for (const auto& g : verify::all_graphs(3)) {
    const std::string text = g.serialize();
    CHECK(OrientedGraph::parse(text).serialize() == text);
  }
}

TEST_CASE("constructor enforces the simple-oriented invariants") {
  CHECK_THROWS_AS(OrientedGraph(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(OrientedGraph(2, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(OrientedGraph(2, {{1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(OrientedGraph(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(OrientedGraph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(OrientedGraph(65, {}), std::invalid_argument);
}

TEST_CASE("induced subgraph restricts both endpoints") {
  const auto g = path3();
  CHECK(induced_subgraph(g, vs({1, 3})).arrows().empty());
  CHECK(induced_subgraph(g, vs({1, 2})).arrows() ==
        std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(induced_subgraph(g, VertexSet{}).vertices().empty());
  CHECK_FALSE(induced_subgraph(g, vs({1, 3})).arrow(1, 2));
}

TEST_CASE("acyclicity matches a depth-first oracle on every small graph") {
  const auto g3 = cycle3();
  CHECK_FALSE(is_acyclic(g3, vs({1, 2, 3})));
  CHECK(is_acyclic(g3, vs({1, 2})));
  CHECK(is_acyclic(g3, VertexSet{}));

  for (const auto& g : verify::all_graphs(3)) {
    for (std::uint64_t m = 0; m < 8; ++m) {
      const auto x = VertexSet::from_mask(m);
      CHECK(is_acyclic(g, x) == !oracle::has_cycle(g, x));
    }
  }
}

TEST_CASE("topological order puts targets before sources") {
  const auto g = path3();
  CHECK(topological_order(g, vs({1, 2, 3})) == std::vector<int>{3, 2, 1});
  CHECK(topological_order(g, vs({1, 3})) == std::vector<int>{1, 3});
  CHECK(topological_order(g, VertexSet{}).empty());
  CHECK_THROWS_AS(topological_order(cycle3(), vs({1, 2, 3})),
                  std::invalid_argument);

  // Succeeds exactly on acyclic sets, and the pairwise constraint holds.
  for (const auto& g3 : verify::all_graphs(3)) {
    for (std::uint64_t m = 0; m < 8; ++m) {
      const auto x = VertexSet::from_mask(m);
      if (!is_acyclic(g3, x)) {
        CHECK_THROWS_AS(topological_order(g3, x), std::invalid_argument);
        continue;
      }
      const auto order = topological_order(g3, x);
      CHECK(order.size() == static_cast<std::size_t>(x.size()));
      for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = 0; b < order.size(); ++b) {
          if (g3.arrow(order[a], order[b])) CHECK(a > b);
        }
      }
    }
  }
}

TEST_CASE("acyclic subsets: counts, order, downward closure") {
  const auto path_subsets = acyclic_subsets(path3());
  CHECK(path_subsets.size() == 8);
  CHECK(path_subsets ==
        std::vector<VertexSet>{VertexSet{}, vs({1}), vs({2}), vs({3}),
                               vs({1, 2}), vs({1, 3}), vs({2, 3}),
                               vs({1, 2, 3})});

  const auto cycle_subsets = acyclic_subsets(cycle3());
  CHECK(cycle_subsets.size() == 7);
  CHECK(std::find(cycle_subsets.begin(), cycle_subsets.end(), vs({1, 2, 3})) ==
        cycle_subsets.end());

  const OrientedGraph one(1, {});
  CHECK(acyclic_subsets(one) ==
        std::vector<VertexSet>{VertexSet{}, vs({1})});

  for (const auto& g : verify::all_graphs(3)) {
    const auto family = acyclic_subsets(g);
    for (VertexSet x : family) {
      for (std::uint64_t sub = x.mask();; sub = (sub - 1) & x.mask()) {
        CHECK(std::find(family.begin(), family.end(),
                        VertexSet::from_mask(sub)) != family.end());
        if (sub == 0) break;
      }
    }
  }
}

TEST_CASE("reachability agrees with transitive closure") {
  const auto g = path3();
  CHECK(reachable(g, vs({1}), vs({1, 2, 3})) == vs({1, 2, 3}));
  CHECK(reachable(g, vs({3}), vs({1, 2, 3})) == vs({3}));
  CHECK(reachable(g, VertexSet{}, vs({1, 2})).empty());
  CHECK_THROWS_AS(reachable(g, vs({3}), vs({1, 2})), std::invalid_argument);

  for (const auto& g3 : verify::all_graphs(3)) {
    for (std::uint64_t wm = 0; wm < 8; ++wm) {
      const auto within = VertexSet::from_mask(wm);
      for (std::uint64_t sm = wm;; sm = (sm - 1) & wm) {
        const auto sources = VertexSet::from_mask(sm);
        const auto got = reachable(g3, sources, within);
        CHECK(got == oracle::reach(g3, sources, within));
        CHECK(sources.subset_of(got));  // zero-length paths
        if (sm == 0) break;
      }
    }
  }
}

TEST_CASE("reachability is monotone in sources and search set") {
  for (const auto& g : verify::all_graphs(3)) {
    const auto full = g.vertices();
    for (std::uint64_t sm = 0; sm < 8; ++sm) {
      const auto s = VertexSet::from_mask(sm);
      for (std::uint64_t tm = 0; tm < 8; ++tm) {
        const auto t = VertexSet::from_mask(tm);
        if (!s.subset_of(t)) continue;
        CHECK(reachable(g, s, full).subset_of(reachable(g, t, full)));
        CHECK(reachable(g, s, s | t).subset_of(reachable(g, s, full)));
      }
    }
  }
}

TEST_CASE("predicate p: examples, reflexivity, asymmetry witness") {
  const auto g = path3();
  CHECK(predicate_p(g, vs({1}), vs({3})));
  CHECK(predicate_p(g, vs({3}), vs({1})));  // vertex 2 outside X u Y
  CHECK_FALSE(predicate_p(g, vs({2}), vs({1, 3})));
  CHECK(predicate_p(g, vs({2}), vs({2})));
  // Not symmetric: the path graph separates the two orders.
  CHECK_FALSE(predicate_p(g, vs({2}), vs({1})));
  CHECK(predicate_p(g, vs({1}), vs({2})));
}

TEST_CASE("predicate p equals the chain form on every small graph") {
  for (const auto& g : verify::all_graphs(3)) {
    for (std::uint64_t mx = 0; mx < 8; ++mx) {
      for (std::uint64_t my = 0; my < 8; ++my) {
        const auto x = VertexSet::from_mask(mx);
        const auto y = VertexSet::from_mask(my);
        CHECK(predicate_p(g, x, y) == oracle::p_chain(g, x, y));
        CHECK(predicate_p(g, x, x));
      }
    }
  }
}

TEST_CASE("automorphisms of the named graphs") {
  const auto rotations = automorphisms(cycle3());
  CHECK(rotations == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 1},
                                                   {3, 1, 2}});
  CHECK(automorphisms(OrientedGraph(2, {})).size() == 2);
  CHECK(automorphisms(OrientedGraph(1, {})).size() == 1);
  CHECK(automorphisms(path3()) == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK_THROWS_AS(automorphisms(OrientedGraph(9, {})), std::invalid_argument);
}

TEST_CASE("set parsing and formatting") {
  CHECK(format_set(vs({1, 3})) == "{1,3}");
  CHECK(format_set(VertexSet{}) == "{}");
  CHECK(parse_set("1,3", 3) == vs({1, 3}));
  CHECK(parse_set("-", 3).empty());
  CHECK(parse_set(" 2 ", 3) == vs({2}));
  CHECK_THROWS_AS(parse_set("0", 3), ParseError);
  CHECK_THROWS_AS(parse_set("4", 3), ParseError);
  CHECK_THROWS_AS(parse_set("1,,2", 3), ParseError);
  CHECK_THROWS_AS(parse_set("abc", 3), ParseError);
}

TEST_CASE("acyclic subset scan refuses oversized graphs") {
  CHECK_THROWS_AS(acyclic_subsets(OrientedGraph(21, {})), std::invalid_argument);
}

}  // TEST_SUITE("graph")
