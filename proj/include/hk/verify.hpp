#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hk/graph.hpp"

namespace hk::verify {

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::uint64_t checks = 0;
  std::string detail;          // summary counts, e.g. "graphs=27 pairs=1296"
  std::string counterexample;  // replayable graph/word text when failed
};

// Every labeled simple oriented graph on exactly n vertices: each unordered
// vertex pair is independently absent, forward, or backward, giving
// 3^(n choose 2) graphs.  Guarded to n <= 5.
std::vector<OrientedGraph> all_graphs(int n);

// Per pair of acyclic supports: the path predicate, the rewriting oracle,
// and the triple identities must tell one story, and on agreement the
// product must collapse to the union idempotent.
SuiteReport theorem_p(const std::vector<OrientedGraph>& graphs);

// Kiselman cross-check at n = 1..max_n over all subset pairs: the order
// condition, the path predicate, and the rewriting oracle agree; agreeing
// products collapse to the union; the canonical words coincide letter for
// letter; and (n <= 4) the combine law holds for every pair.
SuiteReport prop14(int max_n);

// How sequence pairs are drawn from the enumerated endomorphism monoid:
// the full square when it has at most exhaustive_limit pairs, otherwise
// random_pairs seeded draws.
struct PairSampling {
  std::uint64_t exhaustive_limit = 10'000;
  int random_pairs = 200;
  std::uint64_t seed = 0;
};

// Composition law and matrix encoding: contents of composed generator
// images match the * product, recovering the sequence from those images
// works, and psi turns * into the Boolean matrix product.
SuiteReport phi_psi(const std::vector<OrientedGraph>& graphs, PairSampling s);

// The enumerated set is closed under * and contains the unit sequence.
SuiteReport closure(const std::vector<OrientedGraph>& graphs, PairSampling s);

// Invertible pure sequences are exactly the graph automorphisms (counted).
SuiteReport units(const std::vector<OrientedGraph>& graphs);

// Randomized and deterministic normalization land in the same commutation
// class, over seeded random words of length <= max_word_len.
SuiteReport confluence(const std::vector<OrientedGraph>& graphs,
                       int words_per_graph, int max_word_len,
                       std::uint64_t seed);

}  // namespace hk::verify
