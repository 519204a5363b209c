#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hk/graph.hpp"
#include "hk/vertex_set.hpp"

namespace hk {

// A word of the free monoid over the generator alphabet: a sequence of
// vertex indices.  The empty word is the unit.
using Word = std::vector<int>;

// Hard cap on the length of any word the rewriting engine will build.  The
// monoid is infinite whenever the graph has an oriented cycle, so unbounded
// inputs must fail loudly instead of hanging.
inline constexpr std::size_t kMaxWordLen = 10'000;

// Set of letters occurring in w.  Invariant under the defining relations,
// so this is also the content of the monoid element w represents.
VertexSet content(const Word& w);

enum class CancelKind { Right, Left };

// A decomposition w = w1 . a . u . a . w2, identified by the indices of the
// two occurrences of a.  Right removes the second occurrence (allowed when
// no letter of u has an arrow to a); Left removes the first (allowed when
// no letter of u has an arrow from a).
struct Cancellation {
  CancelKind kind;
  std::size_t first;
  std::size_t second;

  bool operator==(const Cancellation&) const = default;
};

// All applicable elementary cancellations of w, ordered by position of the
// first occurrence, then by gap length, with Right before Left.
std::vector<Cancellation> cancellation_candidates(const OrientedGraph& g,
                                                  const Word& w);

Word apply_cancellation(const Word& w, const Cancellation& c);

// A word on which no elementary cancellation applies.  Only produced by the
// normalizers.
struct NormalFormWord {
  Word word;
};

// Applies the first applicable cancellation until none applies.  Each step
// removes one letter and preserves the represented element, so the result
// is a normal form of the same element.
NormalFormWord normalize(const OrientedGraph& g, Word w);

// Same contract, but each step applies a uniformly random applicable
// cancellation drawn from the seeded generator.  Any maximal strategy lands
// in the same commutation class.
NormalFormWord normalize_randomized(const OrientedGraph& g, Word w,
                                    std::uint64_t seed);

// Lexicographically least word obtainable from w by swapping adjacent
// disconnected letters.  Two words are related by such swaps iff their
// canonical forms are equal.
Word trace_canonical(const OrientedGraph& g, Word w);

// Decides equality of the represented monoid elements: normalize both, then
// compare commutation classes via trace_canonical.
bool hk_equal(const OrientedGraph& g, const Word& a, const Word& b);

// True iff w . w equals w in the monoid.  Throws std::length_error when the
// doubled word exceeds max_len.
bool is_idempotent_word(const OrientedGraph& g, const Word& w,
                        std::size_t max_len = kMaxWordLen);

// True iff u embeds in w as a subsequence.
bool is_quasi_subword(const Word& u, const Word& w);

// Canonical representatives of every monoid element expressible by a word
// of length <= max_len, ordered by (length, lexicographic).  Brute-force
// test oracle; guarded to n <= 4 and max_len <= 8.
std::vector<Word> bounded_elements(const OrientedGraph& g, int max_len);

// Whitespace- or comma-separated vertex indices; empty input is the unit.
Word parse_word(std::string_view text, int n, std::size_t max_len = kMaxWordLen);

// Single-space-separated indices; empty string for the unit.
std::string format_word(const Word& w);

}  // namespace hk
