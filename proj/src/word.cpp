#include "hk/word.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

namespace {

void check_letters(const OrientedGraph& g, const Word& w) {
  for (int a : w) {
    if (a < 1 || a > g.vertex_count()) {
      throw std::invalid_argument("letter " + std::to_string(a) +
                                  " out of range [1, " +
                                  std::to_string(g.vertex_count()) + "]");
    }
  }
}

// First cancellation in candidate order, without materializing the list.
std::optional<Cancellation> first_cancellation(const OrientedGraph& g,
                                               const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int a = w[i];
    const std::uint64_t into_a = g.in(a).mask();
    const std::uint64_t from_a = g.out(a).mask();
    std::uint64_t gap = 0;  // letters strictly between the two occurrences
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] == a) {
        if ((gap & into_a) == 0) return Cancellation{CancelKind::Right, i, j};
        if ((gap & from_a) == 0) return Cancellation{CancelKind::Left, i, j};
      }
      gap |= VertexSet::single(w[j]).mask();
      if ((gap & into_a) != 0 && (gap & from_a) != 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace

VertexSet content(const Word& w) {
  VertexSet out;
  for (int a : w) {
    if (a < 1 || a > 64) {
      throw std::invalid_argument("letter " + std::to_string(a) +
                                  " out of range [1, 64]");
    }
    out |= VertexSet::single(a);
  }
  return out;
}

std::vector<Cancellation> cancellation_candidates(const OrientedGraph& g,
                                                  const Word& w) {
  check_letters(g, w);
  std::vector<Cancellation> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int a = w[i];
    const std::uint64_t into_a = g.in(a).mask();
    const std::uint64_t from_a = g.out(a).mask();
    std::uint64_t gap = 0;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] == a) {
        if ((gap & into_a) == 0) out.push_back({CancelKind::Right, i, j});
        if ((gap & from_a) == 0) out.push_back({CancelKind::Left, i, j});
      }
      gap |= VertexSet::single(w[j]).mask();
      if ((gap & into_a) != 0 && (gap & from_a) != 0) break;
    }
  }
  return out;
}

Word apply_cancellation(const Word& w, const Cancellation& c) {
  Word out = w;
  out.erase(out.begin() +
            static_cast<Word::difference_type>(
                c.kind == CancelKind::Right ? c.second : c.first));
  return out;
}

NormalFormWord normalize(const OrientedGraph& g, Word w) {
  check_letters(g, w);
  while (auto c = first_cancellation(g, w)) {
    w.erase(w.begin() +
            static_cast<Word::difference_type>(
                c->kind == CancelKind::Right ? c->second : c->first));
  }
  return {std::move(w)};
}

NormalFormWord normalize_randomized(const OrientedGraph& g, Word w,
                                    std::uint64_t seed) {
  check_letters(g, w);
  std::mt19937_64 rng(seed);
  for (;;) {
    auto candidates = cancellation_candidates(g, w);
    if (candidates.empty()) break;
    // Plain modulo keeps the choice identical across standard libraries.
    w = apply_cancellation(w, candidates[rng() % candidates.size()]);
  }
  return {std::move(w)};
}

Word trace_canonical(const OrientedGraph& g, Word w) {
  check_letters(g, w);
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    // A letter can be commuted to the front iff everything before its first
    // occurrence is disconnected from it.  Scanning letter values upward
    // picks the lexicographically least such choice.
    int pick = 0;
    std::size_t pick_pos = 0;
    for (int v = 1; v <= g.vertex_count() && pick == 0; ++v) {
      std::size_t pos = 0;
      while (pos < w.size() && w[pos] != v) ++pos;
      if (pos == w.size()) continue;
      bool movable = true;
      for (std::size_t k = 0; k < pos; ++k) {
        if (!g.disconnected(w[k], v)) {
          movable = false;
          break;
        }
      }
      if (movable) {
        pick = v;
        pick_pos = pos;
      }
    }
    assert(pick != 0);  // w[0] always qualifies
    out.push_back(pick);
    w.erase(w.begin() + static_cast<Word::difference_type>(pick_pos));
  }
  return out;
}

bool hk_equal(const OrientedGraph& g, const Word& a, const Word& b) {
  return trace_canonical(g, normalize(g, a).word) ==
         trace_canonical(g, normalize(g, b).word);
}

bool is_idempotent_word(const OrientedGraph& g, const Word& w,
                        std::size_t max_len) {
  if (2 * w.size() > max_len) {
    throw std::length_error("doubled word has length " +
                            std::to_string(2 * w.size()) + ", exceeding cap " +
                            std::to_string(max_len));
  }
  Word doubled = w;
  doubled.insert(doubled.end(), w.begin(), w.end());
  return hk_equal(g, doubled, w);
}

bool is_quasi_subword(const Word& u, const Word& w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < u.size(); ++j) {
    if (w[j] == u[i]) ++i;
  }
  return i == u.size();
}

std::vector<Word> bounded_elements(const OrientedGraph& g, int max_len) {
  const int n = g.vertex_count();
  if (n > 4 || max_len > 8 || max_len < 0) {
    throw std::invalid_argument(
        "bounded_elements is a brute-force oracle; requires n <= 4 and "
        "max_len in [0, 8]");
  }
  auto len_lex = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::set<Word, decltype(len_lex)> seen(len_lex);
  seen.insert(Word{});
  Word w;
  for (int len = 1; len <= max_len; ++len) {
    w.assign(static_cast<std::size_t>(len), 1);
    for (;;) {
      seen.insert(trace_canonical(g, normalize(g, w).word));
      // Odometer over [1, n]^len.
      int pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
        w[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }
  return {seen.begin(), seen.end()};
}

Word parse_word(std::string_view text, int n, std::size_t max_len) {
  Word out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    int v = 0;
    auto [ptr, ec] = std::from_chars(cur.data(), cur.data() + cur.size(), v);
    if (ec != std::errc{} || ptr != cur.data() + cur.size()) {
      throw ParseError(0, "bad letter '" + cur + "'");
    }
    if (v < 1 || v > n) {
      throw ParseError(0, "letter " + std::to_string(v) + " out of range [1, " +
                              std::to_string(n) + "]");
    }
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  if (out.size() > max_len) {
    throw ParseError(0, "word has length " + std::to_string(out.size()) +
                            ", exceeding cap " + std::to_string(max_len));
  }
  return out;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out << " ";
    out << w[i];
  }
  return out.str();
}

}  // namespace hk
