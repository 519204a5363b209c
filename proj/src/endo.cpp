#include "hk/endo.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

namespace {

// Shared state for the tuple scan over A_Theta^n: supports sorted by mask,
// the precomputed p-table over all support pairs, and which ordered vertex
// pairs (i, j) demand p(X_i, X_j).
struct EnumContext {
  explicit EnumContext(const OrientedGraph& g)
      : n(g.vertex_count()), supports(acyclic_subsets(g)) {
    std::sort(supports.begin(), supports.end());  // ascending mask
    const std::size_t m = supports.size();
    p_table.assign(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        p_table[a][b] = predicate_p(g, supports[a], supports[b]) ? 1 : 0;
      }
    }
    requires_p.assign(static_cast<std::size_t>(n),
                      std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        if (g.arrow(i, j) || g.disconnected(i, j)) {
          requires_p[static_cast<std::size_t>(i) - 1]
                    [static_cast<std::size_t>(j) - 1] = 1;
        }
      }
    }
  }

  bool prefix_ok(const std::vector<std::size_t>& chosen, std::size_t depth,
                 std::size_t candidate) const {
    for (std::size_t j = 0; j < depth; ++j) {
      if (requires_p[depth][j] && !p_table[candidate][chosen[j]]) return false;
      if (requires_p[j][depth] && !p_table[chosen[j]][candidate]) return false;
    }
    return true;
  }

  int n;
  std::vector<VertexSet> supports;
  std::vector<std::vector<char>> p_table;
  std::vector<std::vector<char>> requires_p;
};

// Depth-first scan in lexicographic (mask of X_1, ..., mask of X_n) order.
// Emit receives the chosen support indices of each full pure tuple.
// Returns false when the node cap was hit.
template <typename Emit>
bool scan(const EnumContext& ctx, std::uint64_t node_cap, std::uint64_t& nodes,
          std::vector<std::size_t>& chosen, std::size_t depth, Emit&& emit) {
  for (std::size_t c = 0; c < ctx.supports.size(); ++c) {
    if (++nodes > node_cap) return false;
    if (!ctx.prefix_ok(chosen, depth, c)) continue;
    chosen[depth] = c;
    if (depth + 1 == static_cast<std::size_t>(ctx.n)) {
      emit(chosen);
    } else if (!scan(ctx, node_cap, nodes, chosen, depth + 1, emit)) {
      return false;
    }
  }
  return true;
}

// |A_Theta|^n, saturating at UINT64_MAX.
std::uint64_t tuple_space(std::size_t base, int n, bool& saturated) {
  saturated = false;
  std::uint64_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (base != 0 &&
        result > std::numeric_limits<std::uint64_t>::max() / base) {
      saturated = true;
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

SetSequence materialize(const EnumContext& ctx,
                        const std::vector<std::size_t>& chosen) {
  SetSequence seq;
  seq.sets.reserve(chosen.size());
  for (std::size_t c : chosen) seq.sets.push_back(ctx.supports[c]);
  return seq;
}

}  // namespace

bool SetSequence::operator<(const SetSequence& o) const {
  return std::lexicographical_compare(sets.begin(), sets.end(), o.sets.begin(),
                                      o.sets.end());
}

SetSequence unit_sequence(int n) {
  SetSequence seq;
  seq.sets.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) seq.sets.push_back(VertexSet::single(i));
  return seq;
}

bool is_pure(const OrientedGraph& g, const SetSequence& seq) {
  const int n = g.vertex_count();
  if (seq.size() != n) {
    throw std::invalid_argument("sequence length " + std::to_string(seq.size()) +
                                " does not match vertex count " +
                                std::to_string(n));
  }
  for (int i = 1; i <= n; ++i) {
    if (!is_acyclic(g, seq[i])) return false;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if ((g.arrow(i, j) || g.disconnected(i, j)) &&
          !predicate_p(g, seq[i], seq[j])) {
        return false;
      }
    }
  }
  return true;
}

SetSequence star(const SetSequence& x, const SetSequence& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("sequence lengths differ: " +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  }
  SetSequence z;
  z.sets.reserve(x.sets.size());
  for (int i = 1; i <= x.size(); ++i) {
    VertexSet zi;
    for (int j : y[i].elements()) zi |= x[j];
    z.sets.push_back(zi);
  }
  return z;
}

BoolMatrix::BoolMatrix(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("matrix dimension must be in [1, 64], got " +
                                std::to_string(n));
  }
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n);
  for (int i = 1; i <= n; ++i) m.set(i, i, true);
  return m;
}

void BoolMatrix::check_index(int i) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("matrix index " + std::to_string(i) +
                            " out of range [1, " + std::to_string(n_) + "]");
  }
}

void BoolMatrix::set(int row, int col, bool value) {
  check_index(row);
  check_index(col);
  const std::uint64_t bit = std::uint64_t{1} << (col - 1);
  auto& r = rows_[static_cast<std::size_t>(row) - 1];
  r = value ? (r | bit) : (r & ~bit);
}

BoolMatrix psi(const SetSequence& seq) {
  BoolMatrix m(seq.size());
  for (int i = 1; i <= seq.size(); ++i) {
    for (int x : seq[i].elements()) m.set(x, i, true);
  }
  return m;
}

BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix dimensions differ: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
  BoolMatrix c(a.dim());
  for (int i = 1; i <= a.dim(); ++i) {
    std::uint64_t acc = 0;
    for (int k : VertexSet::from_mask(a.row_mask(i)).elements()) {
      acc |= b.row_mask(k);
    }
    for (int j : VertexSet::from_mask(acc).elements()) c.set(i, j, true);
  }
  return c;
}

SetSequence phi_from_images(const OrientedGraph& g,
                            const std::vector<Word>& images,
                            std::size_t max_len) {
  if (images.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("expected " +
                                std::to_string(g.vertex_count()) +
                                " generator images, got " +
                                std::to_string(images.size()));
  }
  SetSequence seq;
  seq.sets.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!is_idempotent_word(g, images[i], max_len)) {
      throw std::invalid_argument("image of generator " + std::to_string(i + 1) +
                                  " is not idempotent");
    }
    seq.sets.push_back(content(images[i]));
  }
  if (!is_pure(g, seq)) {
    throw std::invalid_argument(
        "content sequence " + format_sequence(seq) +
        " is not pure; no endomorphism has these images");
  }
  return seq;
}

Word apply_endomorphism(const OrientedGraph& g, const SetSequence& seq,
                        const Word& w, std::size_t max_len) {
  Word substituted;
  for (int letter : w) {
    if (letter < 1 || letter > seq.size()) {
      throw std::invalid_argument("letter " + std::to_string(letter) +
                                  " out of range");
    }
    const Word piece = idempotent_word(g, seq[letter]).word;
    if (substituted.size() + piece.size() > max_len) {
      throw std::length_error("substituted word exceeds length cap " +
                              std::to_string(max_len));
    }
    substituted.insert(substituted.end(), piece.begin(), piece.end());
  }
  return trace_canonical(g, normalize(g, substituted).word);
}

std::vector<SetSequence> enumerate_endomorphisms(const OrientedGraph& g,
                                                 std::uint64_t budget) {
  const EnumContext ctx(g);
  bool saturated = false;
  const std::uint64_t space = tuple_space(ctx.supports.size(), ctx.n, saturated);
  if (saturated || space > budget) {
    throw BudgetError(space, budget, saturated);
  }
  std::vector<SetSequence> out;
  std::vector<std::size_t> chosen(static_cast<std::size_t>(ctx.n), 0);
  std::uint64_t nodes = 0;
  scan(ctx, std::numeric_limits<std::uint64_t>::max(), nodes, chosen, 0,
       [&](const std::vector<std::size_t>& c) { out.push_back(materialize(ctx, c)); });
  return out;
}

std::uint64_t count_endomorphisms(const OrientedGraph& g) {
  const EnumContext ctx(g);
  std::uint64_t found = 0;
  std::vector<std::size_t> chosen(static_cast<std::size_t>(ctx.n), 0);
  std::uint64_t nodes = 0;
  scan(ctx, std::numeric_limits<std::uint64_t>::max(), nodes, chosen, 0,
       [&](const std::vector<std::size_t>&) { ++found; });
  return found;
}

EnumStats scan_endomorphisms(const OrientedGraph& g, std::uint64_t node_cap) {
  const EnumContext ctx(g);
  EnumStats stats;
  std::vector<std::size_t> chosen(static_cast<std::size_t>(ctx.n), 0);
  stats.complete = scan(ctx, node_cap, stats.nodes, chosen, 0,
                        [&](const std::vector<std::size_t>&) { ++stats.found; });
  if (stats.nodes > node_cap) stats.nodes = node_cap;
  return stats;
}

bool verify_extends(const OrientedGraph& g, const SetSequence& seq) {
  const int n = g.vertex_count();
  if (seq.size() != n) {
    throw std::invalid_argument("sequence length does not match vertex count");
  }
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    words.push_back(idempotent_word(g, seq[i]).word);
  }
  auto cat = [](std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
  };
  // Generator idempotency x_i x_i = x_i.
  for (int i = 1; i <= n; ++i) {
    const Word& wi = words[static_cast<std::size_t>(i) - 1];
    if (!hk_equal(g, cat({&wi, &wi}), wi)) return false;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Word& wi = words[static_cast<std::size_t>(i) - 1];
      const Word& wj = words[static_cast<std::size_t>(j) - 1];
      if (g.disconnected(i, j)) {
        if (!hk_equal(g, cat({&wi, &wj}), cat({&wj, &wi}))) return false;
      } else {
        const Word& ws = g.arrow(i, j) ? wi : wj;  // source of the arrow
        const Word& wt = g.arrow(i, j) ? wj : wi;
        const Word st = cat({&ws, &wt});
        if (!hk_equal(g, cat({&ws, &wt, &ws}), st)) return false;
        if (!hk_equal(g, cat({&wt, &ws, &wt}), st)) return false;
      }
    }
  }
  return true;
}

std::uint64_t unit_group_size(const OrientedGraph& g, std::uint64_t budget) {
  const auto pure = enumerate_endomorphisms(g, budget);
  const SetSequence unit = unit_sequence(g.vertex_count());
  std::uint64_t units = 0;
  for (const auto& u : pure) {
    for (const auto& v : pure) {
      if (star(u, v) == unit && star(v, u) == unit) {
        ++units;
        break;
      }
    }
  }
  return units;
}

std::string format_sequence(const SetSequence& seq) {
  std::ostringstream out;
  for (int i = 1; i <= seq.size(); ++i) {
    if (i > 1) out << "; ";
    if (seq[i].empty()) {
      out << "-";
    } else {
      const auto members = seq[i].elements();
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (k > 0) out << ",";
        out << members[k];
      }
    }
  }
  return out.str();
}

SetSequence parse_sequence(std::string_view text, int n) {
  SetSequence seq;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string_view item = text.substr(
        start,
        semi == std::string_view::npos ? std::string_view::npos : semi - start);
    seq.sets.push_back(parse_set(item, n));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (seq.size() != n) {
    throw ParseError(0, "expected " + std::to_string(n) + " sets, got " +
                            std::to_string(seq.size()));
  }
  return seq;
}

std::string format_matrix(const BoolMatrix& m) {
  std::ostringstream out;
  for (int r = 1; r <= m.dim(); ++r) {
    for (int c = 1; c <= m.dim(); ++c) {
      if (c > 1) out << " ";
      out << (m.get(r, c) ? 1 : 0);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hk
