#include "hk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

namespace {

void check_vertex(int n, int v, const char* what) {
  if (v < 1 || v > n) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                " out of range [1, " + std::to_string(n) + "]");
  }
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool to_int(const std::string& s, int& value) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

OrientedGraph::OrientedGraph(int n, const std::vector<std::pair<int, int>>& arrows)
    : n_(n), out_(static_cast<std::size_t>(n)), in_(static_cast<std::size_t>(n)) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("vertex count must be in [1, 64], got " +
                                std::to_string(n));
  }
  for (auto [u, v] : arrows) {
    check_vertex(n, u, "vertex");
    check_vertex(n, v, "vertex");
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (out_[v - 1].contains(u)) {
      throw std::invalid_argument("2-cycle between " + std::to_string(u) +
                                  " and " + std::to_string(v));
    }
    if (out_[u - 1].contains(v)) {
      throw std::invalid_argument("duplicate arrow " + std::to_string(u) +
                                  " -> " + std::to_string(v));
    }
    out_[u - 1] |= VertexSet::single(v);
    in_[v - 1] |= VertexSet::single(u);
  }
}

OrientedGraph OrientedGraph::parse(std::string_view text) {
  int n = 0;
  bool have_n = false;
  std::vector<std::pair<int, int>> arrows;
  std::vector<VertexSet> seen_out;

  std::istringstream stream{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto toks = tokens(raw);
    if (toks.empty()) continue;

    if (!have_n) {
      int count = 0;
      if (toks.size() != 2 || toks[0] != "n" || !to_int(toks[1], count)) {
        throw ParseError(lineno, "expected 'n <count>', got '" + raw + "'");
      }
      if (count < 1 || count > 64) {
        throw ParseError(lineno, "vertex count must be in [1, 64]");
      }
      n = count;
      have_n = true;
      seen_out.assign(static_cast<std::size_t>(n), VertexSet{});
      continue;
    }

    int u = 0, v = 0;
    if (toks.size() != 2 || !to_int(toks[0], u) || !to_int(toks[1], v)) {
      throw ParseError(lineno, "expected '<u> <v>', got '" + raw + "'");
    }
    if (u < 1 || u > n) {
      throw ParseError(lineno, "vertex " + std::to_string(u) + " out of range");
    }
    if (v < 1 || v > n) {
      throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
    }
    if (u == v) {
      throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    }
    if (seen_out[static_cast<std::size_t>(v) - 1].contains(u)) {
      throw ParseError(lineno, "2-cycle between " + std::to_string(u) + " and " +
                                   std::to_string(v));
    }
    if (seen_out[static_cast<std::size_t>(u) - 1].contains(v)) {
      throw ParseError(lineno, "duplicate arrow " + std::to_string(u) + " -> " +
                                   std::to_string(v));
    }
    seen_out[static_cast<std::size_t>(u) - 1] |= VertexSet::single(v);
    arrows.emplace_back(u, v);
  }
  if (!have_n) throw ParseError(lineno, "missing 'n <count>' line");
  return OrientedGraph(n, arrows);
}

std::string OrientedGraph::serialize() const {
  std::ostringstream out;
  out << "n " << n_ << "\n";
  for (auto [u, v] : arrows()) out << u << " " << v << "\n";
  return out.str();
}

std::size_t OrientedGraph::arrow_count() const {
  std::size_t total = 0;
  for (const auto& s : out_) total += static_cast<std::size_t>(s.size());
  return total;
}

std::vector<std::pair<int, int>> OrientedGraph::arrows() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(arrow_count());
  for (int u = 1; u <= n_; ++u) {
    for (int v : out_[static_cast<std::size_t>(u) - 1].elements()) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> InducedSubgraph::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int u : x_.elements()) {
    for (int v : (g_->out(u) & x_).elements()) out.emplace_back(u, v);
  }
  return out;
}

bool is_acyclic(const OrientedGraph& g, VertexSet x) {
  // Peel sinks of the induced subgraph; a cycle is exactly what survives.
  VertexSet remaining = x;
  bool progressed = true;
  while (!remaining.empty() && progressed) {
    progressed = false;
    for (int v : remaining.elements()) {
      if ((g.out(v) & remaining).empty()) {
        remaining = remaining.without(v);
        progressed = true;
      }
    }
  }
  return remaining.empty();
}

std::vector<int> topological_order(const OrientedGraph& g, VertexSet x) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(x.size()));
  VertexSet remaining = x;
  while (!remaining.empty()) {
    int pick = 0;
    for (int v : remaining.elements()) {
      if ((g.out(v) & remaining).empty()) {
        pick = v;  // elements() ascends, so the first sink is the smallest
        break;
      }
    }
    if (pick == 0) {
      throw std::invalid_argument("vertex set " + format_set(x) +
                                  " induces a directed cycle");
    }
    order.push_back(pick);
    remaining = remaining.without(pick);
  }
  return order;
}

std::vector<VertexSet> acyclic_subsets(const OrientedGraph& g) {
  const int n = g.vertex_count();
  if (n > 20) {
    throw std::invalid_argument(
        "acyclic_subsets scans all 2^n subsets; refusing n = " +
        std::to_string(n) + " (limit 20)");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> acyclic(total, 0);
  acyclic[0] = 1;

  for (std::uint64_t m = 1; m < total; ++m) {
    // Downward closure: every one-element-removed subset must already be
    // acyclic, otherwise m cannot be.
    bool candidate = true;
    for (std::uint64_t b = m; b != 0; b &= b - 1) {
      if (!acyclic[m & ~(b & (~b + 1))]) {
        candidate = false;
        break;
      }
    }
    if (candidate && is_acyclic(g, VertexSet::from_mask(m))) acyclic[m] = 1;
  }

  std::vector<std::vector<std::uint64_t>> buckets(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t m = 0; m < total; ++m) {
    if (acyclic[m]) {
      buckets[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    }
  }
  std::vector<VertexSet> out;
  for (const auto& bucket : buckets) {
    for (std::uint64_t m : bucket) out.push_back(VertexSet::from_mask(m));
  }
  return out;
}

VertexSet reachable(const OrientedGraph& g, VertexSet sources, VertexSet within) {
  if (!sources.subset_of(within)) {
    throw std::invalid_argument("reachable: sources must lie within the search set");
  }
  VertexSet result = sources;
  VertexSet frontier = sources;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.elements()) next |= g.out(v);
    next = (next & within) - result;
    result |= next;
    frontier = next;
  }
  return result;
}

bool predicate_p(const OrientedGraph& g, VertexSet x, VertexSet y) {
  return (reachable(g, y - x, x | y) & (x - y)).empty();
}

std::vector<std::vector<int>> automorphisms(const OrientedGraph& g) {
  const int n = g.vertex_count();
  if (n > 8) {
    throw std::invalid_argument("automorphism search is brute force; refusing n = " +
                                std::to_string(n) + " (limit 8)");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 1; u <= n && ok; ++u) {
      for (int v = 1; v <= n && ok; ++v) {
        if (u == v) continue;
        if (g.arrow(u, v) !=
            g.arrow(perm[static_cast<std::size_t>(u) - 1],
                    perm[static_cast<std::size_t>(v) - 1])) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace hk
