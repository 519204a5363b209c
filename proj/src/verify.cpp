#include "hk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hk/endo.hpp"
#include "hk/idempotent.hpp"
#include "hk/kiselman.hpp"
#include "hk/word.hpp"

namespace hk::verify {

namespace {

constexpr std::uint64_t kSeedMix = 0x9E3779B97F4A7C15ULL;

struct GraphOutcome {
  std::uint64_t checks = 0;
  bool ok = true;
  std::string counterexample;
};

std::string pair_case(const OrientedGraph& g, VertexSet x, VertexSet y) {
  std::ostringstream out;
  out << "graph:\n" << g.serialize() << "X = " << format_set(x)
      << " Y = " << format_set(y) << "\n";
  return out.str();
}

// Runs fn over every graph on a small worker pool; outcomes land in index
// order so aggregation is deterministic regardless of scheduling.
template <typename Fn>
std::vector<GraphOutcome> per_graph(const std::vector<OrientedGraph>& graphs,
                                    Fn&& fn) {
  std::vector<GraphOutcome> out(graphs.size());
  const std::size_t workers =
      std::min<std::size_t>(graphs.size(),
                            std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) {
        try {
          out[i] = fn(graphs[i], i);
        } catch (const std::exception& e) {
          out[i].ok = false;
          out[i].counterexample =
              std::string(e.what()) + "\ngraph:\n" + graphs[i].serialize();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

SuiteReport fold(std::string suite, const std::vector<GraphOutcome>& outcomes,
                 std::size_t graph_count) {
  SuiteReport report;
  report.suite = std::move(suite);
  for (const auto& o : outcomes) {
    report.checks += o.checks;
    if (!o.ok && report.pass) {
      report.pass = false;
      report.counterexample = o.counterexample;
    }
  }
  std::ostringstream detail;
  detail << "graphs=" << graph_count << " checks=" << report.checks;
  report.detail = detail.str();
  return report;
}

}  // namespace

std::vector<OrientedGraph> all_graphs(int n) {
  if (n < 1 || n > 5) {
    throw std::invalid_argument(
        "all_graphs enumerates 3^(n choose 2) graphs; requires n in [1, 5]");
  }
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;

  std::vector<OrientedGraph> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::pair<int, int>> arrows;
    std::uint64_t rest = code;
    for (auto [u, v] : slots) {
      switch (rest % 3) {
        case 1: arrows.emplace_back(u, v); break;
        case 2: arrows.emplace_back(v, u); break;
        default: break;
      }
      rest /= 3;
    }
    out.emplace_back(n, arrows);
  }
  return out;
}

SuiteReport theorem_p(const std::vector<OrientedGraph>& graphs) {
  auto outcomes = per_graph(graphs, [](const OrientedGraph& g, std::size_t) {
    GraphOutcome oc;
    const auto supports = acyclic_subsets(g);
    for (VertexSet x : supports) {
      for (VertexSet y : supports) {
        const auto check = product_is_idempotent(g, x, y);
        if (check.via_p != check.via_oracle) {
          oc.ok = false;
          oc.counterexample =
              "predicate and rewriting oracle disagree\n" + pair_case(g, x, y);
          return oc;
        }
        if (braid_law(g, x, y) != check.via_p) {
          oc.ok = false;
          oc.counterexample =
              "triple identities disagree with predicate\n" + pair_case(g, x, y);
          return oc;
        }
        // product_support_law itself throws on a collapse failure.
        const auto join = product_support_law(g, x, y);
        if (check.via_p != join.has_value() ||
            (join.has_value() && *join != (x | y))) {
          oc.ok = false;
          oc.counterexample = "support law mismatch\n" + pair_case(g, x, y);
          return oc;
        }
        ++oc.checks;
      }
    }
    return oc;
  });
  return fold("theorem-p", outcomes, graphs.size());
}

SuiteReport prop14(int max_n) {
  SuiteReport report;
  report.suite = "prop14";
  std::uint64_t pair_checks = 0;
  std::uint64_t combine_checks = 0;
  for (int n = 1; n <= max_n && report.pass; ++n) {
    const OrientedGraph g = kiselman_graph(n);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mx = 0; mx < subsets && report.pass; ++mx) {
      const VertexSet x = VertexSet::from_mask(mx);
      if (epsilon_word(x) != idempotent_word(g, x).word) {
        report.pass = false;
        report.counterexample =
            "epsilon word differs from canonical idempotent word for X = " +
            format_set(x) + " at n = " + std::to_string(n);
        break;
      }
      for (std::uint64_t my = 0; my < subsets; ++my) {
        const VertexSet y = VertexSet::from_mask(my);
        const bool order = prop14_condition(x, y);
        const bool path = predicate_p(g, x, y);
        Word product = epsilon_word(x);
        const Word wy = epsilon_word(y);
        product.insert(product.end(), wy.begin(), wy.end());
        const bool oracle = is_idempotent_word(g, product);
        if (order != path || path != oracle) {
          report.pass = false;
          report.counterexample =
              "order/path/oracle disagree\n" + pair_case(g, x, y);
          break;
        }
        if (order && !hk_equal(g, product, epsilon_word(x | y))) {
          report.pass = false;
          report.counterexample =
              "product does not collapse to the union\n" + pair_case(g, x, y);
          break;
        }
        if (n <= 4) {
          if (!combine_law(n, x, y)) {
            report.pass = false;
            report.counterexample = "combine law failed\n" + pair_case(g, x, y);
            break;
          }
          ++combine_checks;
        }
        ++pair_checks;
      }
    }
  }
  report.checks = pair_checks;
  std::ostringstream detail;
  detail << "max_n=" << max_n << " pairs=" << pair_checks
         << " combine=" << combine_checks;
  report.detail = detail.str();
  return report;
}

namespace {

// Index pairs to test: the full square, or seeded random draws.
std::vector<std::pair<std::size_t, std::size_t>> draw_pairs(
    std::size_t count, const PairSampling& s, std::uint64_t graph_index) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (count == 0) return pairs;
  if (static_cast<std::uint64_t>(count) * count <= s.exhaustive_limit) {
    pairs.reserve(count * count);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) pairs.emplace_back(a, b);
    }
  } else {
    std::mt19937_64 rng(s.seed ^ (kSeedMix * (graph_index + 1)));
    pairs.reserve(static_cast<std::size_t>(s.random_pairs));
    for (int k = 0; k < s.random_pairs; ++k) {
      pairs.emplace_back(rng() % count, rng() % count);
    }
  }
  return pairs;
}

}  // namespace

SuiteReport phi_psi(const std::vector<OrientedGraph>& graphs, PairSampling s) {
  auto outcomes = per_graph(graphs, [&s](const OrientedGraph& g, std::size_t gi) {
    GraphOutcome oc;
    const int n = g.vertex_count();
    const auto pure = enumerate_endomorphisms(g);
    for (auto [a, b] : draw_pairs(pure.size(), s, gi)) {
      const SetSequence& lhs = pure[a];
      const SetSequence& rhs = pure[b];
      const SetSequence composed = star(lhs, rhs);
      std::vector<Word> images;
      images.reserve(static_cast<std::size_t>(n));
      bool contents_ok = true;
      for (int i = 1; i <= n; ++i) {
        const Word inner = apply_endomorphism(g, rhs, Word{i});
        images.push_back(apply_endomorphism(g, lhs, inner));
        if (content(images.back()) != composed[i]) contents_ok = false;
      }
      if (!contents_ok || phi_from_images(g, images) != composed) {
        oc.ok = false;
        oc.counterexample = "composition law failed\ngraph:\n" + g.serialize() +
                            "s = " + format_sequence(lhs) +
                            "\nt = " + format_sequence(rhs) + "\n";
        return oc;
      }
      if (psi(composed) != bool_multiply(psi(lhs), psi(rhs))) {
        oc.ok = false;
        oc.counterexample = "matrix encoding not multiplicative\ngraph:\n" +
                            g.serialize() + "s = " + format_sequence(lhs) +
                            "\nt = " + format_sequence(rhs) + "\n";
        return oc;
      }
      ++oc.checks;
    }
    return oc;
  });
  return fold("phi-psi", outcomes, graphs.size());
}

SuiteReport closure(const std::vector<OrientedGraph>& graphs, PairSampling s) {
  auto outcomes = per_graph(graphs, [&s](const OrientedGraph& g, std::size_t gi) {
    GraphOutcome oc;
    const auto pure = enumerate_endomorphisms(g);
    // The listing is sorted by construction, so membership is a binary search.
    if (!std::binary_search(pure.begin(), pure.end(),
                            unit_sequence(g.vertex_count()))) {
      oc.ok = false;
      oc.counterexample = "unit sequence missing\ngraph:\n" + g.serialize();
      return oc;
    }
    ++oc.checks;
    for (auto [a, b] : draw_pairs(pure.size(), s, gi)) {
      if (!std::binary_search(pure.begin(), pure.end(), star(pure[a], pure[b]))) {
        oc.ok = false;
        oc.counterexample = "star product left the enumerated set\ngraph:\n" +
                            g.serialize() + "s = " + format_sequence(pure[a]) +
                            "\nt = " + format_sequence(pure[b]) + "\n";
        return oc;
      }
      ++oc.checks;
    }
    return oc;
  });
  return fold("closure", outcomes, graphs.size());
}

SuiteReport units(const std::vector<OrientedGraph>& graphs) {
  auto outcomes = per_graph(graphs, [](const OrientedGraph& g, std::size_t) {
    GraphOutcome oc;
    const std::uint64_t via_star = unit_group_size(g);
    const std::uint64_t via_perms = automorphisms(g).size();
    if (via_star != via_perms) {
      oc.ok = false;
      oc.counterexample = "unit group " + std::to_string(via_star) +
                          " != automorphisms " + std::to_string(via_perms) +
                          "\ngraph:\n" + g.serialize();
      return oc;
    }
    ++oc.checks;
    return oc;
  });
  auto report = fold("units", outcomes, graphs.size());
  if (report.pass && graphs.size() == 1) {
    report.detail = std::to_string(unit_group_size(graphs.front())) + " = " +
                    std::to_string(automorphisms(graphs.front()).size());
  }
  return report;
}

SuiteReport confluence(const std::vector<OrientedGraph>& graphs,
                       int words_per_graph, int max_word_len,
                       std::uint64_t seed) {
  auto outcomes = per_graph(graphs, [&](const OrientedGraph& g, std::size_t gi) {
    GraphOutcome oc;
    const int n = g.vertex_count();
    std::mt19937_64 rng(seed ^ (kSeedMix * (gi + 1)));
    for (int k = 0; k < words_per_graph; ++k) {
      const std::size_t len = rng() % (static_cast<std::size_t>(max_word_len) + 1);
      Word w(len);
      for (auto& letter : w) letter = static_cast<int>(rng() % n) + 1;
      const std::uint64_t word_seed = rng();
      const Word deterministic = trace_canonical(g, normalize(g, w).word);
      const Word randomized =
          trace_canonical(g, normalize_randomized(g, w, word_seed).word);
      if (deterministic != randomized) {
        oc.ok = false;
        oc.counterexample = "normalization strategy changed the element\n"
                            "graph:\n" + g.serialize() +
                            "word = " + format_word(w) +
                            "\nseed = " + std::to_string(word_seed) + "\n";
        return oc;
      }
      ++oc.checks;
    }
    return oc;
  });
  return fold("confluence", outcomes, graphs.size());
}

}  // namespace hk::verify
