// Command-line surface over the Hecke-Kiselman library: graph ingestion,
// word rewriting queries, idempotent and endomorphism enumeration, the
// theorem-verification suites, and a small benchmark.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hk/endo.hpp"
#include "hk/errors.hpp"
#include "hk/graph.hpp"
#include "hk/idempotent.hpp"
#include "hk/kiselman.hpp"
#include "hk/verify.hpp"
#include "hk/word.hpp"

namespace {

using nlohmann::json;

constexpr int kExitError = 2;

struct CommonOpts {
  std::string graph_file;
  int kiselman_n = 0;
  bool machine = false;
  std::uint64_t budget = hk::kDefaultTupleBudget;
  std::size_t max_word_len = hk::kMaxWordLen;
};

void add_graph_source(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-g,--graph", opts.graph_file, "graph file");
  cmd->add_option("--kiselman", opts.kiselman_n,
                  "use the complete acyclic graph on n vertices")
      ->check(CLI::Range(1, 64));
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--machine", opts.machine, "one JSON record per result line");
  cmd->add_option("--budget", opts.budget,
                  "candidate-tuple budget for enumerations");
  cmd->add_option("--max-word-len", opts.max_word_len, "word length cap");
}

hk::OrientedGraph load_graph(const CommonOpts& opts) {
  const bool have_file = !opts.graph_file.empty();
  const bool have_kiselman = opts.kiselman_n > 0;
  if (have_file == have_kiselman) {
    throw std::invalid_argument(
        "exactly one graph source required: -g <file> or --kiselman <n>");
  }
  if (have_kiselman) return hk::kiselman_graph(opts.kiselman_n);
  std::ifstream in(opts.graph_file);
  if (!in) {
    throw std::invalid_argument("cannot open graph file '" + opts.graph_file +
                                "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return hk::OrientedGraph::parse(text.str());
}

json set_json(hk::VertexSet x) { return json(x.elements()); }

json matrix_json(const hk::BoolMatrix& m) {
  json rows = json::array();
  for (int r = 1; r <= m.dim(); ++r) {
    json row = json::array();
    for (int c = 1; c <= m.dim(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_normalize(const CommonOpts& opts, const std::string& word_text) {
  const auto g = load_graph(opts);
  const auto w = hk::parse_word(word_text, g.vertex_count(), opts.max_word_len);
  const hk::Word normal = hk::normalize(g, w).word;
  const hk::Word canonical = hk::trace_canonical(g, normal);
  if (opts.machine) {
    json out{{"normal", hk::format_word(normal)},
             {"canonical", hk::format_word(canonical)},
             {"content", set_json(hk::content(w))}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "normal: " << hk::format_word(normal) << "\n"
              << "canonical: " << hk::format_word(canonical) << "\n"
              << "content: " << hk::format_set(hk::content(w)) << "\n";
  }
  return 0;
}

int run_equal(const CommonOpts& opts, const std::string& a,
              const std::string& b) {
  const auto g = load_graph(opts);
  const bool equal =
      hk::hk_equal(g, hk::parse_word(a, g.vertex_count(), opts.max_word_len),
                   hk::parse_word(b, g.vertex_count(), opts.max_word_len));
  if (opts.machine) {
    std::cout << json{{"equal", equal}}.dump() << "\n";
  } else {
    std::cout << (equal ? "equal" : "unequal") << "\n";
  }
  return equal ? 0 : 1;
}

int run_content(const CommonOpts& opts, const std::string& word_text) {
  const auto g = load_graph(opts);
  const auto c =
      hk::content(hk::parse_word(word_text, g.vertex_count(), opts.max_word_len));
  if (opts.machine) {
    std::cout << json{{"content", set_json(c)}}.dump() << "\n";
  } else {
    std::cout << hk::format_set(c) << "\n";
  }
  return 0;
}

int run_idempotents(const CommonOpts& opts) {
  const auto g = load_graph(opts);
  for (const auto& handle : hk::enumerate_idempotents(g)) {
    if (opts.machine) {
      json out{{"support", set_json(handle.support)},
               {"word", hk::format_word(handle.word)}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "X = " << hk::format_set(handle.support)
                << " word = " << hk::format_word(handle.word) << "\n";
    }
  }
  return 0;
}

int run_p(const CommonOpts& opts, const std::string& xs, const std::string& ys) {
  const auto g = load_graph(opts);
  const auto x = hk::parse_set(xs, g.vertex_count());
  const auto y = hk::parse_set(ys, g.vertex_count());
  const bool holds = hk::predicate_p(g, x, y);
  if (opts.machine) {
    json out{{"x", set_json(x)}, {"y", set_json(y)}, {"p", holds}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "p(" << hk::format_set(x) << ", " << hk::format_set(y)
              << ") = " << (holds ? "true" : "false") << "\n";
  }
  return 0;
}

int run_endos(const CommonOpts& opts, const std::string& mode) {
  const auto g = load_graph(opts);
  if (mode == "count") {
    const std::uint64_t count = hk::count_endomorphisms(g);
    if (opts.machine) {
      std::cout << json{{"count", count}}.dump() << "\n";
    } else {
      std::cout << count << "\n";
    }
    return 0;
  }
  const auto pure = hk::enumerate_endomorphisms(g, opts.budget);
  bool first = true;
  for (const auto& seq : pure) {
    if (opts.machine) {
      json sets = json::array();
      for (int i = 1; i <= seq.size(); ++i) sets.push_back(set_json(seq[i]));
      json out{{"sets", std::move(sets)}, {"matrix", matrix_json(hk::psi(seq))}};
      std::cout << out.dump() << "\n";
    } else if (mode == "list") {
      std::cout << hk::format_sequence(seq) << "\n";
    } else {  // matrices
      if (!first) std::cout << "\n";
      std::cout << hk::format_matrix(hk::psi(seq));
    }
    first = false;
  }
  return 0;
}

int run_aut(const CommonOpts& opts) {
  const auto g = load_graph(opts);
  const auto perms = hk::automorphisms(g);
  for (const auto& perm : perms) {
    if (opts.machine) {
      std::cout << json{{"perm", perm}}.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i > 0) std::cout << " ";
        std::cout << perm[i];
      }
      std::cout << "\n";
    }
  }
  if (!opts.machine) std::cout << "count = " << perms.size() << "\n";
  return 0;
}

struct VerifyOpts {
  std::string suite;
  bool all_graphs = false;
  int max_n = 3;
  int pairs = 200;
  int words = 1000;
  int rand_len = 6;
  std::uint64_t seed = 2024;
};

int run_verify(const CommonOpts& opts, const VerifyOpts& vo) {
  std::vector<hk::OrientedGraph> graphs;
  if (vo.suite != "prop14") {
    if (vo.all_graphs) {
      graphs = hk::verify::all_graphs(vo.max_n);
    } else {
      graphs.push_back(load_graph(opts));
    }
  }
  hk::verify::PairSampling sampling;
  sampling.random_pairs = vo.pairs;
  sampling.seed = vo.seed;

  hk::verify::SuiteReport report;
  if (vo.suite == "theorem-p") {
    report = hk::verify::theorem_p(graphs);
  } else if (vo.suite == "prop14") {
    report = hk::verify::prop14(vo.max_n);
  } else if (vo.suite == "phi-psi") {
    report = hk::verify::phi_psi(graphs, sampling);
  } else if (vo.suite == "closure") {
    report = hk::verify::closure(graphs, sampling);
  } else if (vo.suite == "units") {
    report = hk::verify::units(graphs);
  } else if (vo.suite == "confluence") {
    report = hk::verify::confluence(graphs, vo.words, vo.rand_len, vo.seed);
  } else {
    throw std::invalid_argument("unknown suite '" + vo.suite + "'");
  }

  if (opts.machine) {
    json out{{"suite", report.suite},
             {"pass", report.pass},
             {"checks", report.checks},
             {"detail", report.detail}};
    if (!report.pass) out["counterexample"] = report.counterexample;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << report.suite << ": " << (report.pass ? "PASS" : "FAIL") << " ("
              << report.detail << ")\n";
    if (!report.pass) {
      std::cout << "counterexample:\n" << report.counterexample << "\n";
    }
  }
  return report.pass ? 0 : 1;
}

struct BenchOpts {
  std::string family = "kiselman";
  std::vector<int> sizes;
  std::uint64_t seed = 2024;
};

hk::OrientedGraph random_dag(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<std::pair<int, int>> arrows;
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (rng() % 3 == 0) arrows.emplace_back(order[a], order[b]);
    }
  }
  return hk::OrientedGraph(n, arrows);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::max(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count(),
      1e-9);
}

int run_bench(const BenchOpts& bo) {
  std::cout << "family,n,p_pairs_per_sec,normalize_reductions_per_sec,"
               "enum_tuples_per_sec\n";
  for (int n : bo.sizes) {
    const hk::OrientedGraph g = bo.family == "kiselman"
                                    ? hk::kiselman_graph(n)
                                    : random_dag(n, bo.seed + static_cast<std::uint64_t>(n));
    std::mt19937_64 rng(bo.seed ^ static_cast<std::uint64_t>(n));
    const std::uint64_t full = n >= 63 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1;

    const int p_evals = 1 << 17;
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t sink = 0;
    for (int k = 0; k < p_evals; ++k) {
      const auto x = hk::VertexSet::from_mask(rng() & full);
      const auto y = hk::VertexSet::from_mask(rng() & full);
      sink += hk::predicate_p(g, x, y) ? 1 : 0;
    }
    const double p_rate = p_evals / seconds_since(t0);

    const int word_count = 300;
    const std::size_t word_len = 60;
    std::uint64_t reductions = 0;
    t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < word_count; ++k) {
      hk::Word w(word_len);
      for (auto& letter : w) letter = static_cast<int>(rng() % n) + 1;
      reductions += word_len - hk::normalize(g, w).word.size();
    }
    const double reduce_rate = static_cast<double>(reductions) / seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto stats = hk::scan_endomorphisms(g, 200'000);
    const double tuple_rate = static_cast<double>(stats.nodes) / seconds_since(t0);

    std::cout << bo.family << "," << n << "," << std::fixed
              << std::setprecision(0) << p_rate << "," << reduce_rate << ","
              << tuple_rate << "\n";
    (void)sink;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke-Kiselman monoid toolkit: word equality by rewriting, "
               "idempotent classification, endomorphism enumeration"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string word_a, word_b, set_a, set_b;
  std::string endo_mode = "count";
  VerifyOpts vo;
  BenchOpts bo;

  auto* normalize = app.add_subcommand(
      "normalize", "reduce a word and print its canonical forms");
  add_graph_source(normalize, opts);
  add_common(normalize, opts);
  normalize->add_option("word", word_a, "word, e.g. \"2 1 2\"");

  auto* equal =
      app.add_subcommand("equal", "decide equality of two words (exit 0/1/2)");
  add_graph_source(equal, opts);
  add_common(equal, opts);
  equal->add_option("word1", word_a)->required();
  equal->add_option("word2", word_b)->required();

  auto* content = app.add_subcommand("content", "print the content of a word");
  add_graph_source(content, opts);
  add_common(content, opts);
  content->add_option("word", word_a);

  auto* idempotents =
      app.add_subcommand("idempotents", "list all idempotents of the monoid");
  add_graph_source(idempotents, opts);
  add_common(idempotents, opts);

  auto* pcmd = app.add_subcommand("p", "evaluate the path predicate p(X, Y)");
  add_graph_source(pcmd, opts);
  add_common(pcmd, opts);
  pcmd->add_option("X", set_a, "comma-separated set, '-' for empty")->required();
  pcmd->add_option("Y", set_b, "comma-separated set, '-' for empty")->required();

  auto* endos =
      app.add_subcommand("endos", "enumerate the endomorphism monoid");
  add_graph_source(endos, opts);
  add_common(endos, opts);
  endos->add_option("--mode", endo_mode, "count | list | matrices")
      ->check(CLI::IsMember({"count", "list", "matrices"}));

  auto* aut = app.add_subcommand("aut", "list graph automorphisms");
  add_graph_source(aut, opts);
  add_common(aut, opts);

  auto* verify =
      app.add_subcommand("verify", "run a theorem-verification suite");
  add_graph_source(verify, opts);
  add_common(verify, opts);
  verify->add_option("--suite", vo.suite,
                     "theorem-p | prop14 | phi-psi | closure | units | "
                     "confluence")
      ->required()
      ->check(CLI::IsMember({"theorem-p", "prop14", "phi-psi", "closure",
                             "units", "confluence"}));
  verify->add_flag("--all-graphs", vo.all_graphs,
                   "run over every labeled graph on max-n vertices");
  verify->add_option("--max-n", vo.max_n, "family size for --all-graphs/prop14");
  verify->add_option("--pairs", vo.pairs, "random sequence pairs per graph");
  verify->add_option("--words", vo.words, "random words per graph (confluence)");
  verify->add_option("--rand-len", vo.rand_len,
                     "max random word length (confluence)");
  verify->add_option("--seed", vo.seed, "seed for sampled checks");

  auto* bench = app.add_subcommand("bench", "print a throughput CSV");
  bench->add_option("--family", bo.family, "kiselman | random-dag")
      ->check(CLI::IsMember({"kiselman", "random-dag"}));
  bench->add_option("--sizes", bo.sizes, "comma-separated vertex counts")
      ->delimiter(',');
  bench->add_option("--seed", bo.seed, "seed for the random-dag family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (normalize->parsed()) return run_normalize(opts, word_a);
    if (equal->parsed()) return run_equal(opts, word_a, word_b);
    if (content->parsed()) return run_content(opts, word_a);
    if (idempotents->parsed()) return run_idempotents(opts);
    if (pcmd->parsed()) return run_p(opts, set_a, set_b);
    if (endos->parsed()) return run_endos(opts, endo_mode);
    if (aut->parsed()) return run_aut(opts);
    if (verify->parsed()) return run_verify(opts, vo);
    if (bench->parsed()) return run_bench(bo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
