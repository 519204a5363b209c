#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hk/graph.hpp"
#include "hk/idempotent.hpp"
#include "hk/word.hpp"

namespace hk {

// An n-tuple (X_1, ..., X_n) of vertex sets.  The pure ones — acyclic
// supports whose pairs satisfy the p-conditions mirroring the graph — are
// exactly the endomorphisms of the monoid, via x_i -> e_{X_i}.
struct SetSequence {
  std::vector<VertexSet> sets;

  int size() const { return static_cast<int>(sets.size()); }
  const VertexSet& operator[](int i) const {
    return sets[static_cast<std::size_t>(i) - 1];
  }

  bool operator==(const SetSequence&) const = default;
  bool operator<(const SetSequence& o) const;
};

// (X_1, ..., X_n) = ({1}, {2}, ..., {n}), the identity endomorphism.
SetSequence unit_sequence(int n);

// The three purity conditions: every X_i acyclic; p both ways for
// disconnected i, j; p(X_i, X_j) for arrows i -> j.
bool is_pure(const OrientedGraph& g, const SetSequence& seq);

// Composition in sequence form: (x * y)_i is the union of x_j over
// j in y_i.  Corresponds to applying y first, then x.
SetSequence star(const SetSequence& x, const SetSequence& y);

// n x n matrix over {0, 1}; column i is the characteristic vector of X_i
// under the psi encoding.  Rows are 64-bit masks.
class BoolMatrix {
 public:
  explicit BoolMatrix(int n);
  static BoolMatrix identity(int n);

  int dim() const { return n_; }
  bool get(int row, int col) const {
    check_index(row);
    check_index(col);
    return (rows_[static_cast<std::size_t>(row) - 1] >> (col - 1)) & 1;
  }
  void set(int row, int col, bool value);
  std::uint64_t row_mask(int row) const {
    return rows_[static_cast<std::size_t>(row) - 1];
  }

  bool operator==(const BoolMatrix&) const = default;

 private:
  void check_index(int i) const;
  int n_;
  std::vector<std::uint64_t> rows_;
};

// Entry (x, i) is 1 iff x lies in X_i.  Turns * into the Boolean matrix
// product and the unit sequence into the identity matrix.
BoolMatrix psi(const SetSequence& seq);

// C(i, j) = OR over k of (A(i, k) AND B(k, j)).
BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b);

// Recovers the sequence form of an endomorphism from the images of the
// generators: each image must be idempotent, and the content sequence must
// be pure (otherwise no endomorphism has those images); throws
// std::invalid_argument on either failure.
SetSequence phi_from_images(const OrientedGraph& g,
                            const std::vector<Word>& images,
                            std::size_t max_len = kMaxWordLen);

// Image of w under the endomorphism: substitute the idempotent word of
// X_i for each letter i, then reduce to a canonical representative.
Word apply_endomorphism(const OrientedGraph& g, const SetSequence& seq,
                        const Word& w, std::size_t max_len = kMaxWordLen);

inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

// All pure sequences on g, ordered lexicographically by (mask of X_1, ...,
// mask of X_n).  Raises BudgetError when |A_Theta|^n exceeds the budget;
// use count_endomorphisms for the streaming count in that regime.
std::vector<SetSequence> enumerate_endomorphisms(
    const OrientedGraph& g, std::uint64_t budget = kDefaultTupleBudget);

// Streaming count of pure sequences with prefix pruning; never stores the
// list and takes no budget.
std::uint64_t count_endomorphisms(const OrientedGraph& g);

// Partial scan used for throughput measurement: stops quietly after
// visiting node_cap candidate extensions.
struct EnumStats {
  std::uint64_t found = 0;
  std::uint64_t nodes = 0;
  bool complete = true;
};
EnumStats scan_endomorphisms(const OrientedGraph& g, std::uint64_t node_cap);

// Independent oracle: substitute the idempotent words into every defining
// relation of the monoid (generator idempotency, commutations for
// disconnected pairs, the triple identities for arrows) and check each with
// the rewriting engine.  Agrees with is_pure on every tuple over A_Theta.
bool verify_extends(const OrientedGraph& g, const SetSequence& seq);

// Number of pure sequences with a two-sided *-inverse.  Matches the order
// of the graph's automorphism group.
std::uint64_t unit_group_size(const OrientedGraph& g,
                              std::uint64_t budget = kDefaultTupleBudget);

// "X_1; X_2; ...; X_n" with each set comma-separated, "-" when empty.
std::string format_sequence(const SetSequence& seq);
SetSequence parse_sequence(std::string_view text, int n);

// n lines of n space-separated 0/1 digits, row x on line x.
std::string format_matrix(const BoolMatrix& m);

}  // namespace hk
