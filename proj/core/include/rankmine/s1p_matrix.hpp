#pragma once

#include <cstddef>
#include <vector>

#include "rankmine/bitvector.hpp"
#include "rankmine/pair_index.hpp"
#include "rankmine/ranking.hpp"

namespace rankmine {

/// K x K preference matrix of a transaction set: cell(j, i) is set iff every
/// transaction of the set ranks i before j. The diagonal cell(i, i) is a
/// visited flag for closure-forest construction and starts cleared.
///
/// Stored row-per-preferred-item: successors(i) = { j : i before j }.
class S1pMatrix {
 public:
  S1pMatrix() = default;
  explicit S1pMatrix(std::size_t k);

  /// Matrix of the pairwise preferences shared by the transactions in `t`
  /// (t must be nonempty), computed directly from the rankings.
  static S1pMatrix from_transactions(const RankDatabase& db, const TransactionSet& t);

  std::size_t num_items() const noexcept { return succ_.size(); }

  bool cell(Item row, Item col) const {
    return row == col ? visited_.test(row) : succ_[col].test(row);
  }
  bool prefers(Item i, Item j) const { return i != j && succ_[i].test(j); }
  void set_preference(Item i, Item j);
  const BitVector& successors(Item i) const { return succ_[i]; }

  bool visited(Item i) const { return visited_.test(i); }
  void mark_visited(Item i) { visited_.set(i); }
  bool any_visited() const { return !visited_.none(); }

  /// Number of recorded preferences (off-diagonal ones).
  std::size_t num_preferences() const;

  /// No pair is recorded in both directions.
  bool is_asymmetric() const;
  /// i before j and j before l imply i before l.
  bool is_transitive() const;

  friend bool operator==(const S1pMatrix&, const S1pMatrix&) = default;

 private:
  std::vector<BitVector> succ_;
  BitVector visited_;
};

/// A frequent pair not yet known to hold throughout the current closure.
struct PendingPair {
  Item preferred;
  Item other;
  const TransactionSet* transactions;  ///< g((preferred, other)), owned by the index
};

using PendingPairs = std::vector<PendingPair>;

/// Every pair of the index, in index order.
PendingPairs all_pending_pairs(const PairIndex& index);

struct S1pUpdate {
  S1pMatrix s1p;
  PendingPairs pending;
};

/// Moves every pending pair whose transaction set covers `t` into a copy of
/// `s1p`; the rest stay pending. `steps` is incremented once per pair tested.
S1pUpdate s1p_intersect(const TransactionSet& t, const PendingPairs& lp,
                        const S1pMatrix& s1p, std::size_t* steps = nullptr);

}  // namespace rankmine
