#pragma once

#include <cstddef>
#include <vector>

#include "rankmine/closure_forest.hpp"
#include "rankmine/pair_index.hpp"
#include "rankmine/pattern_store.hpp"
#include "rankmine/ranking.hpp"
#include "rankmine/s1p_matrix.hpp"

namespace rankmine {

/// Operation counters of the closed miner.
struct ClosedMiningStats {
  std::size_t min_support = 0;
  std::size_t frequent_pairs = 0;
  std::size_t candidates = 0;          ///< frequent tail extensions examined (roots included)
  std::size_t unchanged_closure = 0;   ///< candidates tested against the parent's forest
  std::size_t rebuilt_closure = 0;     ///< candidates that needed a new s1p matrix and forest
  std::size_t prefix_failures = 0;
  std::size_t deleted = 0;             ///< stored prefixes later found non-closed
  std::size_t patterns = 0;
  /// Largest s1p + forest + prefix-test step count spent on one candidate.
  std::size_t max_pruning_steps = 0;

  ClosedMiningStats& operator+=(const ClosedMiningStats& o);
};

/// Every closed frequent ranking (no proper superranking has the same
/// support), each with its exact support. Roots are the frequent pairs in
/// ascending order; a ranking is only kept and expanded while it is a prefix
/// of some element of its own h-closure.
PatternStore mine_closed(const RankDatabase& db, const MiningConfig& cfg,
                         ClosedMiningStats* stats = nullptr);

/// The same set computed by frequent mining followed by a bottom-up sweep:
/// a k-ranking is dropped when some (k+1)-ranking containing it has the same
/// support.
PatternStore post_tesma(const RankDatabase& db, const MiningConfig& cfg);
PatternStore post_tesma(const PatternStore& frequent);

/// Maximal common subrankings of the transactions containing `pi`, as
/// root-to-leaf paths of the closure forest. Throws PreconditionError when
/// no transaction contains pi.
std::vector<Ranking> h_closure_of(const RankDatabase& db, const Ranking& pi);

/// True iff pi belongs to its own h-closure. Throws on zero support.
bool is_closed(const RankDatabase& db, const Ranking& pi);

/// Depth-first closed expansion below one root pair. Exposed for tests that
/// trace a single subtree; mine_closed runs it for every frequent pair.
class ClosedExpander {
 public:
  ClosedExpander(const RankDatabase& db, const PairIndex& index);

  /// Mines the subtree rooted at (first, second). Returns the closed
  /// rankings found there, shortest first, in discovery order.
  std::vector<PatternEntry> run_root(Item first, Item second, ClosedMiningStats& stats);

 private:
  struct Found {
    PatternEntry entry;
    bool alive = true;
  };

  void expand_closed(std::vector<Item>& rho, std::size_t rho_slot,
                     const TransactionSet& t, const ClosureForest& forest,
                     ClosureForest::NodeId postfix, const S1pMatrix& s1p,
                     const PendingPairs& lp, ClosedMiningStats& stats);
  void record(std::size_t steps, ClosedMiningStats& stats) const;
  std::size_t store(const std::vector<Item>& rho, std::size_t support,
                    ClosedMiningStats& stats);

  const RankDatabase& db_;
  const PairIndex& index_;
  PendingPairs all_pairs_;
  std::vector<char> in_path_;
  std::vector<Found> found_;
};

}  // namespace rankmine
