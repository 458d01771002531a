#pragma once

#include <cstddef>

#include "rankmine/bitvector.hpp"
#include "rankmine/pair_index.hpp"
#include "rankmine/pattern_store.hpp"
#include "rankmine/ranking.hpp"

namespace rankmine {

/// Operation counters of the depth-first frequent miner.
struct MiningStats {
  std::size_t min_support = 0;
  std::size_t frequent_pairs = 0;
  std::size_t expansions = 0;        ///< frequent rankings whose children were tried
  std::size_t candidate_ands = 0;    ///< bitwise ANDs for tail-extension candidates
  std::size_t patterns = 0;

  MiningStats& operator+=(const MiningStats& o) {
    expansions += o.expansions;
    candidate_ands += o.candidate_ands;
    patterns += o.patterns;
    return *this;
  }
};

/// Every ranking with at least the configured support, each with its
/// exact absolute support. Roots are the frequent pairs in ascending item
/// order; below each root the prefix tree is walked depth first, so the
/// store's lists keep rankings that share a prefix together.
PatternStore mine_frequent(const RankDatabase& db, const MiningConfig& cfg,
                           MiningStats* stats = nullptr);

/// Same, on an index that was already built (its threshold is used).
PatternStore mine_frequent(const PairIndex& index, const MiningConfig& cfg,
                           MiningStats* stats = nullptr);

/// Adds every frequent proper tail extension of `rho` to `store`,
/// recursively. `rho_transactions` must equal g(rho).
///
/// The transaction set of rho|o is g(rho) AND g((last(rho), o)); candidates
/// whose last pair is missing from the index are never materialized.
void extend_depth_first(const Ranking& rho, const TransactionSet& rho_transactions,
                        const PairIndex& index, PatternStore& store,
                        MiningStats* stats = nullptr);

/// Keeps the patterns of a complete frequent set that have no frequent
/// proper superranking in it.
PatternStore extract_maximal(const PatternStore& frequent);

}  // namespace rankmine
