#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rankmine/pattern_store.hpp"
#include "rankmine/ranking.hpp"

/// Exhaustive reference implementations for small instances. Containment is
/// decided on position arrays alone; nothing here shares code with the
/// miners beyond the Ranking container. Everything throws LimitError past
/// the configured caps.
namespace rankmine::oracle {

struct OracleLimits {
  std::size_t max_items = 7;
  std::size_t max_transactions = 500;
};

/// True iff `sub` is contained in `super`, by pairwise position comparison.
bool contains(const Ranking& super, const Ranking& sub);

/// All complete rankings of the universe that restrict to `pi`, sorted.
std::vector<Ranking> linear_extensions(const Ranking& pi, const OracleLimits& limits = {});

/// The set of complete rankings consistent with both sides, sorted.
std::vector<Ranking> joint_extensions(const Ranking& a, const Ranking& b,
                                      const OracleLimits& limits = {});

/// Every ranking of length >= 2 contained in at least `delta` transactions,
/// with its support, sorted by Ranking order.
std::vector<PatternEntry> brute_frequent(const RankDatabase& db, std::size_t delta,
                                         const OracleLimits& limits = {});

/// Frequent rankings with no proper superranking of equal support.
std::vector<PatternEntry> brute_closed(const RankDatabase& db, std::size_t delta,
                                       const OracleLimits& limits = {});

/// Frequent rankings with no frequent proper superranking.
std::vector<PatternEntry> brute_maximal(const RankDatabase& db, std::size_t delta,
                                        const OracleLimits& limits = {});

/// Common subrankings (length >= 2) of all given transactions that no other
/// common subranking properly contains, sorted. Throws PreconditionError on
/// an empty set.
std::vector<Ranking> brute_max_intersection(std::span<const Ranking> transactions,
                                            const OracleLimits& limits = {});

/// Maximal intersection of the transactions containing pi.
std::vector<Ranking> brute_h_closure(const RankDatabase& db, const Ranking& pi,
                                     const OracleLimits& limits = {});

/// Number of rankings of length 2..K over K items, summing K!/(K-k)!.
/// Throws LimitError if the sum does not fit 64 bits.
std::uint64_t count_all_rankings(std::size_t k);

/// The same number by walking every sequence of distinct items.
std::uint64_t enumerate_all_rankings(std::size_t k, const OracleLimits& limits = {});

/// Converts oracle output to a store for comparisons with miner output.
PatternStore to_store(const std::vector<PatternEntry>& entries);

}  // namespace rankmine::oracle
