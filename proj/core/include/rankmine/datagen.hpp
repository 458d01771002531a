#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rankmine/pair_index.hpp"
#include "rankmine/ranking.hpp"

namespace rankmine {

struct GenSpec {
  std::size_t size = 100000;     ///< N, rows to emit
  std::size_t num_items = 14;    ///< K
  std::size_t num_cores = 4;     ///< n
  double swap_probability = 0.1; ///< p
  Threshold threshold = Threshold::relative(0.01);  ///< used by gen_increasing_frequent
  std::uint64_t seed = 1;
};

/// N complete K-rankings: n random core permutations, each replicated
/// floor(N/n) times in one block, the first N mod n cores once more at the
/// end. Every replica gets one left-to-right pass that swaps each adjacent
/// pair with probability p.
RankDatabase gen_basic(const GenSpec& spec);

using DatasetSink = std::function<void(std::size_t j, const RankDatabase& dataset)>;

/// Mines gen_basic(spec) at spec.threshold and derives one dataset per
/// frequent ranking found. Step j draws a random remaining ranking of the
/// shortest length left, drops earlier drawn rows that are subrankings of
/// it, adds it, and replicates the drawn rows cyclically to N rows. Mined
/// at 1/(N+1), D_j holds exactly j frequent rankings.
///
/// Throws Error when the basic dataset has no frequent ranking or when the
/// drawn rows outnumber N.
void gen_increasing_frequent(const GenSpec& spec, const DatasetSink& sink);
std::vector<RankDatabase> gen_increasing_frequent(const GenSpec& spec);

/// v copies of db, each row of each copy passed through the swap pass with
/// probability p_swap.
RankDatabase inflate(const RankDatabase& db, std::size_t v, double p_swap,
                     std::uint64_t seed);

/// Adds one item to the universe and inserts it into every row. In rows
/// that rank `preferred` before `other`, the new item lands uniformly after
/// `other`; elsewhere uniformly at any of the k+1 slots. The default name
/// continues a numbered universe ("K+1") or is "o<K+1>".
RankDatabase extend_rankings(const RankDatabase& db, Item preferred, Item other,
                             std::uint64_t seed,
                             std::optional<std::string> new_item = std::nullopt);

}  // namespace rankmine
