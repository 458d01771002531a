#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rankmine/bitvector.hpp"
#include "rankmine/ranking.hpp"

namespace rankmine {

/// Support threshold, either a fraction of N in (0, 1] or an absolute count.
class Threshold {
 public:
  static Threshold relative(double fraction);
  static Threshold absolute(std::size_t count);

  bool is_relative() const noexcept { return std::holds_alternative<double>(value_); }
  double fraction() const { return std::get<double>(value_); }
  std::size_t count() const { return std::get<std::size_t>(value_); }

  /// The absolute threshold for a database of `n` transactions. Relative
  /// thresholds round up, so a pattern at the returned count never falls
  /// below the fraction. Absolute thresholds are returned as given (values
  /// above n simply admit nothing).
  std::size_t resolve(std::size_t n) const;

 private:
  explicit Threshold(std::variant<double, std::size_t> v) : value_(v) {}
  std::variant<double, std::size_t> value_;
};

struct MiningConfig {
  Threshold threshold = Threshold::absolute(1);
  /// Worker count for root-pair parallelism. 1 runs everything inline.
  unsigned threads = 1;
};

/// Frequent 2-rankings with their transaction sets, keyed first by the
/// preferred item and then by the other one. Rows and the entries inside a
/// row are in ascending item order.
class PairIndex {
 public:
  struct Entry {
    Item item;  ///< the less preferred item j of the pair (i, j)
    TransactionSet transactions;
  };

  /// Holds every ordered pair (i, j) with #g((i, j)) >= min_support.
  static PairIndex build(const RankDatabase& db, std::size_t min_support);

  std::size_t num_items() const noexcept { return rows_.size(); }
  std::size_t num_transactions() const noexcept { return num_transactions_; }
  std::size_t min_support() const noexcept { return min_support_; }

  std::span<const Entry> row(Item i) const { return rows_[i]; }
  /// g((i, j)) or nullptr when the pair is not frequent.
  const TransactionSet* find(Item i, Item j) const;

  /// Number of stored pairs.
  std::size_t size() const noexcept { return num_pairs_; }

  /// g(pi) as the intersection of the sets of its consecutive pairs;
  /// nullopt when one of those pairs is not in the index.
  std::optional<TransactionSet> closure_of(const Ranking& pi) const;

 private:
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::int32_t> slot_;  ///< K*K -> position in row, -1 if absent
  std::size_t num_transactions_ = 0;
  std::size_t min_support_ = 0;
  std::size_t num_pairs_ = 0;
};

/// Index at the threshold of `cfg` resolved against the database size.
inline PairIndex build_pair_index(const RankDatabase& db, const MiningConfig& cfg) {
  return PairIndex::build(db, cfg.threshold.resolve(db.size()));
}

}  // namespace rankmine
