#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rankmine/ranking.hpp"

namespace rankmine {

struct PatternEntry {
  Ranking ranking;
  std::size_t support = 0;  ///< absolute
};

/// Mined patterns grouped by length. List k-2 holds the k-rankings in the
/// order they were added; depth-first miners add them so that rankings
/// sharing a prefix are contiguous. A ranking is stored at most once.
class PatternStore {
 public:
  PatternStore() = default;

  /// Throws PreconditionError for rankings of length < 2 or duplicates.
  void add(Ranking ranking, std::size_t support);

  /// Lists indexed by k-2, where k is the pattern length.
  const std::vector<std::vector<PatternEntry>>& by_length() const noexcept {
    return lists_;
  }
  /// Patterns of length k; empty span when none.
  std::span<const PatternEntry> of_length(std::size_t k) const;
  std::size_t max_length() const noexcept { return lists_.size() + 1; }

  std::size_t size() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }
  bool contains(const Ranking& r) const { return index_.contains(r); }
  std::optional<std::size_t> support_of(const Ranking& r) const;

  /// All entries, shortest first, in list order.
  std::vector<PatternEntry> entries() const;

  /// Appends every entry of `other` (length by length).
  void append(const PatternStore& other);

  /// Set equality including supports, ignoring list order.
  bool same_patterns(const PatternStore& other) const;

 private:
  std::vector<std::vector<PatternEntry>> lists_;
  std::unordered_map<Ranking, std::size_t, RankingHash> index_;
  std::size_t total_ = 0;
};

}  // namespace rankmine
