#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rankmine {

/// Dense index of an item inside its ItemUniverse, in [0, K).
using Item = std::uint32_t;

/// The fixed set of K >= 2 items all rankings of a database refer to.
/// Names are kept only for I/O; every algorithm works on dense indices.
class ItemUniverse {
 public:
  explicit ItemUniverse(std::vector<std::string> names);

  /// Universe named "1", "2", ..., "K".
  static ItemUniverse numbered(std::size_t k);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Item item) const { return names_.at(item); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Index of a name, or -1 when the universe does not contain it.
  std::int64_t find(std::string_view name) const;
  Item index_of(std::string_view name) const;

  /// True when the names are exactly "1".."K" in order.
  bool is_numbered() const;

  friend bool operator==(const ItemUniverse& a, const ItemUniverse& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Item> lookup_;
};

/// An (incomplete) ranking of a subset of the K items.
///
/// The canonical representation is the position array: positions()[j] is
/// the rank of item j (1 = most preferred) or 0 when j is unranked. The
/// order view, the ranked items sorted by position, is stored alongside
/// because every miner consumes rankings in that form.
///
/// A Ranking may rank fewer than two items (restrictions can produce such
/// degenerate values); is_pattern() tells whether it is usable as a pattern
/// or transaction.
class Ranking {
 public:
  Ranking() = default;

  /// Builds a ranking over a universe of `universe_size` items from its
  /// order view. Throws PreconditionError on out-of-range or repeated items.
  static Ranking from_order(std::size_t universe_size,
                            std::span<const Item> order);
  static Ranking from_order(std::size_t universe_size,
                            std::initializer_list<Item> order) {
    return from_order(universe_size,
                      std::span<const Item>(order.begin(), order.size()));
  }

  /// Builds a ranking from a position array. Nonzero entries must be
  /// exactly {1..k} without repeats.
  static Ranking from_positions(std::span<const std::uint32_t> positions);

  std::size_t universe_size() const noexcept { return positions_.size(); }
  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }
  bool is_pattern() const noexcept { return order_.size() >= 2; }

  bool contains(Item item) const {
    return item < positions_.size() && positions_[item] != 0;
  }
  /// 1-based rank of `item`, 0 when unranked.
  std::uint32_t position(Item item) const { return positions_.at(item); }

  std::span<const Item> order() const noexcept { return order_; }
  const std::vector<std::uint32_t>& positions() const noexcept {
    return positions_;
  }
  Item operator[](std::size_t i) const { return order_[i]; }
  Item first() const { return order_.front(); }
  Item last() const { return order_.back(); }

  /// True when `item` is ranked before `other` (both must be ranked).
  bool prefers(Item item, Item other) const {
    return positions_[item] < positions_[other];
  }

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_ && a.positions_.size() == b.positions_.size();
  }
  /// Length first, then lexicographic on the order view.
  friend std::strong_ordering operator<=>(const Ranking& a, const Ranking& b);

 private:
  std::vector<std::uint32_t> positions_;
  std::vector<Item> order_;
};

struct RankingHash {
  std::size_t operator()(const Ranking& r) const noexcept;
};

/// Renders the order view as "a>b>c" using the universe's item names.
std::string to_string(const Ranking& ranking, const ItemUniverse& universe);

/// Immutable collection of N >= 1 transactions over one universe. Every
/// transaction ranks at least two items.
class RankDatabase {
 public:
  RankDatabase(ItemUniverse universe, std::vector<Ranking> transactions);

  const ItemUniverse& universe() const noexcept { return universe_; }
  std::size_t num_items() const noexcept { return universe_.size(); }
  std::size_t size() const noexcept { return transactions_.size(); }
  const Ranking& operator[](std::size_t i) const { return transactions_[i]; }
  const std::vector<Ranking>& transactions() const noexcept {
    return transactions_;
  }

  /// Parses "a>b>c" against this database's universe.
  Ranking ranking(std::string_view order_text) const;

  friend bool operator==(const RankDatabase& a, const RankDatabase& b) {
    return a.universe_ == b.universe_ && a.transactions_ == b.transactions_;
  }

 private:
  ItemUniverse universe_;
  std::vector<Ranking> transactions_;
};

/// Ranking of exactly `items` (a subset of O(pi)) in the relative order
/// given by `pi`. Throws PreconditionError if some item is not ranked by pi.
Ranking restrict(const Ranking& pi, std::span<const Item> items);

/// True iff `pi` is a subranking of `other`: O(pi) is a subset of O(other)
/// and `other` orders those items as `pi` does. Reflexive.
bool is_subranking(const Ranking& pi, const Ranking& other);

/// Appends `item` after the last ranked item. Throws if already ranked.
Ranking tail_extend(const Ranking& rho, Item item);

/// All rankings over O(a) u O(b) whose restrictions to O(a) and O(b) are
/// a and b, sorted by operator<=>. Empty iff a and b disagree on a pair.
std::vector<Ranking> oplus(const Ranking& a, const Ranking& b);

/// True iff a and b order their shared items identically (oplus non-empty).
bool consistent(const Ranking& a, const Ranking& b);

struct Support {
  std::size_t absolute = 0;
  double relative = 0.0;
};

/// Direct-scan support of a pattern.
Support support(const RankDatabase& db, const Ranking& pi);

}  // namespace rankmine
