#include "rankmine/ranking.hpp"

#include <algorithm>

#include "rankmine/error.hpp"

namespace rankmine {

ItemUniverse::ItemUniverse(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.size() < 2) {
    throw PreconditionError("an item universe needs at least two items");
  }
  lookup_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw PreconditionError("empty item name");
    }
    if (!lookup_.emplace(names_[i], static_cast<Item>(i)).second) {
      throw PreconditionError("duplicate item name '" + names_[i] + "'");
    }
  }
}

ItemUniverse ItemUniverse::numbered(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) names.push_back(std::to_string(i));
  return ItemUniverse(std::move(names));
}

std::int64_t ItemUniverse::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  return it == lookup_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Item ItemUniverse::index_of(std::string_view name) const {
  auto idx = find(name);
  if (idx < 0) {
    throw PreconditionError("unknown item '" + std::string(name) + "'");
  }
  return static_cast<Item>(idx);
}

bool ItemUniverse::is_numbered() const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] != std::to_string(i + 1)) return false;
  }
  return true;
}

Ranking Ranking::from_order(std::size_t universe_size,
                            std::span<const Item> order) {
  Ranking r;
  r.positions_.assign(universe_size, 0);
  r.order_.assign(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Item item = order[i];
    if (item >= universe_size) {
      throw PreconditionError("item index " + std::to_string(item) +
                              " outside universe of size " +
                              std::to_string(universe_size));
    }
    if (r.positions_[item] != 0) {
      throw PreconditionError("item " + std::to_string(item) +
                              " ranked twice");
    }
    r.positions_[item] = static_cast<std::uint32_t>(i + 1);
  }
  return r;
}

Ranking Ranking::from_positions(std::span<const std::uint32_t> positions) {
  Ranking r;
  r.positions_.assign(positions.begin(), positions.end());
  std::size_t k = 0;
  for (auto p : positions) k += (p != 0);
  r.order_.assign(k, 0);
  std::vector<bool> seen(k + 1, false);
  for (std::size_t j = 0; j < positions.size(); ++j) {
    auto p = positions[j];
    if (p == 0) continue;
    if (p > k) {
      throw PreconditionError("position " + std::to_string(p) +
                              " leaves a gap (ranked items: " +
                              std::to_string(k) + ")");
    }
    if (seen[p]) {
      throw PreconditionError("position " + std::to_string(p) + " repeated");
    }
    seen[p] = true;
    r.order_[p - 1] = static_cast<Item>(j);
  }
  return r;
}

std::strong_ordering operator<=>(const Ranking& a, const Ranking& b) {
  if (auto c = a.order_.size() <=> b.order_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.order_.begin(), a.order_.end(), b.order_.begin(), b.order_.end());
}

std::size_t RankingHash::operator()(const Ranking& r) const noexcept {
  // FNV-1a over the order view.
  std::uint64_t h = 1469598103934665603ull;
  for (Item item : r.order()) {
    h ^= item + 1;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Ranking& ranking, const ItemUniverse& universe) {
  std::string out;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (i) out += '>';
    out += universe.name(ranking[i]);
  }
  return out;
}

RankDatabase::RankDatabase(ItemUniverse universe,
                           std::vector<Ranking> transactions)
    : universe_(std::move(universe)), transactions_(std::move(transactions)) {
  if (transactions_.empty()) {
    throw PreconditionError("a rank database needs at least one transaction");
  }
  for (std::size_t i = 0; i < transactions_.size(); ++i) {
    const auto& t = transactions_[i];
    if (t.universe_size() != universe_.size()) {
      throw PreconditionError("transaction " + std::to_string(i + 1) +
                              " is over a different universe");
    }
    if (!t.is_pattern()) {
      throw PreconditionError("transaction " + std::to_string(i + 1) +
                              " ranks fewer than two items");
    }
  }
}

Ranking RankDatabase::ranking(std::string_view order_text) const {
  std::vector<Item> order;
  std::size_t start = 0;
  while (start <= order_text.size()) {
    auto end = order_text.find('>', start);
    if (end == std::string_view::npos) end = order_text.size();
    auto token = order_text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    order.push_back(universe_.index_of(token));
    start = end + 1;
  }
  return Ranking::from_order(universe_.size(), order);
}

Ranking restrict(const Ranking& pi, std::span<const Item> items) {
  std::vector<bool> keep(pi.universe_size(), false);
  for (Item item : items) {
    if (!pi.contains(item)) {
      throw PreconditionError("restrict: item " + std::to_string(item) +
                              " is not ranked");
    }
    keep[item] = true;
  }
  std::vector<Item> order;
  order.reserve(items.size());
  for (Item item : pi.order()) {
    if (keep[item]) order.push_back(item);
  }
  return Ranking::from_order(pi.universe_size(), order);
}

bool is_subranking(const Ranking& pi, const Ranking& other) {
  if (pi.universe_size() != other.universe_size()) {
    throw PreconditionError("is_subranking: rankings over different universes");
  }
  if (pi.size() > other.size()) return false;
  std::uint32_t prev = 0;
  for (Item item : pi.order()) {
    std::uint32_t p = other.positions()[item];
    if (p == 0 || p <= prev) return false;
    prev = p;
  }
  return true;
}

Ranking tail_extend(const Ranking& rho, Item item) {
  if (item >= rho.universe_size()) {
    throw PreconditionError("tail_extend: item outside universe");
  }
  if (rho.contains(item)) {
    throw PreconditionError("tail_extend: item " + std::to_string(item) +
                            " already ranked");
  }
  std::vector<Item> order(rho.order().begin(), rho.order().end());
  order.push_back(item);
  return Ranking::from_order(rho.universe_size(), order);
}

bool consistent(const Ranking& a, const Ranking& b) {
  // Walk a's shared items in a's order; b must see them increasing.
  std::uint32_t prev = 0;
  for (Item item : a.order()) {
    std::uint32_t p = b.positions()[item];
    if (p == 0) continue;
    if (p <= prev) return false;
    prev = p;
  }
  return true;
}

namespace {

void merge_orders(const Ranking& a, const Ranking& b, std::size_t i,
                  std::size_t j, std::vector<Item>& current,
                  std::vector<Ranking>& out) {
  const auto ao = a.order();
  const auto bo = b.order();
  if (i == ao.size() && j == bo.size()) {
    out.push_back(Ranking::from_order(a.universe_size(), current));
    return;
  }
  const bool a_left = i < ao.size();
  const bool b_left = j < bo.size();
  const bool a_shared = a_left && b.contains(ao[i]);
  const bool b_shared = b_left && a.contains(bo[j]);

  if (a_left && !a_shared) {
    current.push_back(ao[i]);
    merge_orders(a, b, i + 1, j, current, out);
    current.pop_back();
  }
  if (b_left && !b_shared) {
    current.push_back(bo[j]);
    merge_orders(a, b, i, j + 1, current, out);
    current.pop_back();
  }
  // Shared items are pinned: both sequences must reach the same one.
  if (a_shared && b_shared && ao[i] == bo[j]) {
    current.push_back(ao[i]);
    merge_orders(a, b, i + 1, j + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Ranking> oplus(const Ranking& a, const Ranking& b) {
  if (a.universe_size() != b.universe_size()) {
    throw PreconditionError("oplus: rankings over different universes");
  }
  std::vector<Ranking> out;
  if (!consistent(a, b)) return out;
  std::vector<Item> current;
  current.reserve(a.size() + b.size());
  merge_orders(a, b, 0, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

Support support(const RankDatabase& db, const Ranking& pi) {
  Support s;
  for (const auto& t : db.transactions()) {
    if (is_subranking(pi, t)) ++s.absolute;
  }
  s.relative = static_cast<double>(s.absolute) / static_cast<double>(db.size());
  return s;
}

}  // namespace rankmine
