#include "rankmine/pair_index.hpp"

#include <algorithm>
#include <cmath>

#include "rankmine/error.hpp"

namespace rankmine {

Threshold Threshold::relative(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw PreconditionError("relative threshold must lie in (0, 1]");
  }
  return Threshold(fraction);
}

Threshold Threshold::absolute(std::size_t count) {
  if (count < 1) throw PreconditionError("absolute threshold must be >= 1");
  return Threshold(count);
}

std::size_t Threshold::resolve(std::size_t n) const {
  if (!is_relative()) return count();
  // Products such as 0.01 * 100000 may land a hair above the integer.
  const double exact = fraction() * static_cast<double>(n);
  auto delta = static_cast<std::size_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
  return std::clamp<std::size_t>(delta, 1, std::max<std::size_t>(n, 1));
}

PairIndex PairIndex::build(const RankDatabase& db, std::size_t min_support) {
  const std::size_t k = db.num_items();
  const std::size_t n = db.size();
  std::vector<TransactionSet> all(k * k, TransactionSet(n));
  for (std::size_t t = 0; t < n; ++t) {
    const auto order = db[t].order();
    for (std::size_t a = 0; a < order.size(); ++a) {
      const std::size_t row = static_cast<std::size_t>(order[a]) * k;
      for (std::size_t b = a + 1; b < order.size(); ++b) all[row + order[b]].set(t);
    }
  }

  PairIndex index;
  index.rows_.resize(k);
  index.slot_.assign(k * k, -1);
  index.num_transactions_ = n;
  index.min_support_ = min_support;
  for (Item i = 0; i < k; ++i) {
    for (Item j = 0; j < k; ++j) {
      if (i == j) continue;
      auto& t = all[i * k + j];
      if (t.count() >= min_support) {
        index.slot_[i * k + j] = static_cast<std::int32_t>(index.rows_[i].size());
        index.rows_[i].push_back(Entry{j, std::move(t)});
        ++index.num_pairs_;
      }
    }
  }
  return index;
}

const TransactionSet* PairIndex::find(Item i, Item j) const {
  const std::size_t k = rows_.size();
  if (i >= k || j >= k) return nullptr;
  auto s = slot_[i * k + j];
  return s < 0 ? nullptr : &rows_[i][static_cast<std::size_t>(s)].transactions;
}

std::optional<TransactionSet> PairIndex::closure_of(const Ranking& pi) const {
  if (!pi.is_pattern()) {
    throw PreconditionError("closure_of: pattern must rank at least two items");
  }
  const auto order = pi.order();
  const auto* first = find(order[0], order[1]);
  if (!first) return std::nullopt;
  TransactionSet t = *first;
  for (std::size_t p = 2; p < order.size(); ++p) {
    const auto* next = find(order[p - 1], order[p]);
    if (!next) return std::nullopt;
    t &= *next;
  }
  return t;
}

}  // namespace rankmine
