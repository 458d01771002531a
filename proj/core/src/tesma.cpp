#include "rankmine/tesma.hpp"

#include <unordered_set>

#include "parallel.hpp"
#include "rankmine/error.hpp"

namespace rankmine {

namespace {

class FrequentExpander {
 public:
  FrequentExpander(const PairIndex& index, PatternStore& store, MiningStats& stats)
      : index_(index),
        store_(store),
        stats_(stats),
        delta_(index.min_support()),
        in_path_(index.num_items(), 0),
        stack_(index.num_items() + 1, TransactionSet(index.num_transactions())) {
    path_.reserve(index.num_items());
  }

  void run(std::span<const Item> prefix, const TransactionSet& t) {
    path_.assign(prefix.begin(), prefix.end());
    for (Item item : prefix) in_path_[item] = 1;
    expand(t);
    for (Item item : prefix) in_path_[item] = 0;
    path_.clear();
  }

 private:
  void expand(const TransactionSet& t) {
    ++stats_.expansions;
    const std::size_t next_len = path_.size() + 1;
    if (next_len > index_.num_items()) return;
    TransactionSet& child = stack_[next_len];
    for (const auto& entry : index_.row(path_.back())) {
      if (in_path_[entry.item]) continue;
      ++stats_.candidate_ands;
      const std::size_t count = BitVector::and_into(t, entry.transactions, child);
      if (count < delta_) continue;
      path_.push_back(entry.item);
      in_path_[entry.item] = 1;
      store_.add(Ranking::from_order(index_.num_items(), path_), count);
      ++stats_.patterns;
      expand(child);
      in_path_[entry.item] = 0;
      path_.pop_back();
    }
  }

  const PairIndex& index_;
  PatternStore& store_;
  MiningStats& stats_;
  std::size_t delta_;
  std::vector<Item> path_;
  std::vector<char> in_path_;
  std::vector<TransactionSet> stack_;  ///< stack_[len]: g of the path prefix of length len
};

struct Root {
  Item first;
  const PairIndex::Entry* entry;
};

std::vector<Root> collect_roots(const PairIndex& index) {
  std::vector<Root> roots;
  for (Item i = 0; i < index.num_items(); ++i) {
    for (const auto& e : index.row(i)) roots.push_back(Root{i, &e});
  }
  return roots;
}

}  // namespace

PatternStore mine_frequent(const PairIndex& index, const MiningConfig& cfg,
                           MiningStats* stats) {
  MiningStats local;
  local.min_support = index.min_support();
  local.frequent_pairs = index.size();
  const auto roots = collect_roots(index);
  const std::size_t k = index.num_items();

  PatternStore store;
  if (cfg.threads <= 1) {
    FrequentExpander expander(index, store, local);
    for (const auto& root : roots) {
      const Item pair[2] = {root.first, root.entry->item};
      store.add(Ranking::from_order(k, pair), root.entry->transactions.count());
      ++local.patterns;
      expander.run(pair, root.entry->transactions);
    }
  } else {
    std::vector<PatternStore> parts(roots.size());
    std::vector<MiningStats> part_stats(roots.size());
    detail::parallel_for(roots.size(), cfg.threads, [&](std::size_t r) {
      const auto& root = roots[r];
      const Item pair[2] = {root.first, root.entry->item};
      parts[r].add(Ranking::from_order(k, pair), root.entry->transactions.count());
      ++part_stats[r].patterns;
      FrequentExpander expander(index, parts[r], part_stats[r]);
      expander.run(pair, root.entry->transactions);
    });
    // Seeds first, then the deeper lists in root order, as the sequential
    // traversal produces them.
    for (std::size_t r = 0; r < roots.size(); ++r) {
      store.append(parts[r]);
      local += part_stats[r];
    }
  }
  if (stats) *stats = local;
  return store;
}

PatternStore mine_frequent(const RankDatabase& db, const MiningConfig& cfg,
                           MiningStats* stats) {
  return mine_frequent(build_pair_index(db, cfg), cfg, stats);
}

void extend_depth_first(const Ranking& rho, const TransactionSet& rho_transactions,
                        const PairIndex& index, PatternStore& store,
                        MiningStats* stats) {
  if (!rho.is_pattern()) {
    throw PreconditionError("extend_depth_first: rho must rank at least two items");
  }
  if (rho_transactions.width() != index.num_transactions()) {
    throw PreconditionError("extend_depth_first: transaction set width mismatch");
  }
  MiningStats local;
  FrequentExpander expander(index, store, local);
  expander.run(rho.order(), rho_transactions);
  if (stats) {
    *stats += local;
  }
}

PatternStore extract_maximal(const PatternStore& frequent) {
  // A ranking with a frequent proper superranking also has a frequent one
  // exactly one item longer (restrict the superranking), so it suffices to
  // knock out every one-item deletion of each (k+1)-pattern.
  std::unordered_set<Ranking, RankingHash> dominated;
  std::vector<Item> items;
  for (const auto& list : frequent.by_length()) {
    for (const auto& e : list) {
      const auto order = e.ranking.order();
      if (order.size() < 3) continue;
      for (std::size_t drop = 0; drop < order.size(); ++drop) {
        items.clear();
        for (std::size_t p = 0; p < order.size(); ++p) {
          if (p != drop) items.push_back(order[p]);
        }
        dominated.insert(Ranking::from_order(e.ranking.universe_size(), items));
      }
    }
  }
  PatternStore out;
  for (const auto& list : frequent.by_length()) {
    for (const auto& e : list) {
      if (!dominated.contains(e.ranking)) out.add(e.ranking, e.support);
    }
  }
  return out;
}

}  // namespace rankmine
