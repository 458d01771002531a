#include "rankmine/gpminer.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "rankmine/error.hpp"
#include "rankmine/tesma.hpp"

namespace rankmine {

ClosedMiningStats& ClosedMiningStats::operator+=(const ClosedMiningStats& o) {
  candidates += o.candidates;
  unchanged_closure += o.unchanged_closure;
  rebuilt_closure += o.rebuilt_closure;
  prefix_failures += o.prefix_failures;
  deleted += o.deleted;
  patterns += o.patterns;
  max_pruning_steps = std::max(max_pruning_steps, o.max_pruning_steps);
  return *this;
}

ClosedExpander::ClosedExpander(const RankDatabase& db, const PairIndex& index)
    : db_(db),
      index_(index),
      all_pairs_(all_pending_pairs(index)),
      in_path_(index.num_items(), 0) {}

void ClosedExpander::record(std::size_t steps, ClosedMiningStats& stats) const {
  ++stats.candidates;
  stats.max_pruning_steps = std::max(stats.max_pruning_steps, steps);
}

std::size_t ClosedExpander::store(const std::vector<Item>& rho, std::size_t support,
                                  ClosedMiningStats& stats) {
  found_.push_back({PatternEntry{Ranking::from_order(index_.num_items(), rho), support}});
  ++stats.patterns;
  return found_.size() - 1;
}

std::vector<PatternEntry> ClosedExpander::run_root(Item first, Item second,
                                                   ClosedMiningStats& stats) {
  const TransactionSet* t = index_.find(first, second);
  if (!t) throw PreconditionError("run_root: pair is not frequent");
  found_.clear();

  std::size_t steps = 0;
  auto update = s1p_intersect(*t, all_pairs_, S1pMatrix(index_.num_items()), &steps);
  const auto forest = build_closure_forest(db_, *t, update.s1p, &steps);
  std::vector<Item> rho{first, second};
  const auto postfix =
      prefix_test(forest, Ranking::from_order(index_.num_items(), rho), &steps);
  record(steps, stats);
  if (!postfix) {
    ++stats.prefix_failures;
    return {};
  }
  const std::size_t slot = store(rho, t->count(), stats);
  in_path_[first] = in_path_[second] = 1;
  expand_closed(rho, slot, *t, forest, *postfix, update.s1p, update.pending, stats);
  in_path_[first] = in_path_[second] = 0;

  std::vector<PatternEntry> out;
  for (auto& f : found_) {
    if (f.alive) out.push_back(std::move(f.entry));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.ranking.size() < b.ranking.size();
  });
  found_.clear();
  return out;
}

void ClosedExpander::expand_closed(std::vector<Item>& rho, std::size_t rho_slot,
                                   const TransactionSet& t,
                                   const ClosureForest& forest,
                                   ClosureForest::NodeId postfix,
                                   const S1pMatrix& s1p, const PendingPairs& lp,
                                   ClosedMiningStats& stats) {
  const std::size_t delta = index_.min_support();
  const std::size_t size = found_[rho_slot].entry.support;
  const std::size_t k = index_.num_items();
  bool longer_found = false;
  TransactionSet child(index_.num_transactions());

  for (const auto& entry : index_.row(rho.back())) {
    const Item o = entry.item;
    if (in_path_[o]) continue;
    const std::size_t count = BitVector::and_into(t, entry.transactions, child);
    if (count < delta) continue;

    rho.push_back(o);
    in_path_[o] = 1;
    const Ranking extended = Ranking::from_order(k, rho);
    std::size_t steps = 0;
    if (count == size) {
      // Same transactions, same forest: only o's place below the postfix
      // root is left to check.
      longer_found = true;
      ++stats.unchanged_closure;
      const auto next =
          prefix_test_recursive(extended, forest, postfix, rho.size() - 1, &steps);
      record(steps, stats);
      if (next) {
        const std::size_t slot = store(rho, count, stats);
        expand_closed(rho, slot, t, forest, *next, s1p, lp, stats);
      } else {
        ++stats.prefix_failures;
      }
    } else {
      ++stats.rebuilt_closure;
      auto update = s1p_intersect(child, lp, s1p, &steps);
      const auto sub_forest = build_closure_forest(db_, child, update.s1p, &steps);
      const auto next = prefix_test(sub_forest, extended, &steps);
      record(steps, stats);
      if (next) {
        const std::size_t slot = store(rho, count, stats);
        expand_closed(rho, slot, child, sub_forest, *next, update.s1p,
                      update.pending, stats);
      } else {
        ++stats.prefix_failures;
      }
    }
    in_path_[o] = 0;
    rho.pop_back();
  }

  if (longer_found) {
    found_[rho_slot].alive = false;
    ++stats.deleted;
    --stats.patterns;
  }
}

PatternStore mine_closed(const RankDatabase& db, const MiningConfig& cfg,
                         ClosedMiningStats* stats) {
  const PairIndex index = build_pair_index(db, cfg);
  ClosedMiningStats total;
  total.min_support = index.min_support();
  total.frequent_pairs = index.size();

  std::vector<std::pair<Item, Item>> roots;
  for (Item i = 0; i < index.num_items(); ++i) {
    for (const auto& e : index.row(i)) roots.emplace_back(i, e.item);
  }

  std::vector<std::vector<PatternEntry>> parts(roots.size());
  std::vector<ClosedMiningStats> part_stats(roots.size());
  if (cfg.threads <= 1) {
    ClosedExpander expander(db, index);
    for (std::size_t r = 0; r < roots.size(); ++r) {
      parts[r] = expander.run_root(roots[r].first, roots[r].second, part_stats[r]);
    }
  } else {
    detail::parallel_for(roots.size(), cfg.threads, [&](std::size_t r) {
      ClosedExpander expander(db, index);
      parts[r] = expander.run_root(roots[r].first, roots[r].second, part_stats[r]);
    });
  }

  PatternStore out;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    for (auto& e : parts[r]) out.add(std::move(e.ranking), e.support);
    total += part_stats[r];
  }
  if (stats) *stats = total;
  return out;
}

PatternStore post_tesma(const PatternStore& frequent) {
  const auto& lists = frequent.by_length();
  PatternStore out;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (const auto& e : lists[i]) {
      bool absorbed = false;
      if (i + 1 < lists.size()) {
        for (const auto& super : lists[i + 1]) {
          if (super.support == e.support && is_subranking(e.ranking, super.ranking)) {
            absorbed = true;
            break;
          }
        }
      }
      if (!absorbed) out.add(e.ranking, e.support);
    }
  }
  return out;
}

PatternStore post_tesma(const RankDatabase& db, const MiningConfig& cfg) {
  return post_tesma(mine_frequent(db, cfg));
}

namespace {

TransactionSet scan_closure(const RankDatabase& db, const Ranking& pi) {
  TransactionSet t(db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (is_subranking(pi, db[i])) t.set(i);
  }
  return t;
}

}  // namespace

std::vector<Ranking> h_closure_of(const RankDatabase& db, const Ranking& pi) {
  const TransactionSet t = scan_closure(db, pi);
  if (t.none()) throw PreconditionError("h-closure of a ranking no transaction contains");
  auto paths = build_closure_forest(db, t, S1pMatrix::from_transactions(db, t)).paths();
  std::sort(paths.begin(), paths.end());
  return paths;
}

bool is_closed(const RankDatabase& db, const Ranking& pi) {
  if (!pi.is_pattern()) throw PreconditionError("is_closed: pattern must rank two items");
  const auto h = h_closure_of(db, pi);
  return std::find(h.begin(), h.end(), pi) != h.end();
}

}  // namespace rankmine
