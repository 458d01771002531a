#include "rankmine/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "rankmine/error.hpp"

namespace rankmine::oracle {

namespace {

void check_items(std::size_t k, const OracleLimits& limits) {
  if (k > limits.max_items) {
    throw LimitError("oracle: " + std::to_string(k) + " items exceed the cap of " +
                     std::to_string(limits.max_items));
  }
}

void check_db(const RankDatabase& db, const OracleLimits& limits) {
  check_items(db.num_items(), limits);
  if (db.size() > limits.max_transactions) {
    throw LimitError("oracle: " + std::to_string(db.size()) +
                     " transactions exceed the cap of " +
                     std::to_string(limits.max_transactions));
  }
}

/// Position array of the transaction restricted to the items in `mask`
/// (bit b selects the transaction's b-th ranked item).
std::vector<std::uint32_t> sub_positions(const std::vector<std::uint32_t>& positions,
                                         std::uint32_t mask) {
  std::vector<std::uint32_t> out(positions.size(), 0);
  std::vector<std::pair<std::uint32_t, std::size_t>> ranked;
  for (std::size_t item = 0; item < positions.size(); ++item) {
    if (positions[item]) ranked.emplace_back(positions[item], item);
  }
  std::sort(ranked.begin(), ranked.end());
  std::uint32_t next = 1;
  for (std::size_t b = 0; b < ranked.size(); ++b) {
    if (mask >> b & 1u) out[ranked[b].second] = next++;
  }
  return out;
}

std::vector<PatternEntry> all_frequent(const RankDatabase& db, std::size_t delta) {
  std::set<std::vector<std::uint32_t>> candidates;
  for (const auto& t : db.transactions()) {
    const auto& pos = t.positions();
    const std::size_t len = static_cast<std::size_t>(
        std::count_if(pos.begin(), pos.end(), [](std::uint32_t p) { return p != 0; }));
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      if (std::popcount(mask) >= 2) candidates.insert(sub_positions(pos, mask));
    }
  }
  std::vector<PatternEntry> out;
  for (const auto& positions : candidates) {
    const Ranking pi = Ranking::from_positions(positions);
    std::size_t count = 0;
    for (const auto& t : db.transactions()) count += contains(t, pi);
    if (count >= delta) out.push_back({pi, count});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.ranking < b.ranking; });
  return out;
}

bool proper_super(const Ranking& super, const Ranking& sub) {
  return super.size() > sub.size() && contains(super, sub);
}

}  // namespace

bool contains(const Ranking& super, const Ranking& sub) {
  const auto& a = sub.positions();
  const auto& b = super.positions();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    if (!b[i]) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] && (a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

std::vector<Ranking> linear_extensions(const Ranking& pi, const OracleLimits& limits) {
  const std::size_t k = pi.universe_size();
  check_items(k, limits);
  std::vector<Item> perm(k);
  std::iota(perm.begin(), perm.end(), Item{0});
  std::vector<Ranking> out;
  do {
    Ranking full = Ranking::from_order(k, perm);
    if (contains(full, pi)) out.push_back(std::move(full));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ranking> joint_extensions(const Ranking& a, const Ranking& b,
                                      const OracleLimits& limits) {
  const auto ea = linear_extensions(a, limits);
  const auto eb = linear_extensions(b, limits);
  std::vector<Ranking> out;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return out;
}

std::vector<PatternEntry> brute_frequent(const RankDatabase& db, std::size_t delta,
                                         const OracleLimits& limits) {
  check_db(db, limits);
  return all_frequent(db, delta);
}

std::vector<PatternEntry> brute_closed(const RankDatabase& db, std::size_t delta,
                                       const OracleLimits& limits) {
  check_db(db, limits);
  const auto frequent = all_frequent(db, delta);
  // Only a superranking of equal support can absorb a pattern.
  std::map<std::size_t, std::vector<const PatternEntry*>> by_support;
  for (const auto& e : frequent) by_support[e.support].push_back(&e);
  std::vector<PatternEntry> out;
  for (const auto& e : frequent) {
    const auto& peers = by_support[e.support];
    const bool absorbed = std::any_of(peers.begin(), peers.end(), [&](const PatternEntry* s) {
      return proper_super(s->ranking, e.ranking);
    });
    if (!absorbed) out.push_back(e);
  }
  return out;
}

std::vector<PatternEntry> brute_maximal(const RankDatabase& db, std::size_t delta,
                                        const OracleLimits& limits) {
  check_db(db, limits);
  const auto frequent = all_frequent(db, delta);
  std::vector<PatternEntry> out;
  for (const auto& e : frequent) {
    const bool dominated = std::any_of(frequent.begin(), frequent.end(), [&](const auto& s) {
      return proper_super(s.ranking, e.ranking);
    });
    if (!dominated) out.push_back(e);
  }
  return out;
}

std::vector<Ranking> brute_max_intersection(std::span<const Ranking> transactions,
                                            const OracleLimits& limits) {
  if (transactions.empty()) {
    throw PreconditionError("maximal intersection of an empty transaction set");
  }
  if (transactions.size() > limits.max_transactions) {
    throw LimitError("oracle: too many transactions");
  }
  const std::size_t k = transactions.front().universe_size();
  check_items(k, limits);
  const auto& head = transactions.front();
  const auto& pos = head.positions();
  const std::size_t len = head.size();

  std::vector<Ranking> common;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (std::popcount(mask) < 2) continue;
    const Ranking candidate = Ranking::from_positions(sub_positions(pos, mask));
    const bool shared = std::all_of(transactions.begin(), transactions.end(),
                                    [&](const Ranking& t) { return contains(t, candidate); });
    if (shared) common.push_back(candidate);
  }
  std::vector<Ranking> out;
  for (const auto& c : common) {
    const bool dominated = std::any_of(common.begin(), common.end(),
                                       [&](const Ranking& s) { return proper_super(s, c); });
    if (!dominated) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ranking> brute_h_closure(const RankDatabase& db, const Ranking& pi,
                                     const OracleLimits& limits) {
  check_db(db, limits);
  std::vector<Ranking> holding;
  for (const auto& t : db.transactions()) {
    if (contains(t, pi)) holding.push_back(t);
  }
  return brute_max_intersection(holding, limits);
}

std::uint64_t count_all_rankings(std::size_t k) {
  if (k < 2) throw PreconditionError("count_all_rankings: K must be at least 2");
  // K!/(K-k)! for k = 1, 2, ... is a running falling product.
  std::uint64_t total = 0;
  std::uint64_t falling = k;
  for (std::size_t len = 2; len <= k; ++len) {
    if (__builtin_mul_overflow(falling, k - len + 1, &falling) ||
        __builtin_add_overflow(total, falling, &total)) {
      throw LimitError("count_all_rankings: result exceeds 64 bits");
    }
  }
  return total;
}

std::uint64_t enumerate_all_rankings(std::size_t k, const OracleLimits& limits) {
  if (k < 2) throw PreconditionError("enumerate_all_rankings: K must be at least 2");
  check_items(k, limits);
  std::vector<char> used(k, 0);
  std::uint64_t count = 0;
  auto walk = [&](auto& self, std::size_t depth) -> void {
    if (depth >= 2) ++count;
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      self(self, depth + 1);
      used[i] = 0;
    }
  };
  walk(walk, 0);
  return count;
}

PatternStore to_store(const std::vector<PatternEntry>& entries) {
  PatternStore store;
  for (const auto& e : entries) store.add(e.ranking, e.support);
  return store;
}

}  // namespace rankmine::oracle
