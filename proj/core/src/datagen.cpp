#include "rankmine/datagen.hpp"

#include <numeric>

#include "rankmine/error.hpp"
#include "rankmine/random.hpp"
#include "rankmine/tesma.hpp"

namespace rankmine {

namespace {

void swap_pass(std::vector<Item>& order, double p, Rng& rng) {
  for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
    if (rng.bernoulli(p)) std::swap(order[pos], order[pos + 1]);
  }
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError(std::string(what) + " must lie in [0, 1]");
  }
}

RankDatabase gen_basic(const GenSpec& spec, Rng& rng) {
  const std::size_t k = spec.num_items;
  if (k < 2) throw PreconditionError("gen: K must be at least 2");
  if (spec.num_cores < 1 || spec.size < spec.num_cores) {
    throw PreconditionError("gen: need N >= n >= 1");
  }
  check_probability(spec.swap_probability, "gen: p");

  std::vector<std::vector<Item>> cores(spec.num_cores, std::vector<Item>(k));
  for (auto& core : cores) {
    std::iota(core.begin(), core.end(), Item{0});
    rng.shuffle(core);
  }
  std::vector<Ranking> rows;
  rows.reserve(spec.size);
  auto emit = [&](const std::vector<Item>& core) {
    std::vector<Item> replica = core;
    swap_pass(replica, spec.swap_probability, rng);
    rows.push_back(Ranking::from_order(k, replica));
  };
  const std::size_t copies = spec.size / spec.num_cores;
  for (const auto& core : cores) {
    for (std::size_t c = 0; c < copies; ++c) emit(core);
  }
  for (std::size_t c = 0; c < spec.size % spec.num_cores; ++c) emit(cores[c]);
  return RankDatabase(ItemUniverse::numbered(k), std::move(rows));
}

}  // namespace

RankDatabase gen_basic(const GenSpec& spec) {
  Rng rng(spec.seed);
  return gen_basic(spec, rng);
}

void gen_increasing_frequent(const GenSpec& spec, const DatasetSink& sink) {
  Rng rng(spec.seed);
  const RankDatabase basic = gen_basic(spec, rng);
  const PatternStore frequent = mine_frequent(basic, MiningConfig{spec.threshold, 1});
  if (frequent.empty()) {
    throw Error("gen increasing: the basic dataset has no frequent ranking");
  }

  std::vector<std::vector<Ranking>> pools;
  for (const auto& list : frequent.by_length()) {
    auto& pool = pools.emplace_back();
    for (const auto& e : list) pool.push_back(e.ranking);
  }

  std::vector<Ranking> drawn;
  std::size_t level = 0;
  for (std::size_t j = 1; j <= frequent.size(); ++j) {
    while (pools[level].empty()) ++level;
    auto& pool = pools[level];
    const std::size_t pick = rng.uniform(pool.size());
    Ranking pi = std::move(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));

    std::erase_if(drawn, [&](const Ranking& r) { return is_subranking(r, pi); });
    drawn.push_back(std::move(pi));
    if (drawn.size() > spec.size) {
      throw Error("gen increasing: more distinct rows than N=" + std::to_string(spec.size));
    }
    std::vector<Ranking> rows;
    rows.reserve(spec.size);
    for (std::size_t r = 0; r < spec.size; ++r) rows.push_back(drawn[r % drawn.size()]);
    sink(j, RankDatabase(basic.universe(), std::move(rows)));
  }
}

std::vector<RankDatabase> gen_increasing_frequent(const GenSpec& spec) {
  std::vector<RankDatabase> out;
  gen_increasing_frequent(spec, [&](std::size_t, const RankDatabase& d) { out.push_back(d); });
  return out;
}

RankDatabase inflate(const RankDatabase& db, std::size_t v, double p_swap,
                     std::uint64_t seed) {
  if (v < 1) throw PreconditionError("inflate: factor must be at least 1");
  check_probability(p_swap, "inflate: p_swap");
  Rng rng(seed);
  std::vector<Ranking> rows;
  rows.reserve(v * db.size());
  std::vector<Item> order;
  for (std::size_t copy = 0; copy < v; ++copy) {
    for (const auto& t : db.transactions()) {
      order.assign(t.order().begin(), t.order().end());
      swap_pass(order, p_swap, rng);
      rows.push_back(Ranking::from_order(db.num_items(), order));
    }
  }
  return RankDatabase(db.universe(), std::move(rows));
}

RankDatabase extend_rankings(const RankDatabase& db, Item preferred, Item other,
                             std::uint64_t seed, std::optional<std::string> new_item) {
  const std::size_t k = db.num_items();
  if (preferred >= k || other >= k || preferred == other) {
    throw PreconditionError("extend: anchor pair must name two distinct items");
  }
  std::vector<std::string> names = db.universe().names();
  if (!new_item) {
    new_item = db.universe().is_numbered() ? std::to_string(k + 1) : "o" + std::to_string(k + 1);
  }
  if (db.universe().find(*new_item) >= 0) {
    throw PreconditionError("extend: item '" + *new_item + "' already exists");
  }
  names.push_back(*new_item);
  const Item fresh = static_cast<Item>(k);

  Rng rng(seed);
  std::vector<Ranking> rows;
  rows.reserve(db.size());
  std::vector<Item> order;
  for (const auto& t : db.transactions()) {
    order.assign(t.order().begin(), t.order().end());
    const std::size_t len = order.size();
    std::size_t slot;  // 1-based target position of the new item
    if (t.contains(preferred) && t.contains(other) && t.prefers(preferred, other)) {
      const std::size_t r = t.position(other);
      slot = r + 1 + rng.uniform(len + 1 - r);
    } else {
      slot = 1 + rng.uniform(len + 1);
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(slot - 1), fresh);
    rows.push_back(Ranking::from_order(k + 1, order));
  }
  return RankDatabase(ItemUniverse(std::move(names)), std::move(rows));
}

}  // namespace rankmine
