#include "rankmine/s1p_matrix.hpp"

#include "rankmine/error.hpp"

namespace rankmine {

S1pMatrix::S1pMatrix(std::size_t k) : succ_(k, BitVector(k)), visited_(k) {}

S1pMatrix S1pMatrix::from_transactions(const RankDatabase& db,
                                       const TransactionSet& t) {
  const auto first = t.find_first();
  if (!first) throw PreconditionError("s1p matrix of an empty transaction set");
  const std::size_t k = db.num_items();
  S1pMatrix m(k);
  const Ranking& head = db[*first];
  const auto order = head.order();
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      bool shared = true;
      for (auto id = t.find_next(*first); id && shared; id = t.find_next(*id)) {
        const Ranking& r = db[*id];
        shared = r.contains(order[a]) && r.contains(order[b]) &&
                 r.prefers(order[a], order[b]);
      }
      if (shared) m.set_preference(order[a], order[b]);
    }
  }
  return m;
}

void S1pMatrix::set_preference(Item i, Item j) {
  if (i == j) throw PreconditionError("s1p: an item cannot precede itself");
  succ_[i].set(j);
}

std::size_t S1pMatrix::num_preferences() const {
  std::size_t n = 0;
  for (const auto& row : succ_) n += row.count();
  return n;
}

bool S1pMatrix::is_asymmetric() const {
  for (Item i = 0; i < succ_.size(); ++i) {
    if (succ_[i].test(i)) return false;
    for (auto j = succ_[i].find_first(); j; j = succ_[i].find_next(*j)) {
      if (succ_[*j].test(i)) return false;
    }
  }
  return true;
}

bool S1pMatrix::is_transitive() const {
  for (Item i = 0; i < succ_.size(); ++i) {
    for (auto j = succ_[i].find_first(); j; j = succ_[i].find_next(*j)) {
      if (!succ_[*j].is_subset_of(succ_[i])) return false;
    }
  }
  return true;
}

PendingPairs all_pending_pairs(const PairIndex& index) {
  PendingPairs out;
  out.reserve(index.size());
  for (Item i = 0; i < index.num_items(); ++i) {
    for (const auto& e : index.row(i)) out.push_back({i, e.item, &e.transactions});
  }
  return out;
}

S1pUpdate s1p_intersect(const TransactionSet& t, const PendingPairs& lp,
                        const S1pMatrix& s1p, std::size_t* steps) {
  S1pUpdate out{s1p, {}};
  out.pending.reserve(lp.size());
  const std::size_t size = t.count();
  for (const auto& pair : lp) {
    if (BitVector::and_count(*pair.transactions, t) == size) {
      out.s1p.set_preference(pair.preferred, pair.other);
    } else {
      out.pending.push_back(pair);
    }
  }
  if (steps) *steps += lp.size();
  return out;
}

}  // namespace rankmine
