#include "rankmine/pattern_store.hpp"

#include "rankmine/error.hpp"

namespace rankmine {

void PatternStore::add(Ranking ranking, std::size_t support) {
  if (!ranking.is_pattern()) {
    throw PreconditionError("patterns must rank at least two items");
  }
  if (index_.contains(ranking)) {
    throw PreconditionError("pattern stored twice");
  }
  const std::size_t k = ranking.size();
  if (lists_.size() < k - 1) lists_.resize(k - 1);
  index_.emplace(ranking, support);
  lists_[k - 2].push_back(PatternEntry{std::move(ranking), support});
  ++total_;
}

std::span<const PatternEntry> PatternStore::of_length(std::size_t k) const {
  if (k < 2 || k - 2 >= lists_.size()) return {};
  return lists_[k - 2];
}

std::optional<std::size_t> PatternStore::support_of(const Ranking& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<PatternEntry> PatternStore::entries() const {
  std::vector<PatternEntry> out;
  out.reserve(total_);
  for (const auto& list : lists_) out.insert(out.end(), list.begin(), list.end());
  return out;
}

void PatternStore::append(const PatternStore& other) {
  for (const auto& list : other.lists_) {
    for (const auto& e : list) add(e.ranking, e.support);
  }
}

bool PatternStore::same_patterns(const PatternStore& other) const {
  if (total_ != other.total_) return false;
  for (const auto& [r, s] : index_) {
    auto it = other.index_.find(r);
    if (it == other.index_.end() || it->second != s) return false;
  }
  return true;
}

}  // namespace rankmine
