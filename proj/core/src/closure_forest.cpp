#include "rankmine/closure_forest.hpp"

#include "rankmine/error.hpp"

namespace rankmine {

ClosureForest::NodeId ClosureForest::node_for(Item item) {
  if (node_of_[item] == kSuperRoot) {
    node_of_[item] = static_cast<NodeId>(items_.size());
    items_.push_back(item);
    children_.emplace_back();
  }
  return node_of_[item];
}

std::optional<ClosureForest::NodeId> ClosureForest::find_node(Item item) const {
  if (item >= node_of_.size() || node_of_[item] == kSuperRoot) return std::nullopt;
  return node_of_[item];
}

std::optional<ClosureForest::NodeId> ClosureForest::child_with(NodeId n,
                                                               Item item) const {
  for (NodeId c : children(n)) {
    if (items_[c] == item) return c;
  }
  return std::nullopt;
}

std::vector<Ranking> ClosureForest::paths() const {
  std::vector<Ranking> out;
  std::vector<Item> path;
  const std::size_t k = universe_size();
  auto walk = [&](auto& self, NodeId n) -> void {
    path.push_back(items_[n]);
    if (children_[n].empty()) {
      if (path.size() >= 2) out.push_back(Ranking::from_order(k, path));
    } else {
      for (NodeId c : children_[n]) self(self, c);
    }
    path.pop_back();
  };
  for (NodeId r : roots_) walk(walk, r);
  return out;
}

void recursive_connect(Item p, S1pMatrix& s1p, ClosureForest& forest,
                       const Ranking& rho, std::size_t* steps) {
  s1p.mark_visited(p);
  const auto parent = forest.node_for(p);
  // Successors of p not yet implied by an attached child. Scanning in a
  // linear extension, the first survivor is always a cover.
  BitVector open = s1p.successors(p);
  const auto order = rho.order();
  std::size_t scanned = 0;
  for (std::size_t pos = rho.position(p); pos < order.size() && !open.none(); ++pos) {
    ++scanned;
    const Item c = order[pos];
    if (!open.test(c)) continue;
    open.subtract(s1p.successors(c));
    open.reset(c);
    forest.add_child(parent, forest.node_for(c));
  }
  if (steps) *steps += scanned;
  for (auto child : std::vector<ClosureForest::NodeId>(forest.children(parent))) {
    const Item c = forest.item(child);
    if (!s1p.visited(c)) recursive_connect(c, s1p, forest, rho, steps);
  }
}

ClosureForest build_closure_forest(const RankDatabase& db, const TransactionSet& t,
                                   S1pMatrix s1p, std::size_t* steps) {
  const auto first = t.find_first();
  if (!first) throw PreconditionError("closure forest of an empty transaction set");
  if (s1p.any_visited()) throw PreconditionError("s1p diagonal must start cleared");
  const Ranking& rho = db[*first];
  ClosureForest forest(db.num_items());
  for (Item p : rho.order()) {
    if (steps) ++*steps;
    if (s1p.visited(p)) continue;
    // Unvisited in linear-extension order means no predecessor: a root.
    forest.add_root(forest.node_for(p));
    recursive_connect(p, s1p, forest, rho, steps);
  }
  return forest;
}

std::optional<ClosureForest::NodeId> prefix_test_recursive(
    const Ranking& rho, const ClosureForest& forest, ClosureForest::NodeId node,
    std::size_t index, std::size_t* steps) {
  while (index < rho.size()) {
    const auto& kids = forest.children(node);
    if (steps) *steps += kids.size();
    const auto next = forest.child_with(node, rho[index]);
    if (!next) return std::nullopt;
    node = *next;
    ++index;
  }
  return node;
}

std::optional<ClosureForest::NodeId> prefix_test(const ClosureForest& forest,
                                                 const Ranking& rho,
                                                 std::size_t* steps) {
  if (rho.empty()) return std::nullopt;
  return prefix_test_recursive(rho, forest, ClosureForest::kSuperRoot, 0, steps);
}

}  // namespace rankmine
