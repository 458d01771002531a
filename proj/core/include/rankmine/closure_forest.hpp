#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rankmine/bitvector.hpp"
#include "rankmine/ranking.hpp"
#include "rankmine/s1p_matrix.hpp"

namespace rankmine {

/// Cover diagram of the partial order held by an S1pMatrix, with one node
/// per item. Children of a node are its immediate successors; roots are
/// the minimal items. Because nodes are shared, the structure is a DAG, and
/// reading it as a forest (every root-to-leaf walk is one tree path) gives
/// exactly the maximal chains, i.e. the maximal intersection of the
/// transaction set the matrix was built from.
class ClosureForest {
 public:
  using NodeId = std::uint32_t;
  /// Synthetic node whose children are the roots; it carries no item.
  static constexpr NodeId kSuperRoot = UINT32_MAX;

  ClosureForest() = default;
  explicit ClosureForest(std::size_t k) : node_of_(k, kSuperRoot) {}

  std::size_t universe_size() const noexcept { return node_of_.size(); }
  std::size_t num_nodes() const noexcept { return items_.size(); }

  Item item(NodeId n) const { return items_[n]; }
  const std::vector<NodeId>& children(NodeId n) const {
    return n == kSuperRoot ? roots_ : children_[n];
  }
  const std::vector<NodeId>& roots() const noexcept { return roots_; }

  /// The node holding `item`, created on first use.
  NodeId node_for(Item item);
  std::optional<NodeId> find_node(Item item) const;
  void add_root(NodeId n) { roots_.push_back(n); }
  void add_child(NodeId parent, NodeId child) { children_[parent].push_back(child); }

  /// Child of `n` holding `item`, if any.
  std::optional<NodeId> child_with(NodeId n, Item item) const;

  /// Root-to-leaf paths of length >= 2, depth first in child order.
  std::vector<Ranking> paths() const;

 private:
  std::vector<Item> items_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> roots_;
  std::vector<NodeId> node_of_;
};

/// Forest of the order in `s1p` (which must hold the shared preferences of
/// `t`, t nonempty). Items are visited in the order of the lowest-index
/// transaction of `t`, which is a linear extension of that order.
/// `steps` counts scanned (node, candidate) pairs, at most K^2.
ClosureForest build_closure_forest(const RankDatabase& db, const TransactionSet& t,
                                   S1pMatrix s1p, std::size_t* steps = nullptr);

/// Attaches the covers of `p` (its successors not implied through another
/// successor) below p's node, scanning `rho` after p, then recurses into
/// children that were not visited yet. Marks p visited on the diagonal.
void recursive_connect(Item p, S1pMatrix& s1p, ClosureForest& forest,
                       const Ranking& rho, std::size_t* steps = nullptr);

/// Descends from `node` matching rho[index], rho[index+1], ... against
/// children. Returns the node reached when rho is exhausted, or nullopt.
std::optional<ClosureForest::NodeId> prefix_test_recursive(
    const Ranking& rho, const ClosureForest& forest, ClosureForest::NodeId node,
    std::size_t index, std::size_t* steps = nullptr);

/// prefix_test_recursive from the super-root at rho's first item. On
/// success the returned node is the postfix root (the node of last(rho)).
std::optional<ClosureForest::NodeId> prefix_test(const ClosureForest& forest,
                                                 const Ranking& rho,
                                                 std::size_t* steps = nullptr);

}  // namespace rankmine
