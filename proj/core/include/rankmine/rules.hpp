#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rankmine/pattern_store.hpp"
#include "rankmine/ranking.hpp"

namespace rankmine {

/// Association A => B between two consistent rankings whose consequent
/// ranks at least one item the antecedent does not.
struct RankRule {
  Ranking antecedent;
  Ranking consequent;
  std::size_t support = 0;  ///< transactions containing both sides
  double confidence = 0.0;
  double interest = 0.0;

  friend bool operator==(const RankRule&, const RankRule&) = default;
};

/// Number of transactions that contain both a and b.
std::size_t combo_support(const RankDatabase& db, const Ranking& a, const Ranking& b);

/// combo_support / supp(antecedent). Throws PreconditionError when the
/// antecedent occurs nowhere.
double confidence(const RankDatabase& db, const Ranking& antecedent,
                  const Ranking& consequent);

/// confidence minus the relative support of the consequent.
double interest(const RankDatabase& db, const Ranking& antecedent,
                const Ranking& consequent);

/// Scored rule; throws PreconditionError for inconsistent or trivial pairs.
RankRule make_rule(const RankDatabase& db, const Ranking& antecedent,
                   const Ranking& consequent);

/// True iff O(b) is a subset of O(a): the rule a => b says nothing new.
bool is_trivial(const Ranking& antecedent, const Ranking& consequent);

/// A consequent item adds nothing when the antecedent ranks it and also
/// ranks both of its neighbours in the consequent. Throws
/// PreconditionError when the consequent does not rank `item`.
bool is_redundant_item(const RankRule& rule, Item item);

/// Drops redundant consequent items until none is left. Measures are kept.
RankRule simplify_rule(RankRule rule);

/// Same, but each round removes the first redundant item met in
/// `preference`, which must list every consequent item. The result does not
/// depend on the order.
RankRule simplify_rule(RankRule rule, std::span<const Item> preference);

struct RuleConfig {
  double min_confidence = 0.0;
  double min_interest = -1.0;
  /// Lowest accepted number of transactions containing both sides.
  std::size_t min_support = 1;
  /// Upper bound on |O(A)| + |O(B)|; 0 disables the bound.
  std::size_t max_items = 0;
};

/// Rules between all ordered pairs of stored patterns that are consistent,
/// non-trivial and pass the thresholds, simplified and deduplicated.
/// Sorted by descending interest, then antecedent, then consequent.
std::vector<RankRule> mine_rules(const RankDatabase& db, const PatternStore& store,
                                 const RuleConfig& cfg);

/// One "antecedent\tconsequent\tsupport\tconfidence\tinterest" line per rule.
void write_rules(std::ostream& out, const std::vector<RankRule>& rules,
                 const ItemUniverse& universe);
std::string write_rules(const std::vector<RankRule>& rules, const ItemUniverse& universe);

}  // namespace rankmine
