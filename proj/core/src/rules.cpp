#include "rankmine/rules.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "rankmine/bitvector.hpp"
#include "rankmine/dataset_io.hpp"
#include "rankmine/error.hpp"

namespace rankmine {

namespace {

bool holds_both(const Ranking& t, const Ranking& a, const Ranking& b) {
  return is_subranking(a, t) && is_subranking(b, t);
}

TransactionSet transactions_of(const RankDatabase& db, const Ranking& pi) {
  TransactionSet t(db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (is_subranking(pi, db[i])) t.set(i);
  }
  return t;
}

Ranking without(const Ranking& r, Item item) {
  std::vector<Item> rest;
  rest.reserve(r.size());
  for (Item x : r.order()) {
    if (x != item) rest.push_back(x);
  }
  return Ranking::from_order(r.universe_size(), rest);
}

}  // namespace

std::size_t combo_support(const RankDatabase& db, const Ranking& a, const Ranking& b) {
  std::size_t n = 0;
  for (const auto& t : db.transactions()) n += holds_both(t, a, b);
  return n;
}

double confidence(const RankDatabase& db, const Ranking& antecedent,
                  const Ranking& consequent) {
  const auto base = support(db, antecedent).absolute;
  if (base == 0) throw PreconditionError("confidence: antecedent has zero support");
  return static_cast<double>(combo_support(db, antecedent, consequent)) /
         static_cast<double>(base);
}

double interest(const RankDatabase& db, const Ranking& antecedent,
                const Ranking& consequent) {
  return confidence(db, antecedent, consequent) - support(db, consequent).relative;
}

bool is_trivial(const Ranking& antecedent, const Ranking& consequent) {
  for (Item x : consequent.order()) {
    if (!antecedent.contains(x)) return false;
  }
  return true;
}

RankRule make_rule(const RankDatabase& db, const Ranking& antecedent,
                   const Ranking& consequent) {
  if (!consistent(antecedent, consequent)) {
    throw PreconditionError("rule sides order a shared pair differently");
  }
  if (is_trivial(antecedent, consequent)) {
    throw PreconditionError("rule consequent ranks no item beyond the antecedent");
  }
  RankRule rule{antecedent, consequent, combo_support(db, antecedent, consequent), 0, 0};
  rule.confidence = confidence(db, antecedent, consequent);
  rule.interest = rule.confidence - support(db, consequent).relative;
  return rule;
}

bool is_redundant_item(const RankRule& rule, Item item) {
  const Ranking& b = rule.consequent;
  if (!b.contains(item)) throw PreconditionError("item is not ranked by the consequent");
  const Ranking& a = rule.antecedent;
  if (!a.contains(item)) return false;
  const std::size_t pos = b.position(item) - 1;
  if (pos > 0 && !a.contains(b[pos - 1])) return false;
  if (pos + 1 < b.size() && !a.contains(b[pos + 1])) return false;
  return true;
}

RankRule simplify_rule(RankRule rule, std::span<const Item> preference) {
  for (Item x : rule.consequent.order()) {
    if (std::find(preference.begin(), preference.end(), x) == preference.end()) {
      throw PreconditionError("elimination order misses a consequent item");
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Item x : preference) {
      if (rule.consequent.contains(x) && is_redundant_item(rule, x)) {
        rule.consequent = without(rule.consequent, x);
        changed = true;
        break;
      }
    }
  }
  return rule;
}

RankRule simplify_rule(RankRule rule) {
  const auto order = rule.consequent.order();
  const std::vector<Item> preference(order.begin(), order.end());
  return simplify_rule(std::move(rule), preference);
}

std::vector<RankRule> mine_rules(const RankDatabase& db, const PatternStore& store,
                                 const RuleConfig& cfg) {
  const auto entries = store.entries();
  std::vector<TransactionSet> sets;
  sets.reserve(entries.size());
  for (const auto& e : entries) sets.push_back(transactions_of(db, e.ranking));
  const double n = static_cast<double>(db.size());

  std::vector<RankRule> rules;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& a = entries[i];
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const auto& b = entries[j];
      if (i == j) continue;
      if (cfg.max_items && a.ranking.size() + b.ranking.size() > cfg.max_items) continue;
      // combo <= supp(B) bounds the reachable confidence.
      if (static_cast<double>(b.support) < cfg.min_confidence * static_cast<double>(a.support)) {
        continue;
      }
      if (is_trivial(a.ranking, b.ranking) || !consistent(a.ranking, b.ranking)) continue;
      const std::size_t combo = BitVector::and_count(sets[i], sets[j]);
      if (combo == 0 || combo < cfg.min_support) continue;
      const double conf = static_cast<double>(combo) / static_cast<double>(a.support);
      const double lift = conf - static_cast<double>(b.support) / n;
      if (conf < cfg.min_confidence || lift < cfg.min_interest) continue;
      rules.push_back(simplify_rule(RankRule{a.ranking, b.ranking, combo, conf, lift}));
    }
  }

  std::sort(rules.begin(), rules.end(), [](const RankRule& x, const RankRule& y) {
    if (x.interest != y.interest) return x.interest > y.interest;
    if (x.antecedent != y.antecedent) return x.antecedent < y.antecedent;
    return x.consequent < y.consequent;
  });
  std::set<std::pair<Ranking, Ranking>> seen;
  std::vector<RankRule> out;
  for (auto& r : rules) {
    if (seen.emplace(r.antecedent, r.consequent).second) out.push_back(std::move(r));
  }
  return out;
}

void write_rules(std::ostream& out, const std::vector<RankRule>& rules,
                 const ItemUniverse& universe) {
  for (const auto& r : rules) {
    out << to_string(r.antecedent, universe) << '\t' << to_string(r.consequent, universe)
        << '\t' << r.support << '\t' << format_fraction(r.confidence) << '\t'
        << format_fraction(r.interest) << '\n';
  }
}

std::string write_rules(const std::vector<RankRule>& rules, const ItemUniverse& universe) {
  std::ostringstream out;
  write_rules(out, rules, universe);
  return out.str();
}

}  // namespace rankmine
