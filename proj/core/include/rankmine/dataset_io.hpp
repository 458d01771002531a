#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankmine/pattern_store.hpp"
#include "rankmine/ranking.hpp"

namespace rankmine {

// Text formats
// ------------
// Matrix: one transaction per line, K whitespace-separated entries; entry j
//   is the position of item j, with 0 or '?' meaning "unranked". An optional
//   first line "#items n1 n2 ..." names the columns; otherwise items are
//   named "1".."K". Blank lines are skipped.
// Orders: one transaction per line, item names separated by '>'. An
//   optional "#items" line fixes the universe (and its index order); without
//   it the universe is the set of names seen, sorted numerically when all
//   names are integers and lexicographically otherwise.
// Counted orders: a first line "K ..." giving the item count, then one
//   transaction per line as "<tag> <k> <id_1> ... <id_k>" with ids in
//   [0, K) listed most preferred first (the layout of the SUSHI .order
//   files). Item id x is named x + name_offset.
// Patterns: "a>b>c<TAB>support<TAB>relative" per line, shortest first.

RankDatabase parse_rank_matrix(std::istream& in,
                               std::optional<std::vector<std::string>> names = {});
RankDatabase parse_rank_matrix(std::string_view text,
                               std::optional<std::vector<std::string>> names = {});

RankDatabase parse_order_list(std::istream& in);
RankDatabase parse_order_list(std::string_view text);

RankDatabase parse_counted_orders(std::istream& in, std::size_t name_offset = 0);
RankDatabase parse_counted_orders(std::string_view text, std::size_t name_offset = 0);

enum class DatasetFormat { kAuto, kMatrix, kOrders, kCounted };

/// Reads a database file. With kAuto, a file containing '>' is an order
/// list and anything else a matrix; counted orders are never guessed.
RankDatabase load_database(const std::string& path,
                           DatasetFormat format = DatasetFormat::kAuto);

void write_rank_matrix(std::ostream& out, const RankDatabase& db);
void write_order_list(std::ostream& out, const RankDatabase& db);

/// Formats a fraction with six decimals ("0.500000").
std::string format_fraction(double value);

/// One line per pattern: order, absolute support, support / N.
void write_patterns(std::ostream& out, const PatternStore& store,
                    const ItemUniverse& universe, std::size_t num_transactions);
std::string write_patterns(const PatternStore& store,
                           const ItemUniverse& universe,
                           std::size_t num_transactions);

}  // namespace rankmine
