#include "rankmine/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "rankmine/error.hpp"

namespace rankmine {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

/// "#items a b c" -> {"a","b","c"}; nullopt when the line is no header.
std::optional<std::vector<std::string>> parse_header(std::string_view line) {
  line = trim(line);
  constexpr std::string_view kTag = "#items";
  if (line.substr(0, kTag.size()) != kTag) return std::nullopt;
  std::vector<std::string> names;
  for (auto tok : split_ws(line.substr(kTag.size()))) names.emplace_back(tok);
  return names;
}

bool is_comment(std::string_view line) {
  line = trim(line);
  return !line.empty() && line.front() == '#';
}

bool all_integers(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (n.empty() || n.size() > 18) return false;
    for (char c : n) {
      if (c < '0' || c > '9') return false;
    }
  }
  return true;
}

}  // namespace

RankDatabase parse_rank_matrix(std::istream& in,
                               std::optional<std::vector<std::string>> names) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::size_t> line_numbers;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = names ? names->size() : 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (auto header = parse_header(line)) {
      if (!rows.empty()) throw ParseError("#items header after data", line_no);
      names = std::move(*header);
      width = names->size();
      continue;
    }
    if (is_comment(line)) continue;
    auto tokens = split_ws(line);
    if (width == 0) width = tokens.size();
    if (tokens.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " entries, found " +
                           std::to_string(tokens.size()),
                       line_no);
    }
    std::vector<std::uint32_t> row(width, 0);
    for (std::size_t j = 0; j < width; ++j) {
      auto tok = tokens[j];
      if (tok == "?") continue;
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("invalid entry '" + std::string(tok) + "'", line_no);
      }
      row[j] = value;
    }
    rows.push_back(std::move(row));
    line_numbers.push_back(line_no);
  }
  if (rows.empty()) throw ParseError("no transactions in input");
  if (width < 2) throw ParseError("matrix needs at least two columns");

  ItemUniverse universe = names ? ItemUniverse(std::move(*names))
                                : ItemUniverse::numbered(width);
  std::vector<Ranking> transactions;
  transactions.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Ranking t;
    try {
      t = Ranking::from_positions(rows[r]);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), line_numbers[r]);
    }
    if (!t.is_pattern()) {
      throw ParseError("transaction ranks fewer than two items", line_numbers[r]);
    }
    transactions.push_back(std::move(t));
  }
  return RankDatabase(std::move(universe), std::move(transactions));
}

RankDatabase parse_rank_matrix(std::string_view text,
                               std::optional<std::vector<std::string>> names) {
  std::istringstream in{std::string(text)};
  return parse_rank_matrix(in, std::move(names));
}

RankDatabase parse_order_list(std::istream& in) {
  std::optional<std::vector<std::string>> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (auto h = parse_header(line)) {
      if (!rows.empty()) throw ParseError("#items header after data", line_no);
      header = std::move(h);
      continue;
    }
    if (is_comment(line)) continue;
    std::vector<std::string> row;
    std::string_view rest = trim(line);
    std::size_t start = 0;
    while (true) {
      auto end = rest.find('>', start);
      auto tok = trim(rest.substr(start, end == std::string_view::npos
                                             ? std::string_view::npos
                                             : end - start));
      if (tok.empty()) throw ParseError("empty item name", line_no);
      row.emplace_back(tok);
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    rows.push_back(std::move(row));
    line_numbers.push_back(line_no);
  }
  if (rows.empty()) throw ParseError("no transactions in input");

  std::vector<std::string> names;
  if (header) {
    names = std::move(*header);
  } else {
    std::set<std::string> seen;
    for (const auto& row : rows) seen.insert(row.begin(), row.end());
    names.assign(seen.begin(), seen.end());
    if (all_integers(names)) {
      std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) {
        return std::stoll(a) < std::stoll(b);
      });
    }
  }
  if (names.size() < 2) throw ParseError("fewer than two distinct items");
  ItemUniverse universe{std::move(names)};

  std::vector<Ranking> transactions;
  transactions.reserve(rows.size());
  std::vector<Item> order;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    order.clear();
    for (const auto& name : rows[r]) {
      auto idx = universe.find(name);
      if (idx < 0) throw ParseError("unknown item '" + name + "'", line_numbers[r]);
      order.push_back(static_cast<Item>(idx));
    }
    Ranking t;
    try {
      t = Ranking::from_order(universe.size(), order);
    } catch (const PreconditionError&) {
      throw ParseError("duplicate item", line_numbers[r]);
    }
    if (!t.is_pattern()) {
      throw ParseError("transaction ranks fewer than two items", line_numbers[r]);
    }
    transactions.push_back(std::move(t));
  }
  return RankDatabase(std::move(universe), std::move(transactions));
}

RankDatabase parse_order_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_order_list(in);
}

RankDatabase parse_counted_orders(std::istream& in, std::size_t name_offset) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t k = 0;
  std::vector<Ranking> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    std::istringstream fields(line);
    if (k == 0) {
      if (!(fields >> k) || k < 2) throw ParseError("expected the item count", line_no);
      continue;
    }
    std::size_t tag = 0;
    std::size_t len = 0;
    if (!(fields >> tag >> len)) throw ParseError("expected '<tag> <length> ids...'", line_no);
    std::vector<Item> order;
    std::vector<char> seen(k, 0);
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t id = 0;
      if (!(fields >> id)) throw ParseError("fewer ids than the stated length", line_no);
      if (id >= k) throw ParseError("item id " + std::to_string(id) + " out of range", line_no);
      if (seen[id]) throw ParseError("item id " + std::to_string(id) + " repeated", line_no);
      seen[id] = 1;
      order.push_back(static_cast<Item>(id));
    }
    std::string extra;
    if (fields >> extra) throw ParseError("more ids than the stated length", line_no);
    if (order.size() < 2) throw ParseError("a transaction must rank two items", line_no);
    rows.push_back(Ranking::from_order(k, order));
  }
  if (k == 0) throw ParseError("empty input");
  if (rows.empty()) throw ParseError("no transactions");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i + name_offset));
  return RankDatabase(ItemUniverse(std::move(names)), std::move(rows));
}

RankDatabase parse_counted_orders(std::string_view text, std::size_t name_offset) {
  std::istringstream in{std::string(text)};
  return parse_counted_orders(in, name_offset);
}

RankDatabase load_database(const std::string& path, DatasetFormat format) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(file)),
                   std::istreambuf_iterator<char>());
  if (format == DatasetFormat::kAuto) {
    format = text.find('>') != std::string::npos ? DatasetFormat::kOrders
                                                 : DatasetFormat::kMatrix;
  }
  switch (format) {
    case DatasetFormat::kOrders: return parse_order_list(text);
    case DatasetFormat::kCounted: return parse_counted_orders(text);
    default: return parse_rank_matrix(text);
  }
}

void write_rank_matrix(std::ostream& out, const RankDatabase& db) {
  const auto& universe = db.universe();
  if (!universe.is_numbered()) {
    out << "#items";
    for (const auto& n : universe.names()) out << ' ' << n;
    out << '\n';
  }
  std::string line;
  for (const auto& t : db.transactions()) {
    line.clear();
    const auto& pos = t.positions();
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if (j) line += ' ';
      line += std::to_string(pos[j]);
    }
    line += '\n';
    out << line;
  }
}

void write_order_list(std::ostream& out, const RankDatabase& db) {
  out << "#items";
  for (const auto& n : db.universe().names()) out << ' ' << n;
  out << '\n';
  for (const auto& t : db.transactions()) out << to_string(t, db.universe()) << '\n';
}

std::string format_fraction(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

void write_patterns(std::ostream& out, const PatternStore& store,
                    const ItemUniverse& universe, std::size_t num_transactions) {
  const double n = static_cast<double>(num_transactions);
  for (const auto& list : store.by_length()) {
    for (const auto& e : list) {
      out << to_string(e.ranking, universe) << '\t' << e.support << '\t'
          << format_fraction(static_cast<double>(e.support) / n) << '\n';
    }
  }
}

std::string write_patterns(const PatternStore& store, const ItemUniverse& universe,
                           std::size_t num_transactions) {
  std::ostringstream out;
  write_patterns(out, store, universe, num_transactions);
  return out.str();
}

}  // namespace rankmine
