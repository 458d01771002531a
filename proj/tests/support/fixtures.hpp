#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "rankmine/dataset_io.hpp"
#include "rankmine/pattern_store.hpp"
#include "rankmine/ranking.hpp"

namespace rankmine::testing {

/// Four rankings over a..e used throughout the golden tests.
inline RankDatabase example_db() {
  return parse_order_list("a>b>e>c>d\na>d>b>c>e\nc>a>b>e>d\nb>a>d>c>e\n");
}

inline std::vector<std::string> render(const std::vector<Ranking>& rs, const ItemUniverse& u) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(to_string(r, u));
  std::sort(out.begin(), out.end());
  return out;
}

/// "order:support" strings of a store, sorted.
inline std::vector<std::string> render(const PatternStore& store, const ItemUniverse& u) {
  std::vector<std::string> out;
  for (const auto& e : store.entries()) {
    out.push_back(to_string(e.ranking, u) + ":" + std::to_string(e.support));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace rankmine::testing
