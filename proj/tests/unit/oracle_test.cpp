#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rankmine/error.hpp"
#include "rankmine/oracle.hpp"

using namespace rankmine;
using namespace rankmine::oracle;
using rankmine::testing::example_db;
using rankmine::testing::render;

TEST(Oracle, ContainsByPositions) {
  const auto db = example_db();
  EXPECT_TRUE(contains(db[0], db.ranking("a>c>d")));
  EXPECT_FALSE(contains(db[0], db.ranking("c>e")));
  EXPECT_TRUE(contains(db[0], db[0]));
}

TEST(Oracle, LinearExtensions) {
  const auto full = Ranking::from_order(4, {2, 0, 3, 1});
  EXPECT_EQ(linear_extensions(full), std::vector<Ranking>{full});
  EXPECT_EQ(linear_extensions(Ranking::from_order(3, {0, 1})).size(), 3u);
  // |E(pi)| = K! / |pi|! since the ranked items' relative order is fixed.
  const std::size_t fact[] = {1, 1, 2, 6, 24, 120};
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t len = 2; len <= k; ++len) {
      std::vector<Item> items(len);
      for (std::size_t i = 0; i < len; ++i) items[i] = static_cast<Item>(len - 1 - i);
      EXPECT_EQ(linear_extensions(Ranking::from_order(k, items)).size(), fact[k] / fact[len]);
    }
  }
  EXPECT_THROW(linear_extensions(Ranking::from_order(8, {0, 1})), LimitError);
}

TEST(Oracle, FrequentSlices) {
  const auto db = example_db();
  std::vector<std::string> pairs;
  for (const auto& e : brute_frequent(db, 2)) {
    if (e.ranking.size() == 2) pairs.push_back(to_string(e.ranking, db.universe()));
  }
  EXPECT_EQ(rankmine::testing::sorted(pairs),
            (std::vector<std::string>{"a>b", "a>c", "a>d", "a>e", "b>c", "b>d", "b>e", "c>d",
                                      "c>e", "d>c", "d>e", "e>d"}));
  EXPECT_TRUE(brute_frequent(db, 5).empty());
  const auto single = parse_order_list("a>b>c>d>e\n");
  EXPECT_EQ(brute_frequent(single, 1).size(), 26u);  // C(5,2)+C(5,3)+C(5,4)+C(5,5)
}

TEST(Oracle, ClosedExamples) {
  const auto db = example_db();
  std::vector<std::string> under_ab;
  for (const auto& e : brute_closed(db, 2)) {
    const auto s = to_string(e.ranking, db.universe());
    if (s.rfind("a>b", 0) == 0) under_ab.push_back(s);
  }
  EXPECT_EQ(rankmine::testing::sorted(under_ab),
            (std::vector<std::string>{"a>b>c", "a>b>e", "a>b>e>d"}));
  const auto distinct = parse_order_list("a>b>c\nc>b>a\nb>a\n");
  std::vector<std::string> closed;
  for (const auto& e : brute_closed(distinct, 1)) closed.push_back(to_string(e.ranking, distinct.universe()));
  EXPECT_EQ(rankmine::testing::sorted(closed), (std::vector<std::string>{"a>b>c", "b>a", "c>b>a"}));
}

TEST(Oracle, MaxIntersection) {
  const auto db = example_db();
  const std::vector<Ranking> two{db[0], db[1]};
  EXPECT_EQ(render(brute_max_intersection(two), db.universe()),
            (std::vector<std::string>{"a>b>c", "a>b>e", "a>d"}));
  const std::vector<Ranking> one{db[2]};
  EXPECT_EQ(brute_max_intersection(one), one);
  const std::vector<Ranking> reversed{db.ranking("a>b>c"), db.ranking("c>b>a")};
  EXPECT_TRUE(brute_max_intersection(reversed).empty());
  EXPECT_THROW(brute_max_intersection(std::vector<Ranking>{}), PreconditionError);
}

TEST(Oracle, CountAllRankings) {
  EXPECT_EQ(count_all_rankings(2), 2u);
  EXPECT_EQ(count_all_rankings(3), 12u);
  EXPECT_EQ(count_all_rankings(4), 60u);
  for (std::size_t k = 2; k <= 7; ++k) EXPECT_EQ(count_all_rankings(k), enumerate_all_rankings(k));
  EXPECT_NO_THROW(count_all_rankings(20));
  EXPECT_THROW(count_all_rankings(21), LimitError);
  EXPECT_THROW(count_all_rankings(1), PreconditionError);
}

TEST(Oracle, Caps) {
  std::vector<Ranking> rows(501, Ranking::from_order(3, {0, 1}));
  const RankDatabase big(ItemUniverse::numbered(3), rows);
  EXPECT_THROW(brute_frequent(big, 1), LimitError);
  EXPECT_NO_THROW(brute_frequent(big, 1, OracleLimits{7, 1000}));
  const RankDatabase wide(ItemUniverse::numbered(8), {Ranking::from_order(8, {0, 1})});
  EXPECT_THROW(brute_closed(wide, 1), LimitError);
}

TEST(Oracle, FrequentIsDownwardClosed) {
  const auto db = example_db();
  const auto store = to_store(brute_frequent(db, 2));
  for (const auto& e : store.entries()) {
    const auto order = e.ranking.order();
    for (std::size_t drop = 0; drop < order.size() && order.size() > 2; ++drop) {
      std::vector<Item> rest;
      for (std::size_t p = 0; p < order.size(); ++p) {
        if (p != drop) rest.push_back(order[p]);
      }
      const auto sub = store.support_of(Ranking::from_order(5, rest));
      ASSERT_TRUE(sub.has_value());
      EXPECT_GE(*sub, e.support);
    }
  }
}
