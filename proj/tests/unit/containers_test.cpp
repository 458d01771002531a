#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rankmine/bitvector.hpp"
#include "rankmine/error.hpp"
#include "rankmine/pattern_store.hpp"

using namespace rankmine;

TEST(BitVector, SetCountAndScan) {
  BitVector v(130);
  EXPECT_TRUE(v.none());
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.count(), 3u);
  EXPECT_EQ(v.find_first(), 0u);
  EXPECT_EQ(v.find_next(0), 64u);
  EXPECT_EQ(v.find_next(64), 129u);
  EXPECT_FALSE(v.find_next(129).has_value());
  v.reset(64);
  EXPECT_FALSE(v.test(64));
  EXPECT_EQ(BitVector(70, true).count(), 70u);
}

TEST(BitVector, BinaryOperations) {
  BitVector a(4), b(4), out(4);
  for (int i : {0, 1, 2}) a.set(i);
  for (int i : {0, 1, 3}) b.set(i);
  EXPECT_EQ(a.to_string(), "0111");
  EXPECT_EQ(BitVector::and_into(a, b, out), 2u);
  EXPECT_EQ(out.to_string(), "0011");
  EXPECT_EQ(BitVector::and_count(a, b), 2u);
  EXPECT_TRUE(out.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  BitVector c = a;
  c.subtract(b);
  EXPECT_EQ(c.to_string(), "0100");
  c |= b;
  EXPECT_EQ(c.to_string(), "1111");
  EXPECT_EQ((a & b), out);
  EXPECT_THROW(a &= BitVector(5), PreconditionError);
}

TEST(BitVector, AndIntoResizesOutput) {
  BitVector a(10, true), b(10), out;
  b.set(9);
  EXPECT_EQ(BitVector::and_into(a, b, out), 1u);
  EXPECT_EQ(out.width(), 10u);
}

TEST(PatternStore, GroupsByLength) {
  const auto db = rankmine::testing::example_db();
  PatternStore s;
  EXPECT_TRUE(s.empty());
  s.add(db.ranking("a>b>c"), 2);
  s.add(db.ranking("a>b"), 3);
  s.add(db.ranking("b>e"), 4);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.max_length(), 3u);
  EXPECT_EQ(s.of_length(2).size(), 2u);
  EXPECT_EQ(s.of_length(2)[0].ranking, db.ranking("a>b"));
  EXPECT_TRUE(s.of_length(4).empty());
  EXPECT_EQ(s.support_of(db.ranking("a>b>c")), 2u);
  EXPECT_FALSE(s.support_of(db.ranking("c>a")).has_value());
  EXPECT_THROW(s.add(db.ranking("a>b"), 3), PreconditionError);
  EXPECT_THROW(s.add(Ranking::from_order(5, {0}), 1), PreconditionError);
  const auto all = s.entries();
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all.back().ranking, db.ranking("a>b>c"));
}

TEST(PatternStore, SamePatternsIgnoresOrderButNotSupport) {
  const auto db = rankmine::testing::example_db();
  PatternStore a, b, c;
  a.add(db.ranking("a>b"), 3);
  a.add(db.ranking("b>e"), 4);
  b.add(db.ranking("b>e"), 4);
  b.add(db.ranking("a>b"), 3);
  c.add(db.ranking("a>b"), 2);
  c.add(db.ranking("b>e"), 4);
  EXPECT_TRUE(a.same_patterns(b));
  EXPECT_FALSE(a.same_patterns(c));
  PatternStore d;
  d.append(a);
  EXPECT_TRUE(d.same_patterns(a));
}
