#include <algorithm>

#include "doctest.h"
#include "rsshape/error.hpp"
#include "rsshape/partition.hpp"
#include "support/oracles.hpp"

using namespace rsshape;

TEST_CASE("parse accepts the documented spellings") {
  const Partition expected{3, 2, 1, 1};
  CHECK(Partition::parse("3,2,1,1") == expected);
  CHECK(Partition::parse("(3,2,1,1)") == expected);
  CHECK(Partition::parse("3 2 1 1") == expected);
  CHECK(Partition::parse(" 3, 2,1^2 ") == expected);
  CHECK(Partition::parse("2^4") == Partition{2, 2, 2, 2});
  CHECK(expected.str() == "3,2,1,1");
  CHECK(expected.size() == 7);
  CHECK(expected.length() == 4);
  CHECK(expected.part(1) == 3);
  CHECK(expected.part(5) == 0);
}

TEST_CASE("malformed partitions are rejected") {
  CHECK_THROWS_AS(Partition::parse(""), Error);
  CHECK_THROWS_AS(Partition::parse("()"), Error);
  CHECK_THROWS_AS(Partition::parse("3,x"), Error);
  CHECK_THROWS_AS(Partition::parse("1,2"), Error);
  CHECK_THROWS_AS(Partition::parse("3,0"), Error);
  CHECK_THROWS_AS(Partition::parse("-1"), Error);
  CHECK_THROWS_AS(Partition::parse("2^0"), Error);
  CHECK_THROWS_AS(Partition({2, 3}), Error);
}

TEST_CASE("enumeration matches the counting recursion and the order") {
  for (int n = 1; n <= 20; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(all.size() == oracle::partition_count(n));
    CHECK(std::is_sorted(all.begin(), all.end(), CanonicalOrder{}));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all.front() == Partition{n});
    CHECK(all.back() == Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (const auto& p : all) CHECK(p.size() == n);
  }
  for (int n = 1; n <= 10; ++n) {
    const auto all = enumerate_partitions(n);
    const auto ref = oracle::partitions_of(n);
    REQUIRE(all.size() == ref.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].parts() == ref[i]);
    for (int k = 1; k <= n; ++k) CHECK(enumerate_partitions(n, k).size() == oracle::partitions_bounded(n, k));
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition{3, 2, 1, 1}) == Partition{4, 2, 1});
  CHECK(conjugate(Partition{5}) == Partition{1, 1, 1, 1, 1});
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const Partition c = conjugate(p);
      CHECK(conjugate(c) == p);
      CHECK(c.size() == n);
      CHECK(c.part(1) == p.length());
    }
  }
}

TEST_CASE("shape statistics") {
  const ShapeStats s = shape_stats(Partition{3, 3, 3, 2, 1, 1});
  CHECK(s.tail_length == 0);
  CHECK(shape_stats(Partition{5, 2}).tail_length == 3);
  CHECK_FALSE(s.is_hook);
  CHECK(s.odd_column_count == 1);  // columns 6, 4, 3
  CHECK(shape_stats(Partition{4, 1, 1}).is_hook);
  CHECK(shape_stats(Partition{2, 1, 1, 1}).odd_column_count == 1);
  CHECK(shape_stats(Partition{3, 2}).odd_column_count == 1);
  CHECK_FALSE(shape_stats(Partition{1, 1, 1}).is_hook);
}

TEST_CASE("bounding box dimensions") {
  BoundingBox b = bounding_box(Partition{4, 2});
  CHECK(b.max_rows == 5);
  CHECK(b.max_cols == 4);
  b = bounding_box(Partition{7});
  CHECK(b.max_rows == 6);
  CHECK(b.max_cols == 6);
  b = bounding_box(Partition{5, 1});
  CHECK(b.max_rows == 5);
  CHECK(b.max_cols == 5);
  b = bounding_box(Partition{2, 2, 1, 1});
  CHECK(b.max_rows == 6 - 4 + 2 + 1);
  CHECK(b.max_cols == 6 - 4 + 2);
}

TEST_CASE("B_alpha for (4,2) lists eight shapes in canonical order") {
  const std::vector<Partition> expected{{4, 2}, {4, 1, 1}, {3, 3}, {3, 2, 1}, {3, 1, 1, 1},
                                        {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}};
  CHECK(enumerate_B_alpha(Partition{4, 2}) == expected);
}

TEST_CASE("B_alpha is exactly the partitions fitting the box") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& alpha : enumerate_partitions(n)) {
      const BoundingBox box = bounding_box(alpha);
      std::vector<Partition> ref;
      for (const auto& p : oracle::partitions_of(n)) {
        if (static_cast<int>(p.size()) <= box.max_rows && p.front() <= box.max_cols) ref.emplace_back(p);
      }
      CHECK(enumerate_B_alpha(alpha) == ref);
    }
  }
}

TEST_CASE("helpers") {
  CHECK(is_strict(Partition{5, 3, 1}));
  CHECK_FALSE(is_strict(Partition{3, 3}));
  CHECK(multiplicity(Partition{2, 2, 1}, 2) == 2);
  const std::vector<Partition> a{{3}, {2, 1}, {1, 1, 1}};
  const std::vector<Partition> b{{2, 1}};
  CHECK(difference(a, b) == std::vector<Partition>{{3}, {1, 1, 1}});
}
