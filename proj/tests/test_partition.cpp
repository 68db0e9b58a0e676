#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partition.hpp"

using namespace rv;

TEST_CASE("conjugate examples") {
  CHECK(conjugate({3, 3, 1}) == Partition{3, 2, 2});
  CHECK(conjugate({5}) == Partition{1, 1, 1, 1, 1});
  // brute-force column count of the (4,3,2,2) diagram
  CHECK(conjugate({4, 3, 2, 2}) == Partition{4, 4, 2, 1});
  CHECK(conjugate({}) == Partition{});
}

TEST_CASE("conjugate is an involution") {
  for (int n = 0; n <= 20; ++n)
    for (const auto& lam : enumerate_partitions(n, n > 0 ? n : 1))
      CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("dominance examples") {
  CHECK(dominates({3, 1}, {2, 2}));
  CHECK(dominates({3, 1}, {3, 1}));
  CHECK_FALSE(dominates({2, 2, 2}, {3, 2, 1}));
  CHECK_THROWS(dominates({2}, {1}));
}

TEST_CASE("dominance is a partial order, reversed by conjugation") {
  for (int n = 1; n <= 10; ++n) {
    auto parts = enumerate_partitions(n, n);
    for (const auto& a : parts) {
      CHECK(dominates(a, a));
      for (const auto& b : parts) {
        if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
        CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
        for (const auto& c : parts)
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
      }
    }
  }
}

TEST_CASE("complement") {
  CHECK(complement(5, {3, 1}) == Partition{4, 2});
  CHECK(complement(7, {7}) == Partition{});
  CHECK(complement(5, {4, 3, 2, 2}) == Partition{3, 3, 2, 1});
  CHECK_THROWS(complement(2, {3}));
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n, n)) {
      int m = lam[0] + 2;
      CHECK(weight(complement(m, lam)) == m * int(lam.size()) - n);
    }
}

TEST_CASE("union_sort") {
  CHECK(union_sort({3, 1}, {2}) == Partition{3, 2, 1});
  CHECK(union_sort({4, 2}, {}) == Partition{4, 2});
  CHECK(union_sort({5, 5}, {5, 1}) == Partition{5, 5, 5, 1});
}

TEST_CASE("enumerate_partitions") {
  CHECK(enumerate_partitions(4, 4).size() == 5);
  CHECK(enumerate_partitions(0, 3) == std::vector<Partition>{{}});
  CHECK(enumerate_partitions(3, 2) == std::vector<Partition>{{2, 1}, {1, 1, 1}});
  // lexicographic-descending order
  auto p4 = enumerate_partitions(4, 4);
  CHECK(p4.front() == Partition{4});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
  for (const auto& lam : p4) CHECK(is_valid_partition(lam));
}
