#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lr.hpp"

using namespace rv;

static const std::vector<Partition> kGolden{
    {2, 1, 1}, {2, 2, 2, 1}, {3, 2, 2, 2}, {4, 3, 2, 2}};

TEST_CASE("sequence validation") {
  CHECK(is_lr_sequence(kGolden));
  CHECK(is_lr_sequence({Partition{3, 1}}));
  CHECK_FALSE(is_lr_sequence({Partition{1}, Partition{3}}));
  // lattice condition: adding two boxes in step 2 after one in step 1
  CHECK_FALSE(is_lr_sequence({Partition{}, Partition{1}, Partition{2, 1}}));
  // adding to a lower row before the upper row is filled is fine,
  // adding 2 to one row in one step is not
  CHECK_FALSE(is_lr_sequence({Partition{1}, Partition{3, 1}}));
}

TEST_CASE("type extraction") {
  auto [lam, beta, mu] = lr_type(LRSequence{kGolden});
  CHECK(lam == Partition{2, 1, 1});
  CHECK(beta == Partition{3, 3, 1});
  CHECK(mu == Partition{4, 3, 2, 2});

  auto [l2, b2, m2] = lr_type(LRSequence{{Partition{3, 1}, Partition{3, 1}}});
  CHECK(l2 == Partition{3, 1});
  CHECK(b2 == Partition{});
  CHECK(m2 == Partition{3, 1});

  // a single box per step in the first row: beta has one column of height 2
  auto [l3, b3, m3] = lr_type(LRSequence{{Partition{}, Partition{1}, Partition{2}}});
  CHECK(b3 == Partition{2});
  CHECK(m3 == Partition{2});
  // the transposed chain is not an LR sequence: the second box lands in
  // a new row, violating the suffix-sum condition
  CHECK_FALSE(is_lr_sequence({Partition{}, Partition{1}, Partition{1, 1}}));

  CHECK_THROWS(lr_type(LRSequence{{Partition{}, Partition{1}, Partition{2, 1}}}));
}

TEST_CASE("companion tableau") {
  SkewTableau T = companion_tableau(LRSequence{kGolden});
  std::vector<std::vector<int>> expect{{0, 0, 0, 1}, {0, 1, 1, 2}, {2, 3}, {3}};
  CHECK(T.rows == expect);
  CHECK(check_tableau_conditions(T));
  CHECK(lattice_word(T) == std::vector<int>{1, 2, 1, 1, 3, 2, 3});

  SkewTableau con = companion_tableau(LRSequence{{Partition{2, 1}, Partition{2, 1}}});
  CHECK(con.rows == std::vector<std::vector<int>>{{0, 0}, {0}});
  CHECK(check_tableau_conditions(con));
  CHECK(lattice_word(con).empty());

  // one step adding a box to each of two rows: a single row (1,1) in
  // the conjugate picture
  SkewTableau col = companion_tableau(LRSequence{{Partition{}, Partition{1, 1}}});
  CHECK(col.rows == std::vector<std::vector<int>>{{1, 1}});
  // adding two boxes to one row in a single step is not allowed
  CHECK_THROWS(companion_tableau(LRSequence{{Partition{}, Partition{2}}}));
}

TEST_CASE("tableau condition counterexamples") {
  CHECK_FALSE(check_tableau_conditions(SkewTableau{{{1}, {1}}}));  // repeated in column
  CHECK(check_tableau_conditions(SkewTableau{{{1, 1}, {2}}}));
  CHECK(lattice_word(SkewTableau{{{1, 1}, {2}}}) == std::vector<int>{1, 1, 2});
  // more 2s than 1s in the right-hand columns
  CHECK_FALSE(check_tableau_conditions(SkewTableau{{{0, 1}, {2}, {2}}}));
}

TEST_CASE("enumeration finds the golden sequence") {
  auto seqs = enumerate_lr_sequences({2, 1, 1}, {3, 3, 1}, {4, 3, 2, 2});
  bool found = false;
  for (const auto& A : seqs) found = found || A.stages == kGolden;
  CHECK(found);

  CHECK(enumerate_lr_sequences({3, 1}, {}, {3, 1}).size() == 1);
  CHECK(enumerate_lr_sequences({}, {2, 2}, {2, 2}).size() == 1);
  CHECK(enumerate_lr_sequences({}, {2, 2}, {2, 2})[0].stages ==
        std::vector<Partition>{{}, {1, 1}, {2, 2}});
  CHECK(enumerate_lr_sequences({1}, {2}, {2, 1}).size() == 1);
}

TEST_CASE("sequence count equals the independent tableau count") {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& mu : enumerate_partitions(n, n))
      for (int m = 0; m <= n; ++m)
        for (const Partition& lam : enumerate_partitions(m, m))
          for (const Partition& beta : enumerate_partitions(n - m, n - m)) {
            long long enumerated =
                (long long)enumerate_lr_sequences(lam, beta, mu).size();
            CHECK(enumerated == lr_coefficient_tableau_count(lam, beta, mu));
          }
}

TEST_CASE("sequence definition matches the tableau characterization") {
  // every enumerated sequence's companion tableau satisfies both
  // conditions and restricts to the right shapes
  for (const auto& [lam, beta, mu] :
       {std::tuple{Partition{2, 1, 1}, Partition{3, 3, 1}, Partition{4, 3, 2, 2}},
        {Partition{2}, Partition{2, 1}, Partition{3, 2}},
        {Partition{}, Partition{3, 2}, Partition{3, 2}}}) {
    for (const auto& A : enumerate_lr_sequences(lam, beta, mu)) {
      SkewTableau T = companion_tableau(A);
      CHECK(check_tableau_conditions(T));
      for (size_t h = 0; h < A.stages.size(); ++h) {
        Partition shape = conjugate(A.stages[h]);
        Partition seen;
        for (const auto& row : T.rows) {
          int cnt = 0;
          for (int v : row)
            if (v <= int(h)) ++cnt;
          if (cnt) seen.push_back(cnt);
        }
        CHECK(seen == shape);
      }
    }
  }
}

TEST_CASE("source sets") {
  CHECK(source_partitions({3, 1}, {}) == std::set<Partition>{{3, 1}});
  // p=3, second family: mu = (3^b, 2), beta = (1,1)
  for (int b : {3, 4}) {
    Partition mu(b, 3);
    mu.push_back(2);
    auto predicted = predicted_source_set(mu, {1, 1}, 3);
    REQUIRE(predicted.has_value());
    CHECK(source_partitions(mu, {1, 1}) == *predicted);
  }
  CHECK_FALSE(predicted_source_set({3, 2}, {1}, 3).has_value());
  // first family spot check: p=5, b=4, beta = 5-(2,1) = (4,3); the
  // admissible delta are the one-box extensions of (2,1)
  auto pred = predicted_source_set({5, 5, 5, 5, 1}, {4, 3}, 5);
  REQUIRE(pred.has_value());
  CHECK(*pred == std::set<Partition>{{5, 5, 3, 1}, {5, 5, 2, 2}, {5, 5, 2, 1, 1}});
  CHECK(source_partitions({5, 5, 5, 5, 1}, {4, 3}) == *pred);
}
