#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cp_jordan.hpp"

using namespace rv;

TEST_CASE("unipotent realization round-trips") {
  for (int p : {3, 5, 7}) {
    auto F = Field::make(p, 1);
    JordanType a{p, {p, 3, 1, 1}};
    if (p == 3) a.blocks = {3, 2, 1};
    Mat G = unipotent_matrix(a, F);
    CHECK(mat_pow(G, p) == identity(F, a.dim()));
    CHECK(jt_of_unipotent(G, p) == a);
  }
  CHECK_THROWS(validate_jordan_type(JordanType{3, {4}}));
  CHECK_THROWS(validate_jordan_type(JordanType{3, {1, 2}}));
}

TEST_CASE("tensor products of small blocks") {
  CHECK(jt_tensor({3, {2}}, {3, {2}}) == JordanType{3, {3, 1}});
  CHECK(jt_tensor({3, {2}}, {3, {3}}) == JordanType{3, {3, 3}});
  CHECK(jt_tensor({3, {3}}, {3, {3}}) == JordanType{3, {3, 3, 3}});
  CHECK(jt_tensor({5, {2}}, {5, {2}}) == JordanType{5, {3, 1}});
  CHECK(jt_tensor({5, {2}}, {5, {3}}) == JordanType{5, {4, 2}});
  CHECK(jt_tensor({5, {3}}, {5, {3}}) == JordanType{5, {5, 3, 1}});
  CHECK(jt_tensor({5, {2}}, {5, {5}}) == JordanType{5, {5, 5}});
  // tensoring with a free block stays free
  for (int p : {3, 5, 7})
    for (int m = 1; m <= p; ++m) {
      JordanType t = jt_tensor({p, {m}}, {p, {p}});
      CHECK(is_free_type(t));
      CHECK(t.dim() == m * p);
    }
}

TEST_CASE("tensor distributes over direct sums") {
  JordanType a{5, {3, 2}}, b{5, {4, 1}};
  JordanType lhs = jt_tensor(a, b);
  JordanType rhs{5, {}};
  for (int x : a.blocks)
    for (int y : b.blocks) rhs = jt_direct_sum(rhs, jt_tensor({5, {x}}, {5, {y}}));
  CHECK(lhs == rhs);
}

TEST_CASE("exterior and symmetric powers split the tensor square") {
  for (int p : {3, 5, 7})
    for (int n = 2; n <= p; ++n) {
      JordanType a{p, {n}};
      JordanType split = jt_direct_sum(jt_ext(a, 2), jt_sym(a, 2));
      CHECK(split == jt_tensor(a, a));
    }
}

TEST_CASE("block-additive exterior power agrees with the matrix route") {
  for (int p : {3, 5}) {
    for (const Partition& blocks :
         std::vector<Partition>{{2, 1}, {3, 2}, {3, 2, 1}, {p, 2}, {2, 2, 2}})
      for (int r = 0; r <= 4; ++r) {
        JordanType a{p, blocks};
        if (*std::max_element(blocks.begin(), blocks.end()) > p) continue;
        CHECK(jt_ext_expand(a, r) == jt_ext(a, r));
      }
  }
}

TEST_CASE("exterior power edge cases") {
  JordanType a{5, {3, 1}};
  CHECK(jt_ext(a, 0) == JordanType{5, {1}});
  CHECK(jt_ext(a, 5).blocks.empty());
  CHECK(jt_ext(a, 4) == JordanType{5, {1}});  // top power of a unipotent
}

TEST_CASE("symmetric powers of a free block are free") {
  // projectivity needs k < p
  for (int p : {3, 5}) {
    JordanType a{p, {p}};
    for (int k = 2; k < p && k <= 3; ++k) {
      JordanType s = jt_sym(a, k);
      CHECK(s.dim() == int(binom(p + k - 1, k)));
      CHECK(is_free_type(s));
    }
  }
  CHECK(jt_sym({3, {2}}, 2) == JordanType{3, {3}});
}

TEST_CASE("laurent reduction obeys the defining relation") {
  for (int p : {3, 5, 7}) {
    // q^p and q^{-p} both reduce to the alternating window sum
    LaurentClass up = laurent_monomial(p, p);
    LaurentClass down = laurent_monomial(p, -p);
    CHECK(up == down);
    for (int e = -(p - 1); e <= p - 1; ++e)
      CHECK(up.coeff(e) == (((p - 1 - e) % 2 == 0) ? 1 : -1));
    // multiplying the class of J_p by q fixes it
    CHECK(laurent_shift(laurent_jclass(p, p), 1) == laurent_jclass(p, p));
    // shifts compose
    LaurentClass x = laurent_add(laurent_monomial(p, 1, 2), laurent_monomial(p, -2, 3));
    CHECK(laurent_shift(laurent_shift(x, p - 1), -(p - 1)) == x);
  }
}

TEST_CASE("symbolic exterior powers match the matrix route") {
  for (int p : {3, 5, 7})
    for (int n = 1; n <= p; ++n)
      for (int r = 1; r < p; ++r) {
        JordanType symbolic = gaussian_ext(n, r, p);
        JordanType matrix = jt_ext(JordanType{p, {n}}, r);
        CHECK(symbolic == matrix);
      }
  // top powers of the free block are free of the forced multiplicity
  CHECK(gaussian_ext(5, 2, 5) == JordanType{5, {5, 5}});
  CHECK(gaussian_ext(7, 3, 7) == JordanType{7, {7, 7, 7, 7, 7}});
  CHECK_THROWS(gaussian_ext(3, 3, 3));
}

TEST_CASE("stable and complementary parts") {
  JordanType a{5, {5, 5, 4, 2, 1}};
  CHECK(jt_stable(a) == JordanType{5, {4, 2, 1}});
  CHECK(jt_complementary(a) == JordanType{5, {4, 3, 1}});
  CHECK(jt_stable({5, {5, 5}}).blocks.empty());
}
