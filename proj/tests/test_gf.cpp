#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gf.hpp"

using namespace rv;

static Mat random_invertible(const FieldPtr& F, int n, std::mt19937_64& rng) {
  while (true) {
    Mat M(F, n, n);
    std::uniform_int_distribution<int> dist(0, F->q - 1);
    for (auto& v : M.a) v = uint16_t(dist(rng));
    if (rank(M) == n) return M;
  }
}

TEST_CASE("field moduli are deterministic") {
  auto f31 = Field::make(3, 1);
  CHECK(f31->modulus == std::vector<int>{0, 1});
  auto f32 = Field::make(3, 2);
  CHECK(f32->modulus == std::vector<int>{1, 0, 1});  // x^2 + 1
  auto f52 = Field::make(5, 2);
  CHECK(f52->modulus == std::vector<int>{2, 0, 1});  // x^2 + 2
  CHECK_THROWS(Field::make(4, 1));
  CHECK_THROWS(Field::make(2, 1));
}

TEST_CASE("field axioms, small exhaustive") {
  for (auto [p, e] : {std::pair{3, 2}, {5, 2}, {7, 1}}) {
    auto F = Field::make(p, e);
    for (int a = 0; a < F->q; ++a) {
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      for (int b = 0; b < F->q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
      }
    }
    // Frobenius fixed field check: a^q = a
    for (int a = 0; a < F->q; ++a) CHECK(F->pow(a, F->q) == a);
  }
}

TEST_CASE("rank basics") {
  auto F = Field::make(5, 1);
  CHECK(rank(identity(F, 4)) == 4);
  CHECK(rank(Mat(F, 3, 3)) == 0);
  Mat M(F, 2, 2);
  M.at(0, 0) = 1;
  M.at(0, 1) = 2;
  M.at(1, 0) = 2;
  M.at(1, 1) = 4;
  CHECK(rank(M) == 1);
}

TEST_CASE("rank equals rank of transpose") {
  std::mt19937_64 rng(7);
  auto F = Field::make(3, 2);
  std::uniform_int_distribution<int> dist(0, F->q - 1);
  for (int t = 0; t < 30; ++t) {
    Mat M(F, 5, 7);
    for (auto& v : M.a) v = uint16_t(dist(rng));
    CHECK(rank(M) == rank(transpose(M)));
  }
}

TEST_CASE("kron shape and identity laws") {
  auto F = Field::make(3, 1);
  Mat M(F, 2, 3);
  for (int i = 0; i < 6; ++i) M.a[i] = uint16_t(i % 3);
  Mat K = kron(identity(F, 2), M);
  CHECK(K.rows == 4);
  CHECK(K.cols == 6);
  CHECK(K.at(0, 0) == M.at(0, 0));
  CHECK(K.at(2, 3) == M.at(0, 0));
  Mat c(F, 1, 1);
  c.at(0, 0) = 2;
  CHECK(kron(c, M) == mat_scale(2, M));
  Mat A(F, 2, 3), B(F, 4, 5);
  CHECK(kron(A, B).rows == 8);
  CHECK(kron(A, B).cols == 15);
}

TEST_CASE("nilpotent jordan type") {
  auto F = Field::make(3, 1);
  Mat J3(F, 3, 3);
  J3.at(1, 0) = 1;
  J3.at(2, 1) = 1;
  CHECK(nilpotent_jordan_type(J3, 3) == Partition{3});
  CHECK(nilpotent_jordan_type(Mat(F, 4, 4), 3) == Partition{1, 1, 1, 1});
  CHECK_THROWS(nilpotent_jordan_type(identity(F, 2), 3));
}

TEST_CASE("jordan type round-trips through the rank sequence") {
  std::mt19937_64 rng(11);
  auto F = Field::make(5, 1);
  std::uniform_int_distribution<int> bdist(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Partition blocks;
    for (int i = 0, nb = 1 + int(rng() % 4); i < nb; ++i) blocks.push_back(bdist(rng));
    std::sort(blocks.rbegin(), blocks.rend());
    int dim = weight(blocks);
    Mat N(F, dim, dim);
    int off = 0;
    for (int b : blocks) {
      for (int i = 1; i < b; ++i) N.at(off + i, off + i - 1) = 1;
      off += b;
    }
    // conjugate by a random invertible matrix
    Mat P = random_invertible(F, dim, rng);
    Mat M = mat_mul(mat_mul(P, N), inverse(P));
    CHECK(nilpotent_jordan_type(M, 5) == blocks);
    Mat Pw = M;
    for (int j = 1; j <= 5; ++j) {
      int expect = 0;
      for (int b : blocks) expect += std::max(b - j, 0);
      CHECK(rank(Pw) == expect);
      if (j < 5) Pw = mat_mul(Pw, M);
    }
  }
}

TEST_CASE("ext_power basics") {
  auto F = Field::make(5, 1);
  std::mt19937_64 rng(3);
  Mat G = random_invertible(F, 4, rng);
  CHECK(ext_power(G, 1) == G);
  Mat top = ext_power(G, 4);
  CHECK(top.rows == 1);
  CHECK(top.at(0, 0) == det(G));
  Mat U(F, 2, 2);
  U.at(0, 0) = 1;
  U.at(0, 1) = 1;
  U.at(1, 1) = 1;
  Mat w = ext_power(U, 2);
  CHECK(w.rows == 1);
  CHECK(w.at(0, 0) == 1);
  CHECK_THROWS(ext_power(G, 5));
}

TEST_CASE("ext_power is functorial and preserves invertibility") {
  std::mt19937_64 rng(19);
  for (auto [p, e] : {std::pair{3, 1}, {5, 2}}) {
    auto F = Field::make(p, e);
    for (int d = 2; d <= 6; ++d)
      for (int r = 1; r <= d; ++r) {
        Mat G = random_invertible(F, d, rng);
        Mat H = random_invertible(F, d, rng);
        CHECK(ext_power(mat_mul(G, H), r) == mat_mul(ext_power(G, r), ext_power(H, r)));
        CHECK(rank(ext_power(G, r)) == int(binom(d, r)));
      }
  }
}
