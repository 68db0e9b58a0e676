#ifndef RANKVAR_GF_HPP
#define RANKVAR_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "partition.hpp"

namespace rv {

// GF(p^e) with a deterministic modulus: the first monic irreducible of
// degree e found by counting coefficient vectors as base-p integers
// (constant term varying fastest).  Elements are encoded as integers in
// [0, p^e): the polynomial c_0 + c_1 x + ... encodes as sum c_i p^i.
// All arithmetic is table-driven; fields are interned so repeated
// make() calls share tables.
struct Field {
  int p = 0;
  int e = 0;
  int q = 0;                  // p^e
  std::vector<int> modulus;   // low-degree-first, length e+1, monic

  uint16_t add(uint16_t a, uint16_t b) const { return add_t[a * q + b]; }
  uint16_t sub(uint16_t a, uint16_t b) const { return add_t[a * q + neg_t[b]]; }
  uint16_t mul(uint16_t a, uint16_t b) const { return mul_t[a * q + b]; }
  uint16_t neg(uint16_t a) const { return neg_t[a]; }
  uint16_t inv(uint16_t a) const;  // throws on 0
  uint16_t pow(uint16_t a, long n) const;
  // Embed an integer via the prime subfield.
  uint16_t from_int(long c) const;

  const uint16_t* add_row(uint16_t a) const { return add_t.data() + a * q; }
  const uint16_t* mul_row(uint16_t a) const { return mul_t.data() + a * q; }

  static std::shared_ptr<const Field> make(int p, int e);

  std::vector<uint16_t> add_t, mul_t, neg_t, inv_t;
};

using FieldPtr = std::shared_ptr<const Field>;

// Dense matrix over a shared field, row-major.
struct Mat {
  FieldPtr F;
  int rows = 0, cols = 0;
  std::vector<uint16_t> a;

  Mat() = default;
  Mat(FieldPtr f, int r, int c) : F(std::move(f)), rows(r), cols(c), a(size_t(r) * c, 0) {}

  uint16_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
  uint16_t at(int r, int c) const { return a[size_t(r) * cols + c]; }
  uint16_t* row(int r) { return a.data() + size_t(r) * cols; }
  const uint16_t* row(int r) const { return a.data() + size_t(r) * cols; }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

Mat identity(const FieldPtr& F, int n);
Mat mat_add(const Mat& A, const Mat& B);
Mat mat_sub(const Mat& A, const Mat& B);
Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_scale(uint16_t c, const Mat& A);
Mat mat_pow(const Mat& A, int n);
Mat transpose(const Mat& A);
Mat kron(const Mat& A, const Mat& B);
bool is_zero(const Mat& A);

// Row rank by Gaussian elimination, first-nonzero pivoting.
int rank(Mat A);

uint16_t det(Mat A);
Mat inverse(const Mat& A);  // throws if singular

// Matrix of the r-th exterior power of square G on the lex-ordered basis
// of r-subsets; entry (J, I) is det of the J x I minor.
Mat ext_power(const Mat& G, int r);

// r-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int d, int r);

// Jordan block sizes of nilpotent N (N^p == 0, checked) from the rank
// sequence r_j = rank(N^j):  a_i = r_{i-1} - 2 r_i + r_{i+1}.
Partition nilpotent_jordan_type(const Mat& N, int p);

long long binom(int n, int k);

}  // namespace rv

#endif
