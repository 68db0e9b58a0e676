#ifndef RANKVAR_CP_JORDAN_HPP
#define RANKVAR_CP_JORDAN_HPP

#include "gf.hpp"
#include "partition.hpp"

namespace rv {

// A multiset of Jordan block sizes of a p-nilpotent operator; the
// isomorphism type of a module for the cyclic group of order p.
struct JordanType {
  int p = 0;
  Partition blocks;  // weakly decreasing, every part in 1..p

  int dim() const { return weight(blocks); }
  bool operator==(const JordanType& o) const { return p == o.p && blocks == o.blocks; }
};

void validate_jordan_type(const JordanType& a);

// Whether the type is a direct sum of blocks of size p only.
bool is_free_type(const JordanType& a);

// Unipotent realization: block-diagonal with 1s on the diagonal and on
// the subdiagonal of each block.  Over GF(p).
Mat unipotent_matrix(const JordanType& a, const FieldPtr& F);

// Jordan type of G - I for a group-generator matrix G of order p.
JordanType jt_of_unipotent(const Mat& G, int p);

JordanType jt_direct_sum(const JordanType& a, const JordanType& b);

// Tensor product of types, realized by Kronecker products block pair by
// block pair.
JordanType jt_tensor(const JordanType& a, const JordanType& b);

// r-th exterior power via the minor-determinant functor on a unipotent
// realization.  Valid for every r >= 1; r larger than dim gives the
// zero module (empty type) and r = 0 the trivial type [1].
JordanType jt_ext(const JordanType& a, int r);

// Same value as jt_ext, but computed additively block by block:
// ext(J_n (+) rest, r) = (+)_i ext(J_n, i) (x) ext(rest, r-i).
// Cheap for high-dimensional multi-block types.
JordanType jt_ext_expand(const JordanType& a, int r);

// Matrix of the k-th symmetric power on the sorted-monomial basis.
Mat sym_power(const Mat& G, int k);

// k-th symmetric power on the monomial basis.
JordanType jt_sym(const JordanType& a, int k);

// Jordan type of the r-th exterior power of J_n read off symbolically
// from the Gaussian-polynomial recurrence in the quotient of the
// representation ring; requires 1 <= r < p, 1 <= n <= p.
JordanType gaussian_ext(int n, int r, int p);

// Drop all parts equal to p.
JordanType jt_stable(const JordanType& a);

// Stable part with each block size m replaced by p - m.
JordanType jt_complementary(const JordanType& a);

// A symmetric Laurent polynomial in q reduced modulo
// (q - 1)(q^{p-1} + q^{p-3} + ... + q^{-p+1}); canonical representative
// with exponents in [-(p-1), p-1].
struct LaurentClass {
  int p = 0;
  std::vector<long long> coeffs;  // index i <-> exponent i - (p-1)

  long long coeff(int exponent) const;
  bool operator==(const LaurentClass& o) const { return p == o.p && coeffs == o.coeffs; }
};

LaurentClass laurent_zero(int p);
LaurentClass laurent_monomial(int p, int exponent, long long c = 1);
LaurentClass laurent_add(const LaurentClass& a, const LaurentClass& b);
LaurentClass laurent_shift(const LaurentClass& a, int exponent);  // multiply by q^exponent
// Class of J_m: q^{m-1} + q^{m-3} + ... + q^{-m+1}.
LaurentClass laurent_jclass(int p, int m);

}  // namespace rv

#endif
