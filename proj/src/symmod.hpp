#ifndef RANKVAR_SYMMOD_HPP
#define RANKVAR_SYMMOD_HPP

#include <string>
#include <vector>

#include "gf.hpp"
#include "partition.hpp"

namespace rv {

// A module for the rank-k elementary abelian p-group inside S_{kp} (or
// S_{kp+1}) generated by the disjoint p-cycles g_1,...,g_k, given by the
// matrices of the generators on a fixed ordered basis (column-action
// convention: vectors are columns).
struct ModuleRep {
  FieldPtr F;
  int p = 0;
  int k = 0;
  int dim = 0;
  std::vector<Mat> gens;  // images of g_1,...,g_k
  std::string label;
};

// Checks that every generator is invertible of order p and that the
// generators pairwise commute; throws std::logic_error otherwise.
void validate_module(const ModuleRep& M);

// Matrix of a permutation of {1..n} on the basis e_2,...,e_n of the
// standard module, where sigma e_i = e_{sigma(i)} - e_{sigma(1)} and
// e_1 = 0.  perm is the image list: perm[i-1] = sigma(i).
Mat perm_action_matrix(const std::vector<int>& perm, const FieldPtr& F);

// The standard (n-1)-dimensional module on basis e_2,...,e_n with the k
// p-cycle generators g_i = ((i-1)p+1, ..., ip).  Requires n = kp or kp+1.
ModuleRep natural_specht(int n, int k, const FieldPtr& F);

// The matrix A whose rows express the chain basis
//   b_1, X_1 b_1, ..., X_1^{p-2} b_1, b_2, ..., X_k^{p-1} b_k
// (and additionally b_{k+1} = e_{kp+1} when primed) in the e-basis,
// where b_1 = e_2 and b_i = e_{(i-1)p+1} - e_2.  Rows are produced by
// iterating the operators X_i = G_i - I on the n = kp (unprimed) or
// n = kp+1 (primed) standard module.  Always lower triangular with
// nonzero diagonal (checked).
Mat b_basis_change(int k, int p, const FieldPtr& F, bool primed);

// The matrix of X_alpha = sum alpha_i (G_i - I) on the chain basis.
// With derived = false it is assembled from the block description:
// block 1 of size p-1 with subdiagonal alpha_1 (size p for the other
// blocks, subdiagonal alpha_i), and -alpha_1 in rows 1 and 2 of the
// first column of every later block (plus the final 1x1 block column
// when primed).  With derived = true it is computed as
// A^{-T} [X_alpha]_e A^T from b_basis_change.  The two paths agree.
Mat matrix_L(const std::vector<uint16_t>& alpha, int k, int p, const FieldPtr& F,
             bool primed, bool derived);

// The quotient of the n = kp standard module by the invariant line
// spanned by e_2 + ... + e_{kp}, on the basis of the images of
// e_3,...,e_{kp} (so e_2 is rewritten as -(e_3 + ... + e_{kp})).
// Dimension kp - 2.
ModuleRep quotient_D1(int k, int p, const FieldPtr& F);

// Applies the r-th exterior power functor to each group generator.
// The operator of X_alpha on the result is sum alpha_i (ext(G_i) - I),
// not the exterior power of the matrix of X_alpha.
ModuleRep ext_power_module(const ModuleRep& M, int r, const std::string& label = "");

}  // namespace rv

#endif
