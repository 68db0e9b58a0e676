#include "symmod.hpp"

#include <stdexcept>

namespace rv {

void validate_module(const ModuleRep& M) {
  for (const Mat& G : M.gens) {
    if (G.rows != M.dim || G.cols != M.dim)
      throw std::logic_error("module: generator shape mismatch");
    if (!(mat_pow(G, M.p) == identity(M.F, M.dim)))
      throw std::logic_error("module: generator order is not p");
  }
  for (size_t i = 0; i < M.gens.size(); ++i)
    for (size_t j = i + 1; j < M.gens.size(); ++j)
      if (!(mat_mul(M.gens[i], M.gens[j]) == mat_mul(M.gens[j], M.gens[i])))
        throw std::logic_error("module: generators do not commute");
}

Mat perm_action_matrix(const std::vector<int>& perm, const FieldPtr& F) {
  int n = int(perm.size());
  Mat G(F, n - 1, n - 1);
  int one = perm[0];  // sigma(1)
  for (int s = 2; s <= n; ++s) {
    int col = s - 2;
    int img = perm[s - 1];
    if (img != 1) G.at(img - 2, col) = 1;
    if (one != 1) G.at(one - 2, col) = F->sub(G.at(one - 2, col), 1);
  }
  return G;
}

namespace {

std::vector<int> p_cycle(int n, int i, int p) {
  std::vector<int> perm(n);
  for (int x = 1; x <= n; ++x) perm[x - 1] = x;
  int lo = (i - 1) * p + 1, hi = i * p;
  for (int x = lo; x < hi; ++x) perm[x - 1] = x + 1;
  perm[hi - 1] = lo;
  return perm;
}

}  // namespace

ModuleRep natural_specht(int n, int k, const FieldPtr& F) {
  int p = F->p;
  if (k < 1) throw std::invalid_argument("natural_specht: k must be >= 1");
  if (n != k * p && n != k * p + 1)
    throw std::invalid_argument("natural_specht: n must be kp or kp+1");
  ModuleRep M;
  M.F = F;
  M.p = p;
  M.k = k;
  M.dim = n - 1;
  M.label = "S(" + std::to_string(n - 1) + ",1) n=" + std::to_string(n);
  for (int i = 1; i <= k; ++i) M.gens.push_back(perm_action_matrix(p_cycle(n, i, p), F));
  return M;
}

namespace {

Mat x_op(const ModuleRep& M, int i) { return mat_sub(M.gens[i], identity(M.F, M.dim)); }

}  // namespace

Mat b_basis_change(int k, int p, const FieldPtr& F, bool primed) {
  if (k < 2) throw std::invalid_argument("b_basis_change: k must be >= 2");
  int n = primed ? k * p + 1 : k * p;
  ModuleRep M = natural_specht(n, k, F);
  int dim = M.dim;
  Mat A(F, dim, dim);
  std::vector<Mat> X;
  for (int i = 0; i < k; ++i) X.push_back(x_op(M, i));

  auto apply = [&](const Mat& op, const std::vector<uint16_t>& v) {
    std::vector<uint16_t> w(dim, 0);
    for (int c = 0; c < dim; ++c) {
      if (!v[c]) continue;
      for (int r = 0; r < dim; ++r)
        if (op.at(r, c)) w[r] = F->add(w[r], F->mul(op.at(r, c), v[c]));
    }
    return w;
  };

  int row = 0;
  std::vector<uint16_t> v(dim, 0);
  v[0] = 1;  // b_1 = e_2
  for (int r = 0; r <= p - 2; ++r) {
    for (int c = 0; c < dim; ++c) A.at(row, c) = v[c];
    ++row;
    if (r < p - 2) v = apply(X[0], v);
  }
  for (int i = 2; i <= k; ++i) {
    v.assign(dim, 0);
    v[(i - 1) * p - 1] = 1;      // e_{(i-1)p+1}
    v[0] = F->neg(uint16_t(1));  // - e_2
    for (int r = 0; r <= p - 1; ++r) {
      for (int c = 0; c < dim; ++c) A.at(row, c) = v[c];
      ++row;
      if (r < p - 1) v = apply(X[i - 1], v);
    }
  }
  if (primed) {
    for (int c = 0; c < dim; ++c) A.at(row, c) = 0;
    A.at(row, dim - 1) = 1;  // b_{k+1} = e_{kp+1}
    ++row;
  }
  if (row != dim) throw std::logic_error("b_basis_change: row count mismatch");
  for (int i = 0; i < dim; ++i) {
    if (!A.at(i, i)) throw std::logic_error("b_basis_change: zero diagonal");
    for (int j = i + 1; j < dim; ++j)
      if (A.at(i, j)) throw std::logic_error("b_basis_change: not lower triangular");
  }
  return A;
}

Mat matrix_L(const std::vector<uint16_t>& alpha, int k, int p, const FieldPtr& F,
             bool primed, bool derived) {
  if (int(alpha.size()) != k) throw std::invalid_argument("matrix_L: alpha length mismatch");
  int dim = primed ? k * p : k * p - 1;
  if (derived) {
    int n = primed ? k * p + 1 : k * p;
    ModuleRep M = natural_specht(n, k, F);
    Mat Xa(F, dim, dim);
    for (int i = 0; i < k; ++i)
      Xa = mat_add(Xa, mat_scale(alpha[i], x_op(M, i)));
    Mat At = transpose(b_basis_change(k, p, F, primed));
    return mat_mul(mat_mul(inverse(At), Xa), At);
  }
  Mat L(F, dim, dim);
  // block 1: size p-1, subdiagonal alpha_1
  for (int r = 0; r + 1 <= p - 2; ++r) L.at(r + 1, r) = alpha[0];
  // blocks 2..k: size p, subdiagonal alpha_i; first column feeds back
  // -alpha_1 into rows 1 and 2
  uint16_t neg_a1 = F->neg(alpha[0]);
  for (int i = 2; i <= k; ++i) {
    int off = (p - 1) + (i - 2) * p;
    for (int r = 0; r + 1 <= p - 1; ++r) L.at(off + r + 1, off + r) = alpha[i - 1];
    L.at(0, off) = neg_a1;
    L.at(1, off) = neg_a1;
  }
  if (primed) {
    // X_1 e_{kp+1} = t_1 - t_2 = -e_2, so the extra 1x1 block feeds back
    // -alpha_1 into row 1 only
    L.at(0, dim - 1) = neg_a1;
  }
  return L;
}

ModuleRep quotient_D1(int k, int p, const FieldPtr& F) {
  if (k < 1) throw std::invalid_argument("quotient_D1: k must be >= 1");
  ModuleRep S = natural_specht(k * p, k, F);
  ModuleRep M;
  M.F = F;
  M.p = p;
  M.k = k;
  M.dim = k * p - 2;
  M.label = "D(1) kp=" + std::to_string(k * p);
  for (const Mat& G : S.gens) {
    // old index 0 <-> e_2 (eliminated), old index j >= 1 <-> e_{j+2}
    Mat H(F, M.dim, M.dim);
    for (int s = 0; s < M.dim; ++s) {
      // image of e_{s+3}: column s+1 of G; rewrite the e_2 component as
      // -(e_3 + ... + e_{kp})
      uint16_t c2 = G.at(0, s + 1);
      for (int t = 0; t < M.dim; ++t) H.at(t, s) = F->sub(G.at(t + 1, s + 1), c2);
    }
    M.gens.push_back(H);
  }
  return M;
}

ModuleRep ext_power_module(const ModuleRep& M, int r, const std::string& label) {
  if (r < 1 || r > M.dim) throw std::invalid_argument("ext_power_module: r out of range");
  ModuleRep E;
  E.F = M.F;
  E.p = M.p;
  E.k = M.k;
  E.dim = int(binom(M.dim, r));
  E.label = label.empty() ? ("ext^" + std::to_string(r) + "(" + M.label + ")") : label;
  for (const Mat& G : M.gens) E.gens.push_back(ext_power(G, r));
  return E;
}

}  // namespace rv
