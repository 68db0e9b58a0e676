#include "gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace rv {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomial helpers over GF(p), coefficients low-degree-first.
using Poly = std::vector<int>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mod(Poly f, const Poly& g, int p) {
  f = trim(f);
  int dg = int(g.size()) - 1;
  while (int(f.size()) - 1 >= dg) {
    int df = int(f.size()) - 1;
    // g is monic
    int c = f[df];
    for (int i = 0; i <= dg; ++i) {
      int& t = f[df - dg + i];
      t = ((t - c * g[i]) % p + p * p) % p;
    }
    f = trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& f, const Poly& g, const Poly& mod, int p) {
  Poly prod(f.size() + g.size(), 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      prod[i + j] = (prod[i + j] + f[i] * g[j]) % p;
  return poly_mod(std::move(prod), mod, p);
}

Poly poly_powmod(Poly base, long long n, const Poly& mod, int p) {
  Poly result{1};
  while (n > 0) {
    if (n & 1) result = poly_mulmod(result, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    n >>= 1;
  }
  return result;
}

// Irreducibility over GF(p) for monic f of degree e: x^(p^e) == x mod f
// and gcd conditions via x^(p^(e/t)) != x for prime divisors t of e.
bool is_irreducible(const Poly& f, int p) {
  int e = int(f.size()) - 1;
  if (e == 1) return true;
  auto frob_pow = [&](int m) {
    // x^(p^m) mod f
    long long n = 1;
    for (int i = 0; i < m; ++i) n *= p;
    return poly_powmod(Poly{0, 1}, n, f, p);
  };
  if (trim(frob_pow(e)) != trim(Poly{0, 1})) return false;
  for (int t = 2; t <= e; ++t) {
    if (e % t == 0 && is_prime(t)) {
      if (trim(frob_pow(e / t)) == trim(Poly{0, 1})) return false;
    }
  }
  return true;
}

int encode_poly(const Poly& f, int p) {
  int v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * p + *it;
  return v;
}

Poly decode_poly(int v, int p, int len) {
  Poly f(len, 0);
  for (int i = 0; i < len; ++i) {
    f[i] = v % p;
    v /= p;
  }
  return f;
}

}  // namespace

uint16_t Field::inv(uint16_t a) const {
  if (a == 0) throw std::domain_error("field inverse of zero");
  return inv_t[a];
}

uint16_t Field::pow(uint16_t a, long n) const {
  if (n < 0) return pow(inv(a), -n);
  uint16_t result = from_int(1);
  uint16_t base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

uint16_t Field::from_int(long c) const {
  long r = c % p;
  if (r < 0) r += p;
  return uint16_t(r);
}

std::shared_ptr<const Field> Field::make(int p, int e) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");

  static std::mutex cache_mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find({p, e});
    if (it != cache.end()) return it->second;
  }

  auto F = std::make_shared<Field>();
  F->p = p;
  F->e = e;
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  F->q = q;
  if (q > 60000) throw std::invalid_argument("field too large");

  // First monic irreducible of degree e, scanning lower coefficient
  // vectors as base-p counters (constant term fastest).  Degree 1 gets
  // the sentinel modulus x.
  if (e == 1) {
    F->modulus = {0, 1};
  } else {
    Poly found;
    for (int v = 1; v < q; ++v) {
      Poly cand = decode_poly(v, p, e);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        found = cand;
        break;
      }
    }
    if (found.empty()) throw std::logic_error("no irreducible polynomial found");
    F->modulus = found;
  }

  F->add_t.resize(size_t(q) * q);
  F->mul_t.resize(size_t(q) * q);
  F->neg_t.resize(q);
  F->inv_t.resize(q);

  for (int a = 0; a < q; ++a) {
    Poly fa = decode_poly(a, p, e);
    Poly na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - fa[i]) % p;
    F->neg_t[a] = uint16_t(encode_poly(na, p));
    for (int b = 0; b < q; ++b) {
      Poly fb = decode_poly(b, p, e);
      Poly s(e);
      for (int i = 0; i < e; ++i) s[i] = (fa[i] + fb[i]) % p;
      F->add_t[size_t(a) * q + b] = uint16_t(encode_poly(s, p));
      Poly m = poly_mulmod(fa, fb, F->modulus, p);
      m.resize(e, 0);
      F->mul_t[size_t(a) * q + b] = uint16_t(encode_poly(m, p));
    }
  }
  F->inv_t[0] = 0;
  for (int a = 1; a < q; ++a) {
    // q is small; scan.
    for (int b = 1; b < q; ++b) {
      if (F->mul_t[size_t(a) * q + b] == 1) {
        F->inv_t[a] = uint16_t(b);
        break;
      }
    }
  }

  std::lock_guard<std::mutex> lock(cache_mu);
  cache[{p, e}] = F;
  return F;
}

static void check_same_field(const Mat& A, const Mat& B) {
  if (A.F != B.F) throw std::invalid_argument("field mismatch");
}

Mat identity(const FieldPtr& F, int n) {
  Mat I(F, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat mat_add(const Mat& A, const Mat& B) {
  check_same_field(A, B);
  if (A.rows != B.rows || A.cols != B.cols)
    throw std::invalid_argument("dimension mismatch");
  Mat C = A;
  const Field& F = *A.F;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(C.a[i], B.a[i]);
  return C;
}

Mat mat_sub(const Mat& A, const Mat& B) {
  check_same_field(A, B);
  if (A.rows != B.rows || A.cols != B.cols)
    throw std::invalid_argument("dimension mismatch");
  Mat C = A;
  const Field& F = *A.F;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(C.a[i], B.a[i]);
  return C;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  check_same_field(A, B);
  if (A.cols != B.rows) throw std::invalid_argument("dimension mismatch");
  Mat C(A.F, A.rows, B.cols);
  const Field& F = *A.F;
  for (int i = 0; i < A.rows; ++i) {
    uint16_t* ci = C.row(i);
    const uint16_t* ai = A.row(i);
    for (int k = 0; k < A.cols; ++k) {
      uint16_t v = ai[k];
      if (v == 0) continue;
      const uint16_t* mul_v = F.mul_row(v);
      const uint16_t* bk = B.row(k);
      for (int j = 0; j < B.cols; ++j) {
        uint16_t prod = mul_v[bk[j]];
        ci[j] = F.add(ci[j], prod);
      }
    }
  }
  return C;
}

Mat mat_scale(uint16_t c, const Mat& A) {
  Mat C = A;
  const Field& F = *A.F;
  const uint16_t* mul_c = F.mul_row(c);
  for (auto& v : C.a) v = mul_c[v];
  return C;
}

Mat mat_pow(const Mat& A, int n) {
  if (A.rows != A.cols) throw std::invalid_argument("mat_pow: not square");
  Mat R = identity(A.F, A.rows);
  Mat base = A;
  while (n > 0) {
    if (n & 1) R = mat_mul(R, base);
    if (n >>= 1) base = mat_mul(base, base);
  }
  return R;
}

Mat transpose(const Mat& A) {
  Mat T(A.F, A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Mat kron(const Mat& A, const Mat& B) {
  check_same_field(A, B);
  Mat C(A.F, A.rows * B.rows, A.cols * B.cols);
  const Field& F = *A.F;
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      uint16_t v = A.at(i, j);
      if (v == 0) continue;
      const uint16_t* mul_v = F.mul_row(v);
      for (int r = 0; r < B.rows; ++r)
        for (int c = 0; c < B.cols; ++c)
          C.at(i * B.rows + r, j * B.cols + c) = mul_v[B.at(r, c)];
    }
  return C;
}

bool is_zero(const Mat& A) {
  for (uint16_t v : A.a)
    if (v) return false;
  return true;
}

int rank(Mat A) {
  const Field& F = *A.F;
  int r = 0;
  for (int col = 0; col < A.cols && r < A.rows; ++col) {
    int piv = -1;
    for (int i = r; i < A.rows; ++i)
      if (A.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = col; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
    uint16_t inv_p = F.inv(A.at(r, col));
    const uint16_t* mul_inv = F.mul_row(inv_p);
    for (int j = col; j < A.cols; ++j) A.at(r, j) = mul_inv[A.at(r, j)];
    for (int i = r + 1; i < A.rows; ++i) {
      uint16_t f = A.at(i, col);
      if (!f) continue;
      const uint16_t* mul_f = F.mul_row(f);
      uint16_t* ri = A.row(i);
      const uint16_t* rr = A.row(r);
      for (int j = col; j < A.cols; ++j) ri[j] = F.sub(ri[j], mul_f[rr[j]]);
    }
    ++r;
  }
  return r;
}

uint16_t det(Mat A) {
  if (A.rows != A.cols) throw std::invalid_argument("det: not square");
  const Field& F = *A.F;
  int n = A.rows;
  uint16_t d = F.from_int(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (A.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
      d = F.neg(d);
    }
    uint16_t pv = A.at(col, col);
    d = F.mul(d, pv);
    uint16_t inv_p = F.inv(pv);
    for (int i = col + 1; i < n; ++i) {
      uint16_t f = F.mul(A.at(i, col), inv_p);
      if (!f) continue;
      const uint16_t* mul_f = F.mul_row(f);
      for (int j = col; j < n; ++j)
        A.at(i, j) = F.sub(A.at(i, j), mul_f[A.at(col, j)]);
    }
  }
  return d;
}

Mat inverse(const Mat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse: not square");
  const Field& F = *A.F;
  int n = A.rows;
  Mat W = A;
  Mat I = identity(A.F, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (W.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(W.at(piv, j), W.at(col, j));
        std::swap(I.at(piv, j), I.at(col, j));
      }
    uint16_t inv_p = F.inv(W.at(col, col));
    const uint16_t* mul_inv = F.mul_row(inv_p);
    for (int j = 0; j < n; ++j) {
      W.at(col, j) = mul_inv[W.at(col, j)];
      I.at(col, j) = mul_inv[I.at(col, j)];
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      uint16_t f = W.at(i, col);
      if (!f) continue;
      const uint16_t* mul_f = F.mul_row(f);
      for (int j = 0; j < n; ++j) {
        W.at(i, j) = F.sub(W.at(i, j), mul_f[W.at(col, j)]);
        I.at(i, j) = F.sub(I.at(i, j), mul_f[I.at(col, j)]);
      }
    }
  }
  return I;
}

std::vector<std::vector<int>> subsets_lex(int d, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > d) return out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == d - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Mat ext_power(const Mat& G, int r) {
  if (G.rows != G.cols) throw std::invalid_argument("ext_power: not square");
  if (r < 1 || r > G.rows) throw std::invalid_argument("ext_power: r out of range");
  auto subs = subsets_lex(G.rows, r);
  int n = int(subs.size());
  Mat W(G.F, n, n);
  Mat minor(G.F, r, r);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) minor.at(i, j) = G.at(subs[row][i], subs[col][j]);
      W.at(row, col) = det(minor);
    }
  }
  return W;
}

Partition nilpotent_jordan_type(const Mat& N, int p) {
  if (N.rows != N.cols) throw std::invalid_argument("jordan type: not square");
  int dim = N.rows;
  std::vector<int> r(p + 2, 0);
  r[0] = dim;
  Mat P = N;
  for (int j = 1; j <= p; ++j) {
    r[j] = rank(P);
    if (j < p && r[j] > 0) P = mat_mul(P, N);
    if (j == p || r[j] == 0) {
      if (j == p && r[j] != 0) throw std::domain_error("not p-nilpotent");
      break;
    }
  }
  Partition type;
  for (int i = p; i >= 1; --i) {
    int mult = r[i - 1] - 2 * r[i] + r[i + 1];
    if (mult < 0) throw std::logic_error("rank sequence not convex");
    for (int t = 0; t < mult; ++t) type.push_back(i);
  }
  if (weight(type) != dim) throw std::logic_error("jordan type weight mismatch");
  return type;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace rv
