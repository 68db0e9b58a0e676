#include "cp_jordan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace rv {

void validate_jordan_type(const JordanType& a) {
  if (a.p < 3) throw std::invalid_argument("jordan type: p must be an odd prime >= 3");
  if (!is_valid_partition(a.blocks))
    throw std::invalid_argument("jordan type: blocks not a partition");
  for (int b : a.blocks)
    if (b > a.p) throw std::invalid_argument("jordan type: block larger than p");
}

bool is_free_type(const JordanType& a) {
  for (int b : a.blocks)
    if (b != a.p) return false;
  return true;
}

Mat unipotent_matrix(const JordanType& a, const FieldPtr& F) {
  validate_jordan_type(a);
  int dim = a.dim();
  Mat G = identity(F, dim);
  int off = 0;
  for (int b : a.blocks) {
    for (int i = 1; i < b; ++i) G.at(off + i, off + i - 1) = 1;
    off += b;
  }
  return G;
}

JordanType jt_of_unipotent(const Mat& G, int p) {
  Mat N = mat_sub(G, identity(G.F, G.rows));
  return JordanType{p, nilpotent_jordan_type(N, p)};
}

JordanType jt_direct_sum(const JordanType& a, const JordanType& b) {
  if (a.p != b.p) throw std::invalid_argument("jordan type: p mismatch");
  return JordanType{a.p, union_sort(a.blocks, b.blocks)};
}

namespace {

// J_a (x) J_b for single blocks, memoized per p.
const Partition& block_tensor(int p, int a, int b) {
  static std::map<std::tuple<int, int, int>, Partition> cache;
  if (a > b) std::swap(a, b);
  auto key = std::make_tuple(p, a, b);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto F = Field::make(p, 1);
  Mat Ua = unipotent_matrix(JordanType{p, {a}}, F);
  Mat Ub = unipotent_matrix(JordanType{p, {b}}, F);
  Mat N = mat_sub(kron(Ua, Ub), identity(F, a * b));
  return cache.emplace(key, nilpotent_jordan_type(N, p)).first->second;
}

// Multiset ranking on sorted k-tuples from {0..d-1}, lex order.
struct MultisetIndex {
  int d, k;
  std::vector<std::vector<int>> sets;
  std::unordered_map<long long, int> index;

  MultisetIndex(int d_, int k_) : d(d_), k(k_) {
    std::vector<int> cur(k, 0);
    while (true) {
      sets.push_back(cur);
      index[encode(cur)] = int(sets.size()) - 1;
      int i = k - 1;
      while (i >= 0 && cur[i] == d - 1) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
    }
  }

  long long encode(const std::vector<int>& m) const {
    long long v = 0;
    for (int x : m) v = v * d + x;
    return v;
  }
};

}  // namespace

JordanType jt_tensor(const JordanType& a, const JordanType& b) {
  if (a.p != b.p) throw std::invalid_argument("jordan type: p mismatch");
  validate_jordan_type(a);
  validate_jordan_type(b);
  Partition out;
  for (int x : a.blocks)
    for (int y : b.blocks) out = union_sort(out, block_tensor(a.p, x, y));
  return JordanType{a.p, out};
}

JordanType jt_ext(const JordanType& a, int r) {
  validate_jordan_type(a);
  if (r < 0) throw std::invalid_argument("jt_ext: negative r");
  if (r == 0) return JordanType{a.p, {1}};
  int d = a.dim();
  if (r > d) return JordanType{a.p, {}};
  if (binom(d, r) > 20000) throw std::invalid_argument("jt_ext: dimension too large; use jt_ext_expand");
  auto F = Field::make(a.p, 1);
  Mat W = ext_power(unipotent_matrix(a, F), r);
  return jt_of_unipotent(W, a.p);
}

JordanType jt_ext_expand(const JordanType& a, int r) {
  validate_jordan_type(a);
  if (r == 0) return JordanType{a.p, {1}};
  if (a.blocks.empty()) return JordanType{a.p, {}};
  if (a.blocks.size() == 1) return jt_ext(a, r);
  JordanType head{a.p, {a.blocks[0]}};
  JordanType rest{a.p, Partition(a.blocks.begin() + 1, a.blocks.end())};
  JordanType out{a.p, {}};
  for (int i = 0; i <= std::min(r, head.dim()); ++i) {
    JordanType left = jt_ext(head, i);
    JordanType right = jt_ext_expand(rest, r - i);
    if (left.blocks.empty() || right.blocks.empty()) continue;
    out = jt_direct_sum(out, jt_tensor(left, right));
  }
  return out;
}

Mat sym_power(const Mat& G, int k) {
  if (G.rows != G.cols) throw std::invalid_argument("sym_power: not square");
  if (k < 1) throw std::invalid_argument("sym_power: k must be >= 1");
  int d = G.rows;
  const Field& F = *G.F;
  MultisetIndex idx(d, k);
  int n = int(idx.sets.size());
  Mat S(G.F, n, n);
  // Column for the monomial m: expand the product of the images of its
  // factors, one factor at a time over multisets of growing size.
  std::vector<std::pair<std::vector<int>, uint16_t>> cur, next;
  for (int col = 0; col < n; ++col) {
    cur.assign(1, {std::vector<int>{}, uint16_t(1)});
    for (int j : idx.sets[col]) {
      std::map<std::vector<int>, uint16_t> acc;
      for (const auto& [mono, c] : cur) {
        for (int i = 0; i < d; ++i) {
          uint16_t g = G.at(i, j);
          if (!g) continue;
          std::vector<int> m2 = mono;
          m2.insert(std::lower_bound(m2.begin(), m2.end(), i), i);
          uint16_t& slot = acc[m2];
          slot = F.add(slot, F.mul(c, g));
        }
      }
      next.assign(acc.begin(), acc.end());
      cur.swap(next);
    }
    for (const auto& [mono, c] : cur) S.at(idx.index.at(idx.encode(mono)), col) = c;
  }
  return S;
}

JordanType jt_sym(const JordanType& a, int k) {
  validate_jordan_type(a);
  if (k < 1) throw std::invalid_argument("jt_sym: k must be >= 1");
  if (k == 1) return a;
  auto F = Field::make(a.p, 1);
  Mat S = sym_power(unipotent_matrix(a, F), k);
  return jt_of_unipotent(S, a.p);
}

long long LaurentClass::coeff(int exponent) const {
  int i = exponent + (p - 1);
  if (i < 0 || i >= int(coeffs.size())) return 0;
  return coeffs[i];
}

LaurentClass laurent_zero(int p) {
  LaurentClass c;
  c.p = p;
  c.coeffs.assign(2 * p - 1, 0);
  return c;
}

namespace {

// Canonical reduction into exponent window [-(p-1), p-1] using
// q^{+-p} = (q^{p-1}+q^{p-3}+...+q^{-p+1}) - (q^{p-2}+q^{p-4}+...+q^{-p+2}).
LaurentClass reduce_map(int p, std::map<int, long long> work) {
  auto sign_at = [&](int j) { return ((p - 1 - j) % 2 + 2) % 2 == 0 ? 1 : -1; };
  while (true) {
    auto it = work.end();
    for (auto w = work.begin(); w != work.end(); ++w)
      if (w->second != 0 && (w->first > p - 1 || w->first < -(p - 1))) {
        it = w;
        break;
      }
    if (it == work.end()) break;
    int t = it->first;
    long long c = it->second;
    work.erase(it);
    int base = t > 0 ? t - p : t + p;
    for (int j = -(p - 1); j <= p - 1; ++j) work[base + j] += c * sign_at(j);
  }
  LaurentClass out = laurent_zero(p);
  for (const auto& [e, c] : work)
    if (c) out.coeffs[e + p - 1] = c;
  return out;
}

}  // namespace

LaurentClass laurent_monomial(int p, int exponent, long long c) {
  return reduce_map(p, {{exponent, c}});
}

LaurentClass laurent_add(const LaurentClass& a, const LaurentClass& b) {
  if (a.p != b.p) throw std::invalid_argument("laurent: p mismatch");
  LaurentClass out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

LaurentClass laurent_shift(const LaurentClass& a, int exponent) {
  std::map<int, long long> work;
  int p = a.p;
  for (int i = 0; i < int(a.coeffs.size()); ++i)
    if (a.coeffs[i]) work[i - (p - 1) + exponent] += a.coeffs[i];
  return reduce_map(p, std::move(work));
}

LaurentClass laurent_jclass(int p, int m) {
  LaurentClass out = laurent_zero(p);
  for (int e = m - 1; e >= -(m - 1); e -= 2) out.coeffs[e + p - 1] = 1;
  return out;
}

JordanType gaussian_ext(int n, int r, int p) {
  if (r < 1 || r >= p) throw std::invalid_argument("gaussian_ext: requires 1 <= r < p");
  if (n < 1 || n > p) throw std::invalid_argument("gaussian_ext: requires 1 <= n <= p");
  if (r > n) return JordanType{p, {}};

  // g_{n,r} via  g_{n,r} = q^{n-r} g_{n-1,r-1} + q^{-r} g_{n-1,r}
  std::map<std::pair<int, int>, LaurentClass> memo;
  std::function<LaurentClass(int, int)> g = [&](int nn, int rr) -> LaurentClass {
    if (rr == 0) return laurent_monomial(p, 0);
    if (rr > nn) return laurent_zero(p);
    auto key = std::make_pair(nn, rr);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LaurentClass val = laurent_add(laurent_shift(g(nn - 1, rr - 1), nn - rr),
                                   laurent_shift(g(nn - 1, rr), -rr));
    return memo.emplace(key, val).first->second;
  };
  LaurentClass cls = g(n, r);

  // Triangular decomposition over the J-classes, top exponent first.
  std::vector<long long> mult(p + 1, 0);
  for (int m = p; m >= 1; --m) {
    long long c = cls.coeff(m - 1);
    mult[m] = c;
    if (c) {
      LaurentClass jc = laurent_jclass(p, m);
      for (size_t i = 0; i < cls.coeffs.size(); ++i) cls.coeffs[i] -= c * jc.coeffs[i];
    }
  }
  for (long long c : cls.coeffs)
    if (c) throw std::logic_error("gaussian_ext: class not in the J-span");
  for (int m = 1; m <= p; ++m)
    if (mult[m] < 0) throw std::logic_error("gaussian_ext: negative multiplicity");

  // The free multiplicity is fixed by the total dimension C(n, r); the
  // triangular solve must agree.
  long long dim = binom(n, r);
  long long stable_dim = 0;
  for (int m = 1; m < p; ++m) stable_dim += m * mult[m];
  if ((dim - stable_dim) % p != 0 || (dim - stable_dim) / p != mult[p])
    throw std::logic_error("gaussian_ext: dimension mismatch with J_p multiplicity");

  Partition blocks;
  for (int m = p; m >= 1; --m)
    for (long long t = 0; t < mult[m]; ++t) blocks.push_back(m);
  return JordanType{p, blocks};
}

JordanType jt_stable(const JordanType& a) {
  Partition out;
  for (int b : a.blocks)
    if (b != a.p) out.push_back(b);
  return JordanType{a.p, out};
}

JordanType jt_complementary(const JordanType& a) {
  Partition out;
  for (int b : a.blocks)
    if (b != a.p) out.push_back(a.p - b);
  std::sort(out.rbegin(), out.rend());
  return JordanType{a.p, out};
}

}  // namespace rv
