#include "lr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rv {

namespace {

int part_at(const Partition& lam, size_t i) {
  return i < lam.size() ? lam[i] : 0;
}

// Both defining conditions for one step: the step adds at most one box
// per row, and (when prev_inc is given) the suffix sums of increments
// weakly decrease from one step to the next.
bool step_ok(const Partition& prev, const Partition& next,
             const std::vector<int>* prev_inc, std::vector<int>* inc_out) {
  size_t len = std::max(prev.size(), next.size());
  std::vector<int> inc(len);
  for (size_t i = 0; i < len; ++i) {
    inc[i] = part_at(next, i) - part_at(prev, i);
    if (inc[i] < 0 || inc[i] > 1) return false;
  }
  if (prev_inc) {
    int suf_new = 0, suf_old = 0;
    size_t jlen = std::max(len, prev_inc->size());
    for (size_t j = jlen; j-- > 0;) {
      suf_new += j < inc.size() ? inc[j] : 0;
      suf_old += j < prev_inc->size() ? (*prev_inc)[j] : 0;
      if (suf_new > suf_old) return false;
    }
  }
  if (inc_out) *inc_out = std::move(inc);
  return true;
}

}  // namespace

bool is_lr_sequence(const std::vector<Partition>& stages) {
  if (stages.empty()) return false;
  std::vector<int> prev_inc, inc;
  for (size_t h = 1; h < stages.size(); ++h) {
    if (!is_valid_partition(stages[h])) return false;
    if (!step_ok(stages[h - 1], stages[h], h >= 2 ? &prev_inc : nullptr, &inc))
      return false;
    prev_inc = inc;
  }
  return is_valid_partition(stages[0]);
}

std::tuple<Partition, Partition, Partition> lr_type(const LRSequence& A) {
  if (!is_lr_sequence(A.stages)) throw std::invalid_argument("not an LR sequence");
  Partition diffs;
  for (size_t h = 1; h < A.stages.size(); ++h)
    diffs.push_back(weight(A.stages[h]) - weight(A.stages[h - 1]));
  while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
  if (!is_valid_partition(diffs))
    throw std::invalid_argument("lr_type: stage size differences not weakly decreasing");
  return {A.stages.front(), conjugate(diffs), A.stages.back()};
}

SkewTableau companion_tableau(const LRSequence& A) {
  if (!is_lr_sequence(A.stages)) throw std::invalid_argument("not an LR sequence");
  std::vector<Partition> shapes;
  shapes.reserve(A.stages.size());
  for (const auto& s : A.stages) shapes.push_back(conjugate(s));
  const Partition& outer = shapes.back();
  SkewTableau T;
  T.rows.resize(outer.size());
  for (size_t i = 0; i < outer.size(); ++i) {
    T.rows[i].resize(outer[i]);
    for (int j = 0; j < outer[i]; ++j) {
      int h = 0;
      while (j >= part_at(shapes[h], i)) ++h;
      T.rows[i][j] = h;
    }
  }
  return T;
}

bool check_tableau_conditions(const SkewTableau& T) {
  int ncols = 0;
  for (const auto& row : T.rows) ncols = std::max(ncols, int(row.size()));
  int maxval = 0;
  for (const auto& row : T.rows)
    for (int v : row) maxval = std::max(maxval, v);

  // (i) down each column: zeros first, then strictly increasing positives
  for (int c = 0; c < ncols; ++c) {
    int last = -1;
    bool seen_positive = false;
    for (const auto& row : T.rows) {
      if (c >= int(row.size())) continue;
      int v = row[c];
      if (v == 0) {
        if (seen_positive) return false;
      } else {
        if (v <= last) return false;
        seen_positive = true;
        last = v;
      }
    }
  }
  // (ii) in columns >= a, #h >= #(h+1)
  for (int a = 0; a < ncols; ++a) {
    std::vector<int> count(maxval + 2, 0);
    for (const auto& row : T.rows)
      for (int c = a; c < int(row.size()); ++c) ++count[row[c]];
    for (int h = 1; h < maxval; ++h)
      if (count[h] < count[h + 1]) return false;
  }
  return true;
}

std::vector<int> lattice_word(const SkewTableau& T) {
  std::vector<int> w;
  for (const auto& row : T.rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it)
      if (*it > 0) w.push_back(*it);
  return w;
}

namespace {

// All next stages reachable from `prev` in one step: add `boxes` boxes,
// at most one per row, staying inside mu.
void extend_stages(const Partition& prev, const Partition& mu, int boxes,
                   const std::vector<int>* prev_inc,
                   const std::function<void(const Partition&, const std::vector<int>&)>& emit) {
  size_t nrows = mu.size();
  std::vector<int> inc(nrows, 0);
  Partition next(nrows, 0);
  for (size_t i = 0; i < nrows; ++i) next[i] = part_at(prev, i);

  std::function<void(size_t, int)> rec = [&](size_t row, int rest) {
    if (row == nrows) {
      if (rest != 0) return;
      Partition trimmed = next;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      if (!step_ok(prev, trimmed, prev_inc, nullptr)) return;
      std::vector<int> inc_trim(inc.begin(), inc.end());
      emit(trimmed, inc_trim);
      return;
    }
    // remaining rows can absorb at most one box each
    if (rest > int(nrows - row)) return;
    int base = part_at(prev, row);
    // try adding a box first, then not
    if (rest > 0 && base + 1 <= mu[row] &&
        (row == 0 || next[row - 1] >= base + 1)) {
      next[row] = base + 1;
      inc[row] = 1;
      rec(row + 1, rest - 1);
      next[row] = base;
      inc[row] = 0;
    }
    if (row == 0 || next[row - 1] >= base) rec(row + 1, rest);
  };
  rec(0, boxes);
}

bool lr_dfs(const Partition& lam, const Partition& mu,
            const Partition& col_weights, size_t h, const Partition& cur,
            const std::vector<int>* prev_inc, std::vector<Partition>& stack,
            std::vector<LRSequence>* out, bool* found) {
  if (h == col_weights.size()) {
    if (cur == mu) {
      if (out) {
        LRSequence seq;
        seq.stages = stack;
        out->push_back(std::move(seq));
      }
      *found = true;
      return !out;  // stop early in existence mode
    }
    return false;
  }
  bool stop = false;
  extend_stages(cur, mu, col_weights[h], prev_inc,
                [&](const Partition& next, const std::vector<int>& inc) {
                  if (stop) return;
                  stack.push_back(next);
                  stop = lr_dfs(lam, mu, col_weights, h + 1, next, &inc, stack, out, found);
                  stack.pop_back();
                });
  return stop;
}

void run_lr_search(const Partition& lam, const Partition& beta, const Partition& mu,
                   std::vector<LRSequence>* out, bool* found) {
  *found = false;
  if (weight(lam) + weight(beta) != weight(mu))
    throw std::invalid_argument("lr search: |lam| + |beta| != |mu|");
  for (size_t i = 0; i < lam.size(); ++i)
    if (lam[i] > part_at(mu, i)) return;  // lam not inside mu
  Partition col_weights = conjugate(beta);
  if (col_weights.empty()) {
    if (lam == mu) {
      *found = true;
      if (out) out->push_back(LRSequence{{lam}});
    }
    return;
  }
  std::vector<Partition> stack{lam};
  lr_dfs(lam, mu, col_weights, 0, lam, nullptr, stack, out, found);
}

}  // namespace

std::vector<LRSequence> enumerate_lr_sequences(const Partition& lam,
                                               const Partition& beta,
                                               const Partition& mu) {
  std::vector<LRSequence> out;
  bool found;
  run_lr_search(lam, beta, mu, &out, &found);
  return out;
}

long long lr_coefficient_tableau_count(const Partition& lam,
                                       const Partition& beta,
                                       const Partition& mu) {
  // Count LR skew tableaux of shape conjugate(mu)\conjugate(lam) and
  // weight conjugate(beta) directly by backtracking in reading order.
  Partition outer = conjugate(mu);
  Partition inner = conjugate(lam);
  Partition target = conjugate(beta);
  int nvals = int(target.size());
  size_t nrows = outer.size();
  for (size_t i = 0; i < inner.size(); ++i)
    if (i >= nrows || inner[i] > outer[i]) return 0;

  std::vector<std::vector<int>> fill(nrows);
  for (size_t i = 0; i < nrows; ++i) fill[i].assign(outer[i], 0);
  std::vector<int> used(nvals + 2, 0);
  long long count = 0;

  // cells in reading order: rows top to bottom, right to left in each row
  std::vector<std::pair<int, int>> cells;
  for (size_t i = 0; i < nrows; ++i)
    for (int j = outer[i] - 1; j >= part_at(inner, i); --j)
      cells.push_back({int(i), j});

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      for (int v = 1; v <= nvals; ++v)
        if (used[v] != target[v - 1]) return;
      ++count;
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 1, hi = nvals;
    // row weakly increasing: cell <= right neighbour (filled earlier)
    if (j + 1 < int(fill[i].size())) hi = std::min(hi, fill[i][j + 1]);
    // column strictly increasing: cell > the one above
    if (i > 0 && j < int(fill[i - 1].size()) && j >= part_at(inner, i - 1))
      lo = std::max(lo, fill[i - 1][j] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= target[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice prefix
      fill[i][j] = v;
      ++used[v];
      rec(idx + 1);
      --used[v];
      fill[i][j] = 0;
    }
  };
  rec(0);
  return count;
}

std::set<Partition> source_partitions(const Partition& mu, const Partition& beta) {
  if (weight(beta) > weight(mu))
    throw std::invalid_argument("source_partitions: |beta| > |mu|");
  int n = weight(mu) - weight(beta);
  std::set<Partition> out;
  int cap = mu.empty() ? 1 : mu[0];
  for (const auto& lam : enumerate_partitions(n, std::max(cap, 1))) {
    if (lam.size() > mu.size()) continue;
    bool found;
    run_lr_search(lam, beta, mu, nullptr, &found);
    if (found) out.insert(lam);
  }
  return out;
}

namespace {

// All partitions obtained from lam by adding a single box.
std::vector<Partition> one_box_extensions(const Partition& lam) {
  std::vector<Partition> out;
  for (size_t i = 0; i < lam.size(); ++i)
    if (i == 0 || lam[i - 1] > lam[i]) {
      Partition next = lam;
      ++next[i];
      out.push_back(next);
    }
  Partition row = lam;
  row.push_back(1);
  out.push_back(row);
  return out;
}

}  // namespace

std::optional<std::set<Partition>> predicted_source_set(const Partition& mu,
                                                        const Partition& beta,
                                                        int p) {
  if (mu.empty()) return std::nullopt;
  auto all_parts_p = [&](size_t upto) {
    for (size_t i = 0; i < upto; ++i)
      if (mu[i] != p) return false;
    return true;
  };

  // case 1: mu = (p^b, 1), beta = p - beta' for beta' of weight m != (m)
  if (mu.back() == 1 && mu.size() >= 2 && all_parts_p(mu.size() - 1)) {
    int b = int(mu.size()) - 1;
    bool ok = !beta.empty();
    for (int part : beta)
      if (part < 1 || part > p - 1) ok = false;
    if (ok) {
      int m = p * int(beta.size()) - weight(beta);
      Partition beta_prime;
      for (auto it = beta.rbegin(); it != beta.rend(); ++it)
        beta_prime.push_back(p - *it);
      if (m >= 2 && m <= p - 1 && beta_prime != Partition{m}) {
        std::set<Partition> out;
        int h = b - int(beta_prime.size());
        if (h >= 0)
          for (const auto& delta : one_box_extensions(beta_prime))
            out.insert(union_sort(Partition(h, p), delta));
        return out;
      }
    }
    return std::nullopt;
  }

  // case 2: mu = (p^b, p-1), beta of weight m != (m)
  if (mu.back() == p - 1 && all_parts_p(mu.size() - 1)) {
    int b = int(mu.size()) - 1;
    int m = weight(beta);
    if (m >= 2 && m <= p - 1 && beta != Partition{m} && !beta.empty()) {
      std::set<Partition> out;
      for (const auto& delta : one_box_extensions(beta)) {
        int h = b - int(delta.size()) + 1;
        if (h < 0) continue;
        out.insert(union_sort(Partition(h, p), complement(p, delta)));
      }
      return out;
    }
    return std::nullopt;
  }

  return std::nullopt;
}

}  // namespace rv
