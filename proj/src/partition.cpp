#include "partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rv {

bool is_valid_partition(const Partition& lam) {
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] < 1) return false;
    if (i + 1 < lam.size() && lam[i] < lam[i + 1]) return false;
  }
  return true;
}

int weight(const Partition& lam) {
  return std::accumulate(lam.begin(), lam.end(), 0);
}

Partition conjugate(const Partition& lam) {
  Partition out;
  if (lam.empty()) return out;
  out.reserve(lam[0]);
  for (int i = 1; i <= lam[0]; ++i) {
    int count = 0;
    for (int part : lam)
      if (part >= i) ++count;
    out.push_back(count);
  }
  return out;
}

bool dominates(const Partition& lam, const Partition& mu) {
  if (weight(lam) != weight(mu))
    throw std::invalid_argument("dominates: incomparable sizes");
  size_t len = std::max(lam.size(), mu.size());
  int sum_l = 0, sum_m = 0;
  for (size_t i = 0; i < len; ++i) {
    sum_l += i < lam.size() ? lam[i] : 0;
    sum_m += i < mu.size() ? mu[i] : 0;
    if (sum_l < sum_m) return false;
  }
  return true;
}

Partition complement(int m, const Partition& lam) {
  if (!lam.empty() && m < lam[0])
    throw std::invalid_argument("complement: m smaller than largest part");
  Partition out;
  for (auto it = lam.rbegin(); it != lam.rend(); ++it)
    if (m - *it > 0) out.push_back(m - *it);
  return out;
}

Partition union_sort(const Partition& lam, const Partition& mu) {
  Partition out = lam;
  out.insert(out.end(), mu.begin(), mu.end());
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

std::vector<Partition> enumerate_partitions(int n, int max_part) {
  if (n < 0 || max_part < 0 || (n > 0 && max_part == 0))
    throw std::invalid_argument("enumerate_partitions: bad arguments");
  std::vector<Partition> out;
  Partition cur;
  // Descending first parts give lexicographic-descending output order.
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::string to_string(const Partition& lam) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) os << ',';
    os << lam[i];
  }
  os << ')';
  return os.str();
}

}  // namespace rv
