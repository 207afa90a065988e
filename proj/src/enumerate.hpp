#pragma once

#include <cstddef>
#include <vector>

namespace equilib::detail {

// Visits the non-empty index subsets of {0..n-1} with at most max_size
// members, ordered by size and then lexicographically. The visitor returns
// false to stop; the function returns false if it was stopped.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t max_size, Visit&& visit) {
  std::vector<std::size_t> idx;
  for (std::size_t size = 1; size <= max_size && size <= n; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return true;
}

// Visits cycles of distinct indices with lengths 1..max_len. Each cycle is
// reported once, rotated so that its smallest index comes first; order is by
// length and then lexicographic.
template <typename Visit>
bool for_each_cycle(std::size_t n, std::size_t max_len, Visit&& visit) {
  std::vector<std::size_t> cyc;
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t len) -> bool {
    if (cyc.size() == len) return visit(static_cast<const std::vector<std::size_t>&>(cyc));
    for (std::size_t j = cyc.front() + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cyc.push_back(j);
      const bool go_on = self(self, len);
      cyc.pop_back();
      used[j] = false;
      if (!go_on) return false;
    }
    return true;
  };
  for (std::size_t len = 1; len <= max_len && len <= n; ++len) {
    for (std::size_t first = 0; first < n; ++first) {
      cyc.assign(1, first);
      used[first] = true;
      const bool go_on = extend(extend, len);
      used[first] = false;
      if (!go_on) return false;
    }
  }
  return true;
}

}  // namespace equilib::detail
