#include "lzscan/suffix_sort.hpp"

#include <algorithm>
#include <numeric>

namespace lzscan {

aux_vector<Pos> suffix_array(std::span<const Code> s) {
  const std::size_t n = s.size();
  aux_vector<Pos> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;

  Code hi = *std::max_element(s.begin(), s.end());
  aux_vector<Pos> count(std::max<std::size_t>(n, hi + 1u) + 1, 0);
  for (Code c : s) ++count[c + 1u];
  for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
  for (std::size_t i = 0; i < n; ++i) sa[count[s[i]]++] = static_cast<Pos>(i);
  rank[sa[0]] = 0;
  for (std::size_t k = 1; k < n; ++k) rank[sa[k]] = rank[sa[k - 1]] + (s[sa[k]] != s[sa[k - 1]]);
  if (rank[sa[n - 1]] == n - 1) return sa;

  for (std::size_t h = 1;; h <<= 1) {
    // Order by second key: suffixes whose second half is empty come first.
    std::size_t m = 0;
    for (std::size_t i = n - std::min(h, n); i < n; ++i) tmp[m++] = static_cast<Pos>(i);
    for (std::size_t k = 0; k < n; ++k)
      if (sa[k] >= h) tmp[m++] = static_cast<Pos>(sa[k] - h);

    std::size_t classes = rank[sa[n - 1]] + 1;
    std::fill(count.begin(), count.begin() + classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i] + 1];
    for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
    for (std::size_t k = 0; k < n; ++k) sa[count[rank[tmp[k]]]++] = tmp[k];

    auto second = [&](Pos i) -> std::int64_t { return i + h < n ? rank[i + h] : -1; };
    tmp[sa[0]] = 0;
    for (std::size_t k = 1; k < n; ++k) {
      Pos a = sa[k - 1], b = sa[k];
      bool same = rank[a] == rank[b] && second(a) == second(b);
      tmp[b] = tmp[a] + (same ? 0 : 1);
    }
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

aux_vector<Pos> lcp_array(std::span<const Code> s, std::span<const Pos> sa) {
  const std::size_t n = s.size();
  aux_vector<Pos> rank(n), lcp(n, 0);
  for (std::size_t k = 0; k < n; ++k) rank[sa[k]] = static_cast<Pos>(k);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = static_cast<Pos>(h);
    if (h > 0) --h;
  }
  return lcp;
}

aux_vector<Pos> longest_previous_factor(std::span<const Code> s) {
  const std::size_t n = s.size();
  aux_vector<Pos> sa = suffix_array(s);
  aux_vector<Pos> lcp = lcp_array(s, sa);
  aux_vector<Pos> lpf(n, 0);

  // Nearest rank on each side whose suffix starts earlier; the stack keeps the
  // lcp between consecutive entries so no range-minimum structure is needed.
  struct Entry {
    Pos rank;
    Pos link;
  };
  aux_vector<Entry> stack;
  for (std::size_t k = 0; k < n; ++k) {
    Pos m = k > 0 ? lcp[k] : 0;
    while (!stack.empty() && sa[stack.back().rank] > sa[k]) {
      stack.pop_back();
      if (!stack.empty()) m = std::min(m, stack.back().link);
    }
    if (!stack.empty()) {
      lpf[sa[k]] = m;
      stack.back().link = m;
    }
    stack.push_back({static_cast<Pos>(k), 0});
  }
  stack.clear();
  for (std::size_t k = n; k-- > 0;) {
    Pos m = k + 1 < n ? lcp[k + 1] : 0;
    while (!stack.empty() && sa[stack.back().rank] > sa[k]) {
      stack.pop_back();
      if (!stack.empty()) m = std::min(m, stack.back().link);
    }
    if (!stack.empty()) {
      lpf[sa[k]] = std::max(lpf[sa[k]], m);
      stack.back().link = m;
    }
    stack.push_back({static_cast<Pos>(k), 0});
  }
  return lpf;
}

}  // namespace lzscan
