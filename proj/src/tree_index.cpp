#include "lzscan/tree_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lzscan {

WeightedAncestors::WeightedAncestors(std::span<const Vertex> parent, std::span<const Pos> weight,
                                     std::span<const Pos> child_offsets, std::span<const Vertex> children,
                                     Vertex root)
    : parent_(parent), weight_(weight) {
  const std::size_t n = parent.size();
  size_.assign(n, 1);
  head_.assign(n, root);
  pos_.assign(n, 0);
  by_pos_.assign(n, root);

  // Postorder for sizes, then heavy-first preorder.
  aux_vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  for (std::size_t k = 0; k < order.size(); ++k) {
    Vertex v = order[k];
    for (Pos c = child_offsets[v]; c < child_offsets[v + 1]; ++c) order.push_back(children[c]);
  }
  if (order.size() != n) throw std::invalid_argument("tree is not connected");
  for (std::size_t k = n; k-- > 1;) size_[parent[order[k]]] += size_[order[k]];

  aux_vector<Vertex> stack{root};
  Pos next = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    pos_[v] = next;
    by_pos_[next++] = v;
    Vertex heavy = kNoVertex;
    for (Pos c = child_offsets[v]; c < child_offsets[v + 1]; ++c)
      if (heavy == kNoVertex || size_[children[c]] > size_[heavy]) heavy = children[c];
    // Push light children in reverse so they are numbered in order; heavy last
    // so it is numbered right after v.
    for (Pos c = child_offsets[v + 1]; c-- > child_offsets[v];) {
      Vertex u = children[c];
      if (u == heavy) continue;
      head_[u] = u;
      stack.push_back(u);
    }
    if (heavy != kNoVertex) {
      head_[heavy] = head_[v];
      stack.push_back(heavy);
    }
  }
}

Vertex WeightedAncestors::query(Vertex v, Pos w) const {
  if (weight_[v] < w) return kNoVertex;
  for (;;) {
    Vertex h = head_[v];
    if (weight_[h] >= w) {
      Vertex p = parent_[h];
      if (p == kNoVertex || weight_[p] < w) return h;
      v = p;
      continue;
    }
    // Weights increase along by_pos_[pos(h)..pos(v)]; find the first >= w.
    Pos lo = pos_[h] + 1, hi = pos_[v];
    while (lo < hi) {
      Pos mid = lo + (hi - lo) / 2;
      if (weight_[by_pos_[mid]] >= w) hi = mid;
      else lo = mid + 1;
    }
    return by_pos_[lo];
  }
}

std::size_t WeightedAncestors::memory_bytes() const {
  return (head_.capacity() + pos_.capacity() + size_.capacity() + by_pos_.capacity()) * 4;
}

MarkedDescendants::MarkedDescendants(std::size_t n) : n_(n) {
  bits_.assign((n + 63) / 64 + 1, 0);
  summary_.assign(bits_.size() / 64 + 1, 0);
}

void MarkedDescendants::mark(std::size_t pos) {
  bits_[pos >> 6] |= std::uint64_t{1} << (pos & 63);
  summary_[pos >> 12] |= std::uint64_t{1} << ((pos >> 6) & 63);
}

std::size_t MarkedDescendants::next_set(std::size_t from, std::size_t limit) const {
  std::size_t w = from >> 6;
  if (w >= bits_.size()) return SIZE_MAX;
  const std::size_t last_summary = std::min(summary_.size() - 1, (limit >> 12));
  std::uint64_t cur = bits_[w] & (~std::uint64_t{0} << (from & 63));
  if (cur) return (w << 6) + std::countr_zero(cur);
  ++w;
  std::size_t s = w >> 6;
  if (s > last_summary) return SIZE_MAX;
  std::uint64_t sm = summary_[s] & (~std::uint64_t{0} << (w & 63));
  while (sm == 0) {
    if (++s > last_summary) return SIZE_MAX;
    sm = summary_[s];
  }
  std::size_t word = (s << 6) + std::countr_zero(sm);
  return (word << 6) + std::countr_zero(bits_[word]);
}

bool MarkedDescendants::any_in(std::size_t lo, std::size_t len) const {
  if (len == 0) return false;
  std::size_t p = next_set(lo, lo + len - 1);
  return p != SIZE_MAX && p < lo + len;
}

}  // namespace lzscan
