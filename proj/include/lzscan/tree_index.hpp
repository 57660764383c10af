#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/text.hpp"

namespace lzscan {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = ~Vertex{0};

// Heavy-path decomposition of a static rooted tree whose weights strictly
// increase away from the root. Answers weighted-ancestor queries and gives a
// preorder numbering with contiguous subtrees.
class WeightedAncestors {
 public:
  WeightedAncestors() = default;
  // parent[root] == kNoVertex; children of each vertex are visited in the
  // order given by the CSR arrays.
  WeightedAncestors(std::span<const Vertex> parent, std::span<const Pos> weight,
                    std::span<const Pos> child_offsets, std::span<const Vertex> children, Vertex root);

  // Highest ancestor u of v (v included) with weight(u) >= w, or kNoVertex
  // when weight(v) < w.
  Vertex query(Vertex v, Pos w) const;

  Pos preorder(Vertex v) const { return pos_[v]; }
  Vertex head(Vertex v) const { return head_[v]; }
  Pos subtree_size(Vertex v) const { return size_[v]; }
  std::size_t memory_bytes() const;

 private:
  std::span<const Vertex> parent_;
  std::span<const Pos> weight_;
  aux_vector<Vertex> head_;
  aux_vector<Pos> pos_;
  aux_vector<Pos> size_;
  aux_vector<Vertex> by_pos_;
};

// Bit set over preorder positions with a summary level per 64 words, so a
// subtree interval can be tested for any set bit quickly.
class MarkedDescendants {
 public:
  MarkedDescendants() = default;
  explicit MarkedDescendants(std::size_t n);

  void mark(std::size_t pos);
  bool is_marked(std::size_t pos) const { return (bits_[pos >> 6] >> (pos & 63)) & 1; }
  // Any marked position in [lo, lo + len).
  bool any_in(std::size_t lo, std::size_t len) const;
  std::size_t memory_bytes() const { return (bits_.capacity() + summary_.capacity()) * 8; }

 private:
  std::size_t next_set(std::size_t from, std::size_t limit) const;

  aux_vector<std::uint64_t> bits_;
  aux_vector<std::uint64_t> summary_;  // bit w set when bits_[w] != 0
  std::size_t n_ = 0;
};

}  // namespace lzscan
