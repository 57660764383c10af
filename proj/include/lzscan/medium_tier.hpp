#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "lzscan/bwt_index.hpp"
#include "lzscan/aux_alloc.hpp"
#include "lzscan/text.hpp"
#include "lzscan/tree_index.hpp"

namespace lzscan {

// x[0] = sentinel, x[1..d] = s[p..p+d-1] with d = min(1 + b + tau^2, n - p).
struct WindowParams {
  Pos p = 0, b = 0, tau = 0, tau2 = 0, d = 0;
  aux_vector<Code> x;

  static WindowParams make(const PackedText& text, Pos p, Pos b, Pos tau);
};

// Compact trie of the rows of a window index, each row truncated or padded
// with the sentinel to exactly tau^2 symbols. Equal rows share a leaf.
// Vertices are numbered in heavy-first preorder, so a subtree is an id
// interval and every heavy path is a run of consecutive ids.
//
// Prefix links: for each vertex v and symbol c occurring in bwt over v's
// row interval, some row k of that interval with bwt[k] = c, stored as the
// leaf of row psi[k]. The string c + label(v) is a prefix of that leaf.
class TrieQ {
 public:
  static TrieQ build(Pos d, RlcpArray rlcp, Pos tau2);

  TrieQ() = default;
  TrieQ(TrieQ&&) = default;
  TrieQ& operator=(TrieQ&&) = default;
  TrieQ(const TrieQ&) = delete;
  TrieQ& operator=(const TrieQ&) = delete;

  Vertex root() const { return 0; }
  std::size_t size() const { return node_.size(); }
  Pos tau2() const { return tau2_; }
  Vertex parent(Vertex v) const { return node_[v].parent; }
  Pos weight(Vertex v) const { return node_[v].weight; }
  bool is_leaf(Vertex v) const { return end_[v] == v + 1; }
  // Row interval of v. Dropped by release_ranks.
  Pos first_rank(Vertex v) const { return first_[v]; }
  Pos last_rank(Vertex v) const { return last_[v]; }
  Vertex leaf_by_rank(Pos k) const { return leaf_by_rank_[k]; }
  std::vector<Vertex> children(Vertex v) const;

  // Highest ancestor u of v (v included) with weight(u) >= w, or kNoVertex.
  Vertex weighted_ancestor(Vertex v, Pos w) const {
    if (node_[v].weight < w) return kNoVertex;
    for (;;) {
      Vertex h = node_[v].head;
      if (node_[h].weight >= w) {
        Vertex p = node_[h].parent;
        if (p == kNoVertex || node_[p].weight < w) return h;
        v = p;
        continue;
      }
      auto it = std::partition_point(node_.begin() + h + 1, node_.begin() + v, [w](const Node& x) { return x.weight < w; });
      return static_cast<Vertex>(it - node_.begin());
    }
  }
  Pos preorder(Vertex v) const { return v; }
  Pos subtree_size(Vertex v) const { return end_[v] - v; }

  // Needs the row intervals, so call before release_ranks.
  void attach_links(const BwtPsi& idx, std::uint32_t sigma);
  Vertex link(Vertex v, Code c) const {
    const Link* lo = links_.data() + node_[v].link;
    const Link* hi = links_.data() + (v + 1 < node_.size() ? node_[v + 1].link : links_.size());
    if (hi - lo > 8) {
      lo = std::lower_bound(lo, hi, c, [](const Link& a, Code b) { return a.c < b; });
      return lo != hi && lo->c == c ? lo->leaf : kNoVertex;
    }
    for (; lo != hi; ++lo)
      if (lo->c == c) return lo->leaf;
    return kNoVertex;
  }
  std::size_t link_count() const { return links_.size(); }
  std::vector<Code> link_symbols(Vertex v) const;  // sorted; for inspection

  void release_ranks();
  std::size_t memory_bytes() const;

 private:
  struct Node {
    Vertex parent;
    Pos weight;
    Vertex head;  // top of the heavy path through v
    Pos link;     // first prefix link of v
  };
  struct Link {
    Code c;
    Vertex leaf;
  };
  aux_vector<Node> node_;
  aux_vector<Vertex> end_;  // one past the last id in the subtree of v
  aux_vector<Link> links_;
  aux_vector<Pos> first_, last_;
  aux_vector<Vertex> leaf_by_rank_;
  Pos tau2_ = 0;
};

struct MatchState {
  Vertex v = 0;  // highest vertex whose label starts with the matched string
  Pos len = 0;
};

// One step of the backward scan: from the match for some string X, the match
// for the longest prefix of cX that labels a path in q.
MatchState extend_match(const TrieQ& q, MatchState st, Code c);

struct BlockFactor {
  enum class Origin : std::uint8_t { Literal, Short, Medium, Long };
  Pos start = 0;
  Pos length = 0;
  Pos source = kNoPos;
  Origin origin = Origin::Medium;
};

struct BlockParse {
  aux_vector<BlockFactor> factors;
  aux_vector<bool> bits;  // bits[k] set when a factor starts at p + k, k in [0, b]
};

struct LongMatch {
  Pos length = 0;
  Pos source = kNoPos;
};
// Called with a factor start whose first tau^2 symbols occur earlier.
using LongTierFn = std::function<LongMatch(Pos start)>;

class MediumWindow {
 public:
  MediumWindow(const PackedText& text, Pos p, Pos b, Pos tau);

  const WindowParams& params() const { return w_; }
  const TrieQ& trie() const { return q_; }

  // Factor lengths for every factor starting in [p, p+b]. Sources are filled
  // only for factors handed to the long tier.
  BlockParse fill_lz(const LongTierFn& long_tier) const;

  std::size_t memory_bytes() const;

 private:
  const PackedText* text_;
  WindowParams w_;
  TrieQ q_;
};

// Fills sources of the factors whose length lies in [min_len, max_len) by a
// multi-pattern scan of s[0..p+d-1].
void report_occurrences(const PackedText& text, const WindowParams& w, aux_vector<BlockFactor>& factors,
                        Pos min_len, Pos max_len);

}  // namespace lzscan
