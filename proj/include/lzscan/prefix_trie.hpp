#pragma once

#include <cstdint>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/text.hpp"
#include "lzscan/tour_tree.hpp"
#include "lzscan/tree_index.hpp"

namespace lzscan {

// Dynamic compact trie of reversed text prefixes s[i], s[i-1], ..., s[0].
// The sentinel at s[0] makes every stored string end in a distinct leaf.
// An Euler tour (open/close tokens for internal vertices, one token for each
// leaf) is kept in a TourTree whose token key is the weight of the parent
// vertex; weighted ancestors and leaf lcps become tour queries.
class ReversedPrefixTrie {
 public:
  explicit ReversedPrefixTrie(const PackedText& text);

  Vertex root() const { return 0; }
  std::size_t size() const { return parent_.size(); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  Pos weight(Vertex v) const { return weight_[v]; }
  bool is_leaf(Vertex v) const { return v != 0 && open_[v] == close_[v]; }
  // End position i of some prefix stored below v.
  Pos sample(Vertex v) const { return sample_[v]; }
  std::size_t leaves() const { return leaves_; }

  // Highest ancestor of v with weight >= w, or kNoVertex if weight(v) < w.
  Vertex weighted_ancestor(Vertex v, Pos w) const;
  // Length of the longest common prefix of two stored strings.
  Pos lcp(Vertex leaf_a, Vertex leaf_b) const;
  bool precedes(Vertex leaf_a, Vertex leaf_b) const { return tour_.precedes(open_[leaf_a], open_[leaf_b]); }

  // Inserts the reversed prefix ending at i, given some stored leaf that
  // shares its first h symbols and where h is the exact lcp with the closest
  // stored string. Pass kNoVertex when the trie is empty (h must be 0).
  Vertex insert(Pos i, Vertex witness, Pos h);

  OrderList::Elem first_token(Vertex v) const { return tour_.elem(open_[v]); }
  OrderList::Elem last_token(Vertex v) const { return tour_.elem(close_[v]); }
  const OrderList& order() const { return tour_.order(); }
  OrderList::Elem leaf_elem(Vertex leaf) const { return tour_.elem(open_[leaf]); }

  std::vector<Vertex> leaves_in_order() const;
  std::size_t memory_bytes() const;

 private:
  struct Child {
    Code c;
    Vertex v;
  };

  Code label_at(Vertex v, Pos k) const { return text_->at(static_cast<std::int64_t>(sample_[v]) - k); }
  Vertex make(Vertex parent, Pos weight, Pos sample);
  Vertex vertex_of(TourTree::Token t) const { return owner_[t]; }

  const PackedText* text_;
  aux_vector<Vertex> parent_;
  aux_vector<Pos> weight_, sample_;
  aux_vector<aux_vector<Child>> children_;
  aux_vector<TourTree::Token> open_, close_;
  aux_vector<Vertex> owner_;  // token -> vertex
  TourTree tour_;
  std::size_t leaves_ = 0;
};

}  // namespace lzscan
