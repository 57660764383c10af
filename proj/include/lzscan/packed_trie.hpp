#pragma once

#include <cstdint>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/order_list.hpp"
#include "lzscan/text.hpp"
#include "lzscan/tree_index.hpp"

namespace lzscan {

// Compact trie over text strings of one fixed length L, each given by an
// anchor: s[a..a+L) when forward, s[a], s[a-1], ..., s[a-L+1] when reversed.
// Reads outside the text see the sentinel. Edges are compared a machine word
// at a time. With track_order the trie also keeps an Euler tour of its
// vertices in an order-maintenance list.
class PackedTrie {
 public:
  enum class Direction { Forward, Reverse };

  struct Search {
    Pos matched = 0;
    Vertex locus = 0;          // highest vertex with weight >= matched
    aux_vector<Vertex> path;  // root, ..., locus
  };

  PackedTrie(const PackedText& text, Pos length, Direction dir, bool track_order);

  Vertex root() const { return 0; }
  Pos length() const { return length_; }
  std::size_t size() const { return parent_.size(); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  Pos weight(Vertex v) const { return weight_[v]; }
  bool is_leaf(Vertex v) const { return weight_[v] == length_ && v != 0; }
  // Anchor of some string stored below v.
  std::int64_t anchor(Vertex v) const { return anchor_[v]; }
  bool empty() const { return children_[0].empty(); }

  Search search(std::int64_t anchor) const;
  // Inserts the string (if new) and returns its leaf.
  Vertex insert(std::int64_t anchor);
  Vertex insert(std::int64_t anchor, const Search& found);

  // Locus of the first len symbols of a searched string, len <= matched.
  Vertex locus_at(const Search& s, Pos len) const;

  OrderList::Elem first_token(Vertex v) const { return open_[v]; }
  OrderList::Elem last_token(Vertex v) const { return close_[v]; }
  const OrderList& order() const { return order_; }

  std::uint32_t& tag(Vertex v) { return tag_[v]; }
  std::uint32_t tag(Vertex v) const { return tag_[v]; }

  std::size_t memory_bytes() const;

 private:
  struct Child {
    Code c;
    Vertex v;
  };

  Code symbol(std::int64_t anchor, Pos k) const {
    return dir_ == Direction::Forward ? text_->at(anchor + k) : text_->at(anchor - static_cast<std::int64_t>(k));
  }
  std::size_t common(std::int64_t a, std::int64_t b, Pos from, Pos len) const;
  Vertex find_child(Vertex v, Code c) const;
  Vertex make(Vertex parent, Pos weight, std::int64_t anchor);
  void add_child(Vertex v, Code c, Vertex child);

  const PackedText* text_;
  Pos length_;
  Direction dir_;
  bool track_order_;
  aux_vector<Vertex> parent_;
  aux_vector<Pos> weight_;
  aux_vector<std::int64_t> anchor_;
  aux_vector<aux_vector<Child>> children_;
  aux_vector<OrderList::Elem> open_, close_;
  aux_vector<std::uint32_t> tag_;
  OrderList order_;
};

}  // namespace lzscan
