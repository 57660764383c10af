#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/order_list.hpp"

namespace lzscan {

// A dynamic sequence of keyed tokens. Positions are kept both in an
// order-maintenance list and in a treap that aggregates the minimum key, so
// that "nearest token to the left with key < w" and range minima take
// O(log n) expected time.
class TourTree {
 public:
  using Token = std::uint32_t;
  static constexpr Token kNone = ~Token{0};

  explicit TourTree(std::uint64_t seed = 0x5eed);

  Token push_front(std::int64_t key);
  Token insert_after(Token t, std::int64_t key);
  Token insert_before(Token t, std::int64_t key);
  void set_key(Token t, std::int64_t key);

  std::int64_t key(Token t) const { return key_[t]; }
  bool precedes(Token a, Token b) const { return order_.precedes(elem_[a], elem_[b]); }
  OrderList::Elem elem(Token t) const { return elem_[t]; }
  const OrderList& order() const { return order_; }
  std::size_t size() const { return key_.size(); }

  // Last token at or before t (in sequence order) whose key is < w.
  Token last_below(Token t, std::int64_t w) const;
  // Minimum key over the tokens from a to b inclusive; a must not follow b.
  std::int64_t range_min(Token a, Token b) const;

  std::vector<Token> in_order() const;
  std::size_t memory_bytes() const;

 private:
  Token make(std::int64_t key, OrderList::Elem e);
  void rotate_up(Token x);
  void pull(Token x);
  void fix_path(Token x);
  std::int64_t agg(Token x) const { return x == kNone ? INT64_MAX : min_[x]; }
  Token rightmost_below(Token x, std::int64_t w) const;

  aux_vector<Token> left_, right_, parent_;
  aux_vector<std::uint32_t> prio_;
  aux_vector<std::int64_t> key_, min_;
  aux_vector<OrderList::Elem> elem_;
  Token root_ = kNone;
  OrderList order_;
  std::mt19937 rng_;
};

}  // namespace lzscan
