#include "lzscan/tour_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace lzscan {

TourTree::TourTree(std::uint64_t seed) : rng_(static_cast<std::mt19937::result_type>(seed)) {}

TourTree::Token TourTree::make(std::int64_t key, OrderList::Elem e) {
  Token t = static_cast<Token>(key_.size());
  left_.push_back(kNone);
  right_.push_back(kNone);
  parent_.push_back(kNone);
  prio_.push_back(static_cast<std::uint32_t>(rng_()));
  key_.push_back(key);
  min_.push_back(key);
  elem_.push_back(e);
  return t;
}

void TourTree::pull(Token x) { min_[x] = std::min({key_[x], agg(left_[x]), agg(right_[x])}); }

void TourTree::fix_path(Token x) {
  for (; x != kNone; x = parent_[x]) pull(x);
}

void TourTree::rotate_up(Token x) {
  Token p = parent_[x], g = parent_[p];
  if (left_[p] == x) {
    left_[p] = right_[x];
    if (right_[x] != kNone) parent_[right_[x]] = p;
    right_[x] = p;
  } else {
    right_[p] = left_[x];
    if (left_[x] != kNone) parent_[left_[x]] = p;
    left_[x] = p;
  }
  parent_[p] = x;
  parent_[x] = g;
  if (g == kNone) root_ = x;
  else if (left_[g] == p) left_[g] = x;
  else right_[g] = x;
  pull(p);
  pull(x);
}

TourTree::Token TourTree::push_front(std::int64_t key) {
  Token t = make(key, order_.push_front());
  if (root_ == kNone) {
    root_ = t;
    return t;
  }
  Token y = root_;
  while (left_[y] != kNone) y = left_[y];
  left_[y] = t;
  parent_[t] = y;
  fix_path(y);
  while (parent_[t] != kNone && prio_[t] > prio_[parent_[t]]) rotate_up(t);
  fix_path(t);
  return t;
}

TourTree::Token TourTree::insert_after(Token x, std::int64_t key) {
  Token t = make(key, order_.insert_after(elem_[x]));
  if (right_[x] == kNone) {
    right_[x] = t;
    parent_[t] = x;
  } else {
    Token y = right_[x];
    while (left_[y] != kNone) y = left_[y];
    left_[y] = t;
    parent_[t] = y;
  }
  fix_path(parent_[t]);
  while (parent_[t] != kNone && prio_[t] > prio_[parent_[t]]) rotate_up(t);
  fix_path(t);
  return t;
}

TourTree::Token TourTree::insert_before(Token x, std::int64_t key) {
  Token t = make(key, order_.insert_before(elem_[x]));
  if (left_[x] == kNone) {
    left_[x] = t;
    parent_[t] = x;
  } else {
    Token y = left_[x];
    while (right_[y] != kNone) y = right_[y];
    right_[y] = t;
    parent_[t] = y;
  }
  fix_path(parent_[t]);
  while (parent_[t] != kNone && prio_[t] > prio_[parent_[t]]) rotate_up(t);
  fix_path(t);
  return t;
}

void TourTree::set_key(Token t, std::int64_t key) {
  key_[t] = key;
  fix_path(t);
}

TourTree::Token TourTree::rightmost_below(Token x, std::int64_t w) const {
  for (;;) {
    if (right_[x] != kNone && min_[right_[x]] < w) x = right_[x];
    else if (key_[x] < w) return x;
    else x = left_[x];
  }
}

TourTree::Token TourTree::last_below(Token t, std::int64_t w) const {
  if (key_[t] < w) return t;
  if (left_[t] != kNone && min_[left_[t]] < w) return rightmost_below(left_[t], w);
  for (Token cur = t; parent_[cur] != kNone; cur = parent_[cur]) {
    Token p = parent_[cur];
    if (right_[p] != cur) continue;
    if (key_[p] < w) return p;
    if (left_[p] != kNone && min_[left_[p]] < w) return rightmost_below(left_[p], w);
  }
  return kNone;
}

std::int64_t TourTree::range_min(Token a, Token b) const {
  if (a == b) return key_[a];
  auto depth = [&](Token x) {
    unsigned d = 0;
    for (; parent_[x] != kNone; x = parent_[x]) ++d;
    return d;
  };
  Token x = a, y = b;
  unsigned dx = depth(x), dy = depth(y);
  while (dx > dy) x = parent_[x], --dx;
  while (dy > dx) y = parent_[y], --dy;
  while (x != y) x = parent_[x], y = parent_[y];
  const Token lca = x;

  std::int64_t m = key_[lca];
  if (a != lca) {
    m = std::min({m, key_[a], agg(right_[a])});
    for (Token cur = a; parent_[cur] != lca; cur = parent_[cur]) {
      Token p = parent_[cur];
      if (left_[p] == cur) m = std::min({m, key_[p], agg(right_[p])});
    }
  }
  if (b != lca) {
    m = std::min({m, key_[b], agg(left_[b])});
    for (Token cur = b; parent_[cur] != lca; cur = parent_[cur]) {
      Token p = parent_[cur];
      if (right_[p] == cur) m = std::min({m, key_[p], agg(left_[p])});
    }
  }
  return m;
}

std::vector<TourTree::Token> TourTree::in_order() const {
  std::vector<Token> out;
  for (OrderList::Elem e = order_.next(order_.head()); e != OrderList::kNone; e = order_.next(e)) out.push_back(e);
  // Order-list elements are created in lockstep with tokens, offset by the head.
  for (Token& t : out) t -= 1;
  return out;
}

std::size_t TourTree::memory_bytes() const {
  return (left_.capacity() + right_.capacity() + parent_.capacity() + prio_.capacity() + elem_.capacity()) * 4 +
         (key_.capacity() + min_.capacity()) * 8 + order_.memory_bytes();
}

}  // namespace lzscan
