#include "lzscan/packed_trie.hpp"

#include <algorithm>
#include <stdexcept>

namespace lzscan {

PackedTrie::PackedTrie(const PackedText& text, Pos length, Direction dir, bool track_order)
    : text_(&text), length_(length), dir_(dir), track_order_(track_order) {
  if (length == 0) throw std::invalid_argument("trie strings must be non-empty");
  make(kNoVertex, 0, 0);
  if (track_order_) {
    open_[0] = order_.push_front();
    close_[0] = order_.insert_after(open_[0]);
  }
}

Vertex PackedTrie::make(Vertex parent, Pos weight, std::int64_t anchor) {
  parent_.push_back(parent);
  weight_.push_back(weight);
  anchor_.push_back(anchor);
  children_.emplace_back();
  open_.push_back(OrderList::kNone);
  close_.push_back(OrderList::kNone);
  tag_.push_back(0);
  return static_cast<Vertex>(parent_.size() - 1);
}

std::size_t PackedTrie::common(std::int64_t a, std::int64_t b, Pos from, Pos len) const {
  if (dir_ == Direction::Forward) return text_->lcp_compare(a + from, b + from, len).length;
  return text_->lcp_compare_reverse(a - from, b - from, len).length;
}

Vertex PackedTrie::find_child(Vertex v, Code c) const {
  const auto& ch = children_[v];
  auto it = std::lower_bound(ch.begin(), ch.end(), c, [](const Child& x, Code y) { return x.c < y; });
  return it != ch.end() && it->c == c ? it->v : kNoVertex;
}

void PackedTrie::add_child(Vertex v, Code c, Vertex child) {
  auto& ch = children_[v];
  auto it = std::lower_bound(ch.begin(), ch.end(), c, [](const Child& x, Code y) { return x.c < y; });
  ch.insert(it, Child{c, child});
}

PackedTrie::Search PackedTrie::search(std::int64_t anchor) const {
  Search r;
  r.path.push_back(0);
  Vertex v = 0;
  for (;;) {
    Pos wv = weight_[v];
    if (wv == length_) {
      r.matched = length_;
      r.locus = v;
      return r;
    }
    Vertex u = find_child(v, symbol(anchor, wv));
    if (u == kNoVertex) {
      r.matched = wv;
      r.locus = v;
      return r;
    }
    r.path.push_back(u);
    Pos from = wv + 1, len = weight_[u] - from;
    std::size_t l = common(anchor, anchor_[u], from, len);
    if (l < len) {
      r.matched = from + static_cast<Pos>(l);
      r.locus = u;
      return r;
    }
    v = u;
  }
}

Vertex PackedTrie::insert(std::int64_t anchor) { return insert(anchor, search(anchor)); }

Vertex PackedTrie::insert(std::int64_t anchor, const Search& found) {
  if (found.matched == length_) return found.locus;
  if (empty()) anchor_[0] = anchor;
  const Pos m = found.matched;
  Vertex at = found.locus;
  if (weight_[at] != m) {
    Vertex u = at, p = parent_[u];
    Vertex mid = make(p, m, anchor_[u]);
    Code first = symbol(anchor_[u], weight_[p]);
    for (Child& c : children_[p])
      if (c.c == first) c.v = mid;
    add_child(mid, symbol(anchor_[u], m), u);
    parent_[u] = mid;
    if (track_order_) {
      open_[mid] = order_.insert_before(open_[u]);
      close_[mid] = order_.insert_after(close_[u]);
    }
    at = mid;
  }
  Vertex leaf = make(at, length_, anchor);
  Code c = symbol(anchor, m);
  add_child(at, c, leaf);
  if (track_order_) {
    const auto& ch = children_[at];
    auto it = std::find_if(ch.begin(), ch.end(), [&](const Child& x) { return x.v == leaf; });
    OrderList::Elem tok = it == ch.begin() ? order_.insert_after(open_[at]) : order_.insert_after(close_[(it - 1)->v]);
    open_[leaf] = close_[leaf] = tok;
  }
  return leaf;
}

Vertex PackedTrie::locus_at(const Search& s, Pos len) const {
  if (len > s.matched) throw std::out_of_range("locus beyond the matched length");
  auto it = std::partition_point(s.path.begin(), s.path.end(), [&](Vertex v) { return weight_[v] < len; });
  return *it;
}

std::size_t PackedTrie::memory_bytes() const {
  std::size_t b = (parent_.capacity() + weight_.capacity() + open_.capacity() + close_.capacity() + tag_.capacity()) * 4 +
                  anchor_.capacity() * 8 + children_.capacity() * sizeof(aux_vector<Child>);
  for (const auto& c : children_) b += c.capacity() * sizeof(Child);
  return b + order_.memory_bytes();
}

}  // namespace lzscan
