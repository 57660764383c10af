#include "lzscan/prefix_trie.hpp"

#include <algorithm>
#include <stdexcept>

namespace lzscan {

ReversedPrefixTrie::ReversedPrefixTrie(const PackedText& text) : text_(&text) {
  make(kNoVertex, 0, 0);
  open_[0] = tour_.push_front(-1);
  close_[0] = tour_.insert_after(open_[0], -1);
  owner_ = {0, 0};
}

Vertex ReversedPrefixTrie::make(Vertex parent, Pos weight, Pos sample) {
  parent_.push_back(parent);
  weight_.push_back(weight);
  sample_.push_back(sample);
  children_.emplace_back();
  open_.push_back(TourTree::kNone);
  close_.push_back(TourTree::kNone);
  return static_cast<Vertex>(parent_.size() - 1);
}

Vertex ReversedPrefixTrie::weighted_ancestor(Vertex v, Pos w) const {
  if (weight_[v] < w) return kNoVertex;
  TourTree::Token t = tour_.last_below(open_[v], static_cast<std::int64_t>(w));
  return vertex_of(t);
}

Pos ReversedPrefixTrie::lcp(Vertex a, Vertex b) const {
  if (a == b) return weight_[a];
  TourTree::Token ta = open_[a], tb = open_[b];
  if (tour_.precedes(tb, ta)) std::swap(ta, tb);
  return static_cast<Pos>(tour_.range_min(ta, tb));
}

Vertex ReversedPrefixTrie::insert(Pos i, Vertex witness, Pos h) {
  Vertex u = root();
  if (witness == kNoVertex) {
    if (h != 0) throw std::invalid_argument("empty trie needs h = 0");
  } else {
    if (h >= weight_[witness]) throw std::invalid_argument("lcp cannot reach the end of a stored string");
    u = weighted_ancestor(witness, h);
    if (weight_[u] > h) {
      Vertex p = parent_[u];
      Vertex mid = make(p, h, sample_[u]);
      Code first = label_at(u, weight_[p]);
      for (Child& c : children_[p])
        if (c.c == first) c.v = mid;
      children_[mid].push_back({label_at(u, h), u});
      parent_[u] = mid;
      const std::int64_t pk = weight_[p];
      open_[mid] = tour_.insert_before(open_[u], pk);
      close_[mid] = tour_.insert_after(close_[u], pk);
      owner_.push_back(mid);
      owner_.push_back(mid);
      tour_.set_key(open_[u], h);
      if (close_[u] != open_[u]) tour_.set_key(close_[u], h);
      u = mid;
    }
  }

  Vertex leaf = make(u, i + 1, i);
  Code c = text_->at(static_cast<std::int64_t>(i) - h);
  auto& ch = children_[u];
  auto it = std::lower_bound(ch.begin(), ch.end(), c, [](const Child& x, Code y) { return x.c < y; });
  if (it != ch.end() && it->c == c) throw std::logic_error("reversed prefix already branches here");
  TourTree::Token tok = it == ch.begin() ? tour_.insert_after(open_[u], h) : tour_.insert_after(close_[(it - 1)->v], h);
  ch.insert(it, Child{c, leaf});
  open_[leaf] = close_[leaf] = tok;
  owner_.push_back(leaf);
  ++leaves_;
  return leaf;
}

std::vector<Vertex> ReversedPrefixTrie::leaves_in_order() const {
  std::vector<Vertex> out;
  for (TourTree::Token t : tour_.in_order()) {
    Vertex v = owner_[t];
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::size_t ReversedPrefixTrie::memory_bytes() const {
  std::size_t b = (parent_.capacity() + weight_.capacity() + sample_.capacity() + open_.capacity() +
                   close_.capacity() + owner_.capacity()) *
                      4 +
                  children_.capacity() * sizeof(aux_vector<Child>);
  for (const auto& c : children_) b += c.capacity() * sizeof(Child);
  return b + tour_.memory_bytes();
}

}  // namespace lzscan
