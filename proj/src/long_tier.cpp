#include "lzscan/long_tier.hpp"

#include <algorithm>
#include <stdexcept>

namespace lzscan {

SampleIndex::SampleIndex(const PackedText& text, Pos tau2)
    : text_(&text),
      tau2_(tau2),
      r_(text.radix()),
      cover_(DifferenceCover::build(tau2)),
      samples_(cover_),
      s_(text),
      t_(text, tau2, PackedTrie::Direction::Forward, true),
      ctx_(text, tau2, PackedTrie::Direction::Reverse, false),
      z_(s_.order(), t_.order()) {
  next_ = samples_.next_sample(0);
}

std::size_t SampleIndex::context_group_size(Vertex ctx_leaf) const { return groups_.at(ctx_.tag(ctx_leaf)).size(); }

SampleIndex::Locate SampleIndex::locate(Pos t) const {
  Locate loc;
  loc.ctx = ctx_.search(t);
  if (s_.leaves() == 0) return loc;
  if (loc.ctx.matched < tau2_) {
    // Distinct reversed prefixes differ within their contexts, so the context
    // match is the answer and any sample below the locus witnesses it.
    loc.y = loc.ctx.matched;
    loc.witness = s_leaf(static_cast<Pos>(ctx_.anchor(loc.ctx.locus)));
    return loc;
  }
  const HSet& group = groups_[ctx_.tag(loc.ctx.locus)];
  const Vertex back = s_leaf(t - tau2_);
  const HEntry probe{s_.leaf_elem(back), t};
  auto succ = group.lower_bound(probe);
  auto consider = [&](const HEntry& e) {
    Pos l = tau2_ + s_.lcp(s_leaf(e.sample - tau2_), back);
    if (loc.witness == kNoVertex || l > loc.y) {
      loc.y = l;
      loc.witness = s_leaf(e.sample);
    }
  };
  if (succ != group.end()) consider(*succ);
  if (succ != group.begin()) consider(*std::prev(succ));
  return loc;
}

void SampleIndex::insert_located(Pos t, const Locate& loc) {
  Vertex sl = s_.insert(t, loc.witness, loc.y);
  HEntry entry{t >= tau2_ ? s_.leaf_elem(s_leaf(t - tau2_)) : OrderList::kNone, t};
  if (loc.ctx.matched < tau2_) {
    Vertex w = ctx_.insert(t, loc.ctx);
    ctx_.tag(w) = static_cast<std::uint32_t>(groups_.size());
    groups_.emplace_back(HLess{&s_});
    groups_.back().insert(entry);
  } else {
    groups_[ctx_.tag(loc.ctx.locus)].insert(entry);
    ++stats_.context_hits;
  }
  Vertex tl = t_.insert(static_cast<std::int64_t>(t) + 1);
  std::uint64_t idx = samples_.index(t);
  if (s_leaf_.size() <= idx) {
    s_leaf_.resize(idx + 1, kNoVertex);
    t_leaf_.resize(idx + 1, kNoVertex);
  }
  s_leaf_[idx] = sl;
  t_leaf_[idx] = tl;
  z_.insert({s_.leaf_elem(sl), t_.first_token(tl), t});
  ++stats_.registered;
  next_ = samples_.next_sample(static_cast<std::uint64_t>(t) + 1);
}

void SampleIndex::register_pair(Pos i) {
  if (!samples_.contains(i)) throw std::invalid_argument("register_pair: position is not a sample");
  if (i < next_) throw std::logic_error("register_pair: samples must be registered in increasing order");
  if (i != next_) throw std::logic_error("register_pair: an earlier sample is not registered");
  insert_located(i, locate(i));
}

void SampleIndex::register_below(Pos limit) {
  while (next_ < limit) register_pair(static_cast<Pos>(next_));
}

std::optional<SamplePair> SampleIndex::tree_range(Vertex v, Vertex u) const {
  auto p = z_.query(s_.first_token(v), s_.last_token(v), t_.first_token(u), t_.last_token(u));
  if (!p) return std::nullopt;
  return SamplePair{p->payload, s_leaf(p->payload), t_leaf(p->payload)};
}

SampleIndex::Result SampleIndex::extend_long(Pos p) {
  register_below(p);
  std::uint64_t z = tau2_;
  Pos occ = kNoPos;
  std::uint64_t occ_len = 0;
  auto record = [&](std::uint64_t len, Pos sample, Pos t) {
    if (len < z || (len == z && occ_len == z)) return;
    z = len;
    occ = sample - (t - p);
    occ_len = len;
  };
  auto query = [&](Vertex v, Vertex u) {
    ++stats_.range_queries;
    return tree_range(v, u);
  };

  for (std::uint64_t tt = samples_.next_sample(p); tt < p + z; tt = samples_.next_sample(tt + 1)) {
    const Pos t = static_cast<Pos>(tt);
    Locate loc = locate(t);
    if (loc.y >= t - p + 1) {
      const PackedTrie::Search fwd = t_.search(static_cast<std::int64_t>(t) + 1);
      const Pos x = fwd.matched;
      const Vertex v = s_.weighted_ancestor(loc.witness, t - p + 1);

      aux_vector<Pos> checks;
      for (Pos l = 0; l <= x; l += r_) checks.push_back(l);
      if (checks.back() != x) checks.push_back(x);

      Pos prev = 0;
      for (Pos l : checks) {
        const std::uint64_t j = static_cast<std::uint64_t>(t) + l;
        if (j >= p + z) {
          Vertex u = t_.locus_at(fwd, l);
          if (auto hit = query(v, u)) {
            record(j - p + 1, hit->sample, t);
          } else {
            // Deepest path vertex with weight in [prev, l) that still has a pair.
            auto lo = std::partition_point(fwd.path.begin(), fwd.path.end(),
                                           [&](Vertex w) { return t_.weight(w) < prev; });
            auto hi = std::partition_point(lo, fwd.path.end(), [&](Vertex w) { return t_.weight(w) < l; });
            std::optional<SamplePair> best;
            Pos best_len = 0;
            while (lo < hi) {
              auto mid = lo + (hi - lo) / 2;
              if (auto h = query(v, *mid)) {
                best = h;
                best_len = t_.weight(*mid);
                lo = mid + 1;
              } else {
                hi = mid;
              }
            }
            if (best) record(static_cast<std::uint64_t>(t) + best_len - p + 1, best->sample, t);
            break;
          }
        }
        prev = l;
      }
      // The loop above only reports pairs that lengthen the factor; make sure
      // the current length has a witness as well.
      if (occ_len < z) {
        std::uint64_t need = p + z - 1 - static_cast<std::uint64_t>(t);
        if (need <= x) {
          if (auto hit = query(v, t_.locus_at(fwd, static_cast<Pos>(need)))) record(z, hit->sample, t);
        }
      }
    }
    insert_located(t, loc);
  }
  if (occ == kNoPos || occ_len != z || occ >= p) throw std::logic_error("long tier found no earlier occurrence");
  return {static_cast<Pos>(z), occ};
}

std::size_t SampleIndex::memory_bytes() const {
  std::size_t b = s_.memory_bytes() + t_.memory_bytes() + ctx_.memory_bytes() + z_.memory_bytes();
  b += (s_leaf_.capacity() + t_leaf_.capacity()) * 4;
  // Red-black tree nodes: payload plus three pointers and a colour word.
  for (const HSet& h : groups_) b += sizeof(HSet) + h.size() * (sizeof(HEntry) + 32);
  return b;
}

}  // namespace lzscan
