#include "lzscan/medium_tier.hpp"

#include <algorithm>
#include <stdexcept>

#include "lzscan/aho_corasick.hpp"

namespace lzscan {

WindowParams WindowParams::make(const PackedText& text, Pos p, Pos b, Pos tau) {
  const Pos n = text.size();
  if (p == 0 || p >= n) throw std::out_of_range("window start outside the text");
  if (b == 0 || tau < 2) throw std::invalid_argument("window needs b >= 1 and tau >= 2");
  WindowParams w;
  w.p = p;
  w.b = b;
  w.tau = tau;
  w.tau2 = tau * tau;
  std::uint64_t want = 1ull + b + w.tau2;
  w.d = static_cast<Pos>(std::min<std::uint64_t>(want, n - p));
  w.x.resize(w.d + 1);
  w.x[0] = 0;
  for (Pos k = 1; k <= w.d; ++k) w.x[k] = text[p + k - 1];
  return w;
}

TrieQ TrieQ::build(Pos d, RlcpArray rlcp, Pos tau2) {
  // Dry run on weights alone to size the arrays exactly.
  std::size_t nv = 2;
  {
    aux_vector<Pos> ws{0, tau2};
    for (Pos k = 1; k <= d; ++k) {
      Pos h = rlcp.values[k - 1];
      if (h >= tau2) continue;
      while (ws.back() > h) ws.pop_back();
      if (ws.back() < h) {
        ws.push_back(h);
        ++nv;
      }
      ws.push_back(tau2);
      ++nv;
    }
  }
  aux_vector<Vertex> parent;
  aux_vector<Pos> weight, first, last;
  aux_vector<Vertex> post;
  for (auto* v : {&parent, &weight, &first, &last, &post}) v->reserve(nv);
  aux_vector<Vertex> leaf_by_rank(d + 1);
  auto make = [&](Vertex par, Pos w, Pos f) {
    parent.push_back(par);
    weight.push_back(w);
    first.push_back(f);
    last.push_back(f);
    return static_cast<Vertex>(parent.size() - 1);
  };
  make(kNoVertex, 0, 0);
  aux_vector<Vertex> stack{0, make(0, tau2, 0)};
  leaf_by_rank[0] = 1;

  // Rows arrive in lexicographic order, so the trie grows along its
  // rightmost path.
  for (Pos k = 1; k <= d; ++k) {
    Pos h = rlcp.values[k - 1];
    if (h >= tau2) {
      leaf_by_rank[k] = stack.back();
      continue;
    }
    Vertex top = kNoVertex;
    while (weight[stack.back()] > h) {
      top = stack.back();
      stack.pop_back();
      last[top] = k - 1;
      post.push_back(top);
    }
    if (weight[stack.back()] < h) {
      Vertex u = make(stack.back(), h, first[top]);
      parent[top] = u;
      stack.push_back(u);
    }
    Vertex leaf = make(stack.back(), tau2, k);
    stack.push_back(leaf);
    leaf_by_rank[k] = leaf;
  }
  while (!stack.empty()) {
    last[stack.back()] = d;
    post.push_back(stack.back());
    stack.pop_back();
  }
  aux_vector<Pos>().swap(rlcp.values);
  aux_vector<Vertex>().swap(stack);

  aux_vector<Pos> child_off(nv + 1, 0);
  for (Vertex v : post)
    if (v != 0) ++child_off[parent[v] + 1];
  for (std::size_t v = 0; v < nv; ++v) child_off[v + 1] += child_off[v];
  aux_vector<Vertex> children(nv - 1);
  {
    aux_vector<Pos> fill(child_off.begin(), child_off.end() - 1);
    for (Vertex v : post)
      if (v != 0) children[fill[parent[v]]++] = v;
  }
  aux_vector<Vertex>().swap(post);

  // Renumber in heavy-first preorder.
  TrieQ q;
  q.tau2_ = tau2;
  aux_vector<Vertex> pre(nv);
  {
    WeightedAncestors hp(parent, weight, child_off, children, 0);
    aux_vector<Vertex>().swap(children);
    aux_vector<Pos>().swap(child_off);
    q.node_.resize(nv);
    q.end_.resize(nv);
    for (Vertex v = 0; v < nv; ++v) {
      Vertex u = hp.preorder(v);
      pre[v] = u;
      q.node_[u] = {v == 0 ? kNoVertex : hp.preorder(parent[v]), weight[v], hp.preorder(hp.head(v)), 0};
      q.end_[u] = u + hp.subtree_size(v);
    }
  }
  aux_vector<Vertex>().swap(parent);
  aux_vector<Pos>().swap(weight);
  q.first_.resize(nv);
  for (Vertex v = 0; v < nv; ++v) q.first_[pre[v]] = first[v];
  aux_vector<Pos>().swap(first);
  q.last_.resize(nv);
  for (Vertex v = 0; v < nv; ++v) q.last_[pre[v]] = last[v];
  aux_vector<Pos>().swap(last);
  for (Vertex& v : leaf_by_rank) v = pre[v];
  q.leaf_by_rank_ = std::move(leaf_by_rank);
  return q;
}

std::vector<Vertex> TrieQ::children(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = v + 1; u < end_[v]; u = end_[u]) out.push_back(u);
  return out;
}

void TrieQ::release_ranks() {
  aux_vector<Pos>().swap(first_);
  aux_vector<Pos>().swap(last_);
}

std::size_t TrieQ::memory_bytes() const {
  return node_.capacity() * sizeof(Node) + links_.capacity() * sizeof(Link) +
         (end_.capacity() + first_.capacity() + last_.capacity() + leaf_by_rank_.capacity()) * 4;
}

void TrieQ::attach_links(const BwtPsi& idx, std::uint32_t sigma) {
  const Vertex nv = static_cast<Vertex>(size());
  // Each vertex's set is the union of its children's sets. Children have
  // larger ids, so in decreasing id order the children's sets are the
  // topmost segments of a stack. The first pass only counts.
  aux_vector<Link> out;
  auto sweep = [&](bool fill) {
    aux_vector<Link> buf;
    aux_vector<Pos> seg_start;
    aux_vector<Vertex> seen(sigma, kNoVertex);
    std::size_t total = fill ? out.size() : 0;
    for (Vertex v = nv; v-- > 0;) {
      std::size_t nchild = 0;
      for (Vertex u = v + 1; u < end_[v]; u = end_[u]) ++nchild;
      std::size_t start;
      if (nchild == 0) {
        start = buf.size();
        for (Pos k = first_[v]; k <= last_[v]; ++k) {
          Code c = idx.bwt[k];
          if (seen[c] != v) {
            seen[c] = v;
            buf.push_back({c, leaf_by_rank_[idx.psi[k]]});
          }
        }
      } else {
        start = seg_start[seg_start.size() - nchild];
        seg_start.resize(seg_start.size() - nchild);
        std::size_t keep = start;
        for (std::size_t i = start; i < buf.size(); ++i) {
          if (seen[buf[i].c] != v) {
            seen[buf[i].c] = v;
            buf[keep++] = buf[i];
          }
        }
        buf.resize(keep);
      }
      if (fill) {
        // Segments go in from the back, so v's list starts at total.
        total -= buf.size() - start;
        node_[v].link = static_cast<Pos>(total);
        std::copy(buf.begin() + start, buf.end(), out.begin() + total);
        std::sort(out.begin() + total, out.begin() + total + (buf.size() - start),
                  [](const Link& x, const Link& y) { return x.c < y.c; });
      } else {
        total += buf.size() - start;
      }
      seg_start.push_back(static_cast<Pos>(start));
    }
    return total;
  };
  out.resize(sweep(false));
  sweep(true);
  links_ = std::move(out);
}

std::vector<Code> TrieQ::link_symbols(Vertex v) const {
  std::vector<Code> out;
  const std::size_t end = v + 1 < node_.size() ? node_[v + 1].link : links_.size();
  for (std::size_t i = node_[v].link; i < end; ++i) out.push_back(links_[i].c);
  return out;
}

MatchState extend_match(const TrieQ& q, MatchState st, Code c) {
  Vertex v = st.v;
  Pos len = st.len;
  for (;;) {
    Vertex leaf = q.link(v, c);
    if (leaf != kNoVertex) {
      Pos want = std::min(q.tau2(), len + 1);
      return {q.weighted_ancestor(leaf, want), want};
    }
    if (v == q.root()) return {q.root(), 0};
    v = q.parent(v);
    len = q.weight(v);
  }
}

MediumWindow::MediumWindow(const PackedText& text, Pos p, Pos b, Pos tau)
    : text_(&text), w_(WindowParams::make(text, p, b, tau)) {
  BwtPsi idx = build_bwt_psi(w_.x);
  RlcpArray rlcp = rlcp_of(idx, w_.x, w_.tau2);
  idx.release_sa();
  q_ = TrieQ::build(idx.d, std::move(rlcp), w_.tau2);
  q_.attach_links(idx, text.sigma());
  q_.release_ranks();
}

BlockParse MediumWindow::fill_lz(const LongTierFn& long_tier) const {
  const PackedText& s = *text_;
  const Pos n = s.size();
  const Pos tau2 = w_.tau2;
  const Vertex root = q_.root();

  MarkedDescendants marks(q_.size());
  aux_vector<Pos> mlen(q_.size(), tau2);
  MatchState st{root, 0};
  std::int64_t next_f = 0;

  // Extends the backward scan so that every position <= target is processed.
  auto scan_to = [&](std::int64_t target) {
    for (; next_f <= target; ++next_f) {
      st = extend_match(q_, st, s[next_f]);
      if (st.v == root) continue;
      marks.mark(q_.preorder(q_.parent(st.v)));
      mlen[st.v] = std::min(mlen[st.v], q_.weight(st.v) - st.len);
    }
  };
  auto occurs = [&](Vertex w, Pos len) {
    if (marks.any_in(q_.preorder(w), q_.subtree_size(w))) return true;
    Vertex u = q_.parent(w);
    return u != kNoVertex && marks.is_marked(q_.preorder(u)) &&
           static_cast<std::int64_t>(q_.weight(w)) - mlen[w] >= static_cast<std::int64_t>(len);
  };

  BlockParse out;
  out.bits.assign(w_.b + 1, false);
  const Pos last_start = std::min<std::uint64_t>(static_cast<std::uint64_t>(w_.p) + w_.b, n - 1);
  for (Pos t = w_.p; t <= last_start;) {
    BlockFactor f;
    f.start = t;
    Pos z = 0;
    Vertex v = root;
    for (;;) {
      scan_to(static_cast<std::int64_t>(t) + z - 1);
      if (z >= tau2) {
        if (!long_tier) throw std::logic_error("factor reaches tau^2 but no long tier is attached");
        LongMatch m = long_tier(t);
        if (m.length < tau2 || m.source == kNoPos || m.source >= t)
          throw std::logic_error("long tier returned an invalid match");
        z = m.length;
        f.source = m.source;
        f.origin = BlockFactor::Origin::Long;
        break;
      }
      if (t + z >= n) break;
      Vertex leaf = q_.link(v, s[t + z]);
      if (leaf == kNoVertex) break;
      Vertex w = q_.weighted_ancestor(leaf, z + 1);
      if (!occurs(w, z + 1)) break;
      v = w;
      ++z;
    }
    if (z == 0) {
      f.length = 1;
      f.origin = BlockFactor::Origin::Literal;
    } else {
      f.length = z;
    }
    out.bits[t - w_.p] = true;
    out.factors.push_back(f);
    t += f.length;
  }
  return out;
}

std::size_t MediumWindow::memory_bytes() const {
  return w_.x.capacity() * sizeof(Code) + q_.memory_bytes();
}

void report_occurrences(const PackedText& text, const WindowParams& w, aux_vector<BlockFactor>& factors,
                        Pos min_len, Pos max_len) {
  AhoCorasick ac;
  aux_vector<std::pair<std::size_t, std::uint32_t>> wanted;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const BlockFactor& f = factors[i];
    if (f.origin != BlockFactor::Origin::Medium || f.length < min_len || f.length >= max_len) continue;
    wanted.emplace_back(i, ac.add(text, f.start, f.length));
  }
  if (wanted.empty()) return;
  ac.finalize();
  const Pos scan_end = std::min<Pos>(text.size() - 1, w.p + w.d - 1);
  aux_vector<Pos> ends = ac.first_ends(text, scan_end);
  for (auto [i, term] : wanted) {
    BlockFactor& f = factors[i];
    Pos e = ends[term];
    if (e == kNoPos || e + 1 < f.length || e + 1 - f.length >= f.start)
      throw std::logic_error("no earlier occurrence found for a medium factor");
    f.source = e + 1 - f.length;
  }
}

}  // namespace lzscan
