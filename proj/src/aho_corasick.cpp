#include "lzscan/aho_corasick.hpp"

namespace lzscan {

namespace {
constexpr std::uint32_t kNone = ~std::uint32_t{0};
}

AhoCorasick::AhoCorasick() : first_child_{kNone}, next_sibling_{kNone}, label_{0}, fail_{0}, out_{kNone}, terminal_{false} {}

std::uint32_t AhoCorasick::add(const PackedText& text, Pos start, Pos len) {
  std::uint32_t u = 0;
  for (Pos k = 0; k < len; ++k) {
    Code c = text[start + k];
    std::uint32_t v = child(u, c);
    if (v == FlatMap::kMissing) {
      v = static_cast<std::uint32_t>(fail_.size());
      first_child_.push_back(kNone);
      next_sibling_.push_back(first_child_[u]);
      first_child_[u] = v;
      label_.push_back(c);
      fail_.push_back(0);
      out_.push_back(kNone);
      terminal_.push_back(false);
      goto_.put((static_cast<std::uint64_t>(u) << 16) | c, v);
    }
    u = v;
  }
  if (!terminal_[u]) {
    terminal_[u] = true;
    ++terminals_;
  }
  return u;
}

void AhoCorasick::finalize() {
  aux_vector<std::uint32_t> queue;
  queue.reserve(fail_.size());
  for (std::uint32_t v = first_child_[0]; v != kNone; v = next_sibling_[v]) {
    fail_[v] = 0;
    queue.push_back(v);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t u = queue[qi];
    for (std::uint32_t v = first_child_[u]; v != kNone; v = next_sibling_[v]) {
      Code c = label_[v];
      std::uint32_t f = fail_[u];
      std::uint32_t g;
      while ((g = child(f, c)) == FlatMap::kMissing && f != 0) f = fail_[f];
      fail_[v] = g == FlatMap::kMissing ? 0 : g;
      std::uint32_t fv = fail_[v];
      out_[v] = terminal_[fv] ? fv : out_[fv];
      queue.push_back(v);
    }
  }
}

aux_vector<Pos> AhoCorasick::first_ends(const PackedText& text, Pos scan_end) const {
  aux_vector<Pos> ends(fail_.size(), kNoPos);
  std::size_t found = 0;
  std::uint32_t state = 0;
  for (Pos i = 0; i <= scan_end && found < terminals_; ++i) {
    Code c = text[i];
    std::uint32_t g;
    while ((g = child(state, c)) == FlatMap::kMissing && state != 0) state = fail_[state];
    state = g == FlatMap::kMissing ? 0 : g;
    // Once a node is reported, so is everything on its output chain.
    for (std::uint32_t u = terminal_[state] ? state : out_[state]; u != kNone && ends[u] == kNoPos; u = out_[u]) {
      ends[u] = i;
      ++found;
    }
  }
  return ends;
}

}  // namespace lzscan
