#pragma once

#include <cstdint>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/flat_map.hpp"
#include "lzscan/text.hpp"

namespace lzscan {

// Multi-pattern automaton over text substrings. Equal patterns share a
// terminal, so the goto trie doubles as the trie of distinct patterns.
class AhoCorasick {
 public:
  AhoCorasick();

  // Adds s[start..start+len) and returns its terminal node.
  std::uint32_t add(const PackedText& text, Pos start, Pos len);
  void finalize();

  // For every node, the end position of the first occurrence of its string
  // in s[0..scan_end] if it is a terminal; kNoPos otherwise. Stops early once
  // every terminal has been seen.
  aux_vector<Pos> first_ends(const PackedText& text, Pos scan_end) const;

  std::size_t nodes() const { return fail_.size(); }

 private:
  std::uint32_t child(std::uint32_t u, Code c) const {
    return goto_.find((static_cast<std::uint64_t>(u) << 16) | c);
  }

  FlatMap goto_;
  aux_vector<std::uint32_t> first_child_, next_sibling_;
  aux_vector<Code> label_;
  aux_vector<std::uint32_t> fail_, out_;
  aux_vector<bool> terminal_;
  std::size_t terminals_ = 0;
};

}  // namespace lzscan
