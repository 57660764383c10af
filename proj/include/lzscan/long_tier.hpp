#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/difference_cover.hpp"
#include "lzscan/packed_trie.hpp"
#include "lzscan/prefix_trie.hpp"
#include "lzscan/range_reporter.hpp"
#include "lzscan/text.hpp"

namespace lzscan {

struct SamplePair {
  Pos sample;
  Vertex s_leaf;
  Vertex t_leaf;
};

struct LongStats {
  std::size_t registered = 0;
  std::size_t range_queries = 0;
  std::size_t context_hits = 0;  // registrations that reused a stored tau^2-context
};

// Dynamic index over sampled positions i in M = { i : i mod tau^2 in D }:
// S holds the reversed prefixes ending at i, T the forward strings
// s[i+1..i+tau^2], and a range reporter links the two leaves of each sample.
class SampleIndex {
 public:
  SampleIndex(const PackedText& text, Pos tau2);
  SampleIndex(const SampleIndex&) = delete;
  SampleIndex& operator=(const SampleIndex&) = delete;

  const DifferenceCover& cover() const { return cover_; }
  const SampleSet& samples() const { return samples_; }
  const ReversedPrefixTrie& s_trie() const { return s_; }
  const PackedTrie& t_trie() const { return t_; }
  const PackedTrie& context_trie() const { return ctx_; }
  // Registered samples sharing the stored context of a context-trie leaf.
  std::size_t context_group_size(Vertex ctx_leaf) const;

  // Registers sample i; i must be in M and exceed every registered sample.
  void register_pair(Pos i);
  // Registers every sample below limit that is not yet registered.
  void register_below(Pos limit);
  // Next sample position not yet registered.
  std::uint64_t frontier() const { return next_; }

  Vertex s_leaf(Pos i) const { return s_leaf_[samples_.index(i)]; }
  Vertex t_leaf(Pos i) const { return t_leaf_[samples_.index(i)]; }

  // Some registered sample whose S-leaf lies below v and T-leaf below u.
  std::optional<SamplePair> tree_range(Vertex v, Vertex u) const;

  // Length and earlier start of the factor at p, given that its first tau^2
  // symbols occur earlier. Registers samples below the returned end.
  struct Result {
    Pos length;
    Pos source;
  };
  Result extend_long(Pos p);

  const LongStats& stats() const { return stats_; }
  std::size_t memory_bytes() const;

 private:
  struct Locate {
    Pos y = 0;                   // longest prefix of the reversed prefix at t present in S
    Vertex witness = kNoVertex;  // a stored S-leaf sharing those y symbols
    PackedTrie::Search ctx;
  };
  struct HEntry {
    OrderList::Elem key;  // S-leaf of sample - tau^2, kNone when sample < tau^2
    Pos sample;
  };
  struct HLess {
    const ReversedPrefixTrie* s;
    bool operator()(const HEntry& a, const HEntry& b) const {
      if (a.key == b.key) return false;
      if (a.key == OrderList::kNone) return true;
      if (b.key == OrderList::kNone) return false;
      return s->order().precedes(a.key, b.key);
    }
  };
  using HSet = std::set<HEntry, HLess, AuxAllocator<HEntry>>;

  Locate locate(Pos t) const;
  void insert_located(Pos t, const Locate& loc);

  const PackedText* text_;
  Pos tau2_;
  unsigned r_;
  DifferenceCover cover_;
  SampleSet samples_;
  ReversedPrefixTrie s_;
  PackedTrie t_;
  PackedTrie ctx_;
  RangeReporter z_;
  aux_vector<HSet> groups_;  // indexed by context-trie leaf tag
  aux_vector<Vertex> s_leaf_, t_leaf_;
  std::uint64_t next_ = 0;
  LongStats stats_;
};

}  // namespace lzscan
