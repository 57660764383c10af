#pragma once

#include <cstdint>
#include <vector>

#include "lzscan/aux_alloc.hpp"

namespace lzscan {

// Order-maintenance list: insert after/before an element, O(1) order queries.
// Two levels: buckets of at most 64 elements carry local 64-bit labels, and
// buckets themselves carry 62-bit labels kept sparse by density relabelling.
class OrderList {
 public:
  using Elem = std::uint32_t;
  static constexpr Elem kNone = ~Elem{0};

  OrderList();

  // A hidden head element precedes every user element.
  Elem head() const { return 0; }
  Elem insert_after(Elem x);
  Elem insert_before(Elem x);
  Elem push_front() { return insert_after(head()); }

  bool precedes(Elem a, Elem b) const {
    std::uint32_t ba = bucket_[a], bb = bucket_[b];
    if (ba != bb) return top_label_[ba] < top_label_[bb];
    return label_[a] < label_[b];
  }
  Elem next(Elem x) const { return next_[x]; }
  Elem prev(Elem x) const { return prev_[x]; }
  // Number of user elements.
  std::size_t size() const { return next_.size() - 1; }
  std::size_t memory_bytes() const;

 private:
  static constexpr std::uint32_t kBucketCap = 64;
  static constexpr std::uint64_t kTopUniverse = std::uint64_t{1} << 62;

  void relabel_bucket(std::uint32_t b);
  void split_bucket(std::uint32_t b);
  std::uint32_t new_bucket_after(std::uint32_t b);

  aux_vector<std::uint64_t> label_;
  aux_vector<std::uint32_t> bucket_;
  aux_vector<Elem> next_, prev_;

  aux_vector<std::uint64_t> top_label_;
  aux_vector<Elem> bucket_first_;
  aux_vector<std::uint32_t> bucket_count_;
  aux_vector<std::uint32_t> bucket_next_, bucket_prev_;
};

}  // namespace lzscan
