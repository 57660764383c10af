#include "lzscan/order_list.hpp"

#include <cmath>
#include <stdexcept>

namespace lzscan {

OrderList::OrderList()
    : label_{0},
      bucket_{0},
      next_{kNone},
      prev_{kNone},
      top_label_{0},
      bucket_first_{0},
      bucket_count_{1},
      bucket_next_{kNone},
      bucket_prev_{kNone} {}

OrderList::Elem OrderList::insert_after(Elem x) {
  std::uint32_t b = bucket_[x];
  Elem y = next_[x];
  bool y_in_bucket = y != kNone && bucket_[y] == b;
  std::uint64_t lo = label_[x];
  std::uint64_t hi = y_in_bucket ? label_[y] : ~std::uint64_t{0};
  if (hi - lo < 2) {
    relabel_bucket(b);
    return insert_after(x);
  }
  Elem e = static_cast<Elem>(label_.size());
  label_.push_back(lo + (hi - lo) / 2);
  bucket_.push_back(b);
  next_.push_back(y);
  prev_.push_back(x);
  next_[x] = e;
  if (y != kNone) prev_[y] = e;
  if (++bucket_count_[b] > kBucketCap) split_bucket(b);
  return e;
}

OrderList::Elem OrderList::insert_before(Elem x) {
  if (x == head()) throw std::invalid_argument("cannot insert before the head");
  return insert_after(prev_[x]);
}

void OrderList::relabel_bucket(std::uint32_t b) {
  std::uint64_t step = (~std::uint64_t{0}) / (bucket_count_[b] + 1);
  std::uint64_t l = 0;
  for (Elem e = bucket_first_[b]; e != kNone && bucket_[e] == b; e = next_[e]) {
    label_[e] = l;
    l += step;
  }
}

void OrderList::split_bucket(std::uint32_t b) {
  std::uint32_t nb = new_bucket_after(b);
  std::uint32_t keep = bucket_count_[b] / 2;
  Elem e = bucket_first_[b];
  for (std::uint32_t k = 0; k < keep; ++k) e = next_[e];
  bucket_first_[nb] = e;
  bucket_count_[nb] = bucket_count_[b] - keep;
  bucket_count_[b] = keep;
  for (Elem f = e; f != kNone && bucket_[f] == b; f = next_[f]) bucket_[f] = nb;
  relabel_bucket(b);
  relabel_bucket(nb);
}

std::uint32_t OrderList::new_bucket_after(std::uint32_t b) {
  std::uint32_t nb = static_cast<std::uint32_t>(top_label_.size());
  std::uint32_t after = bucket_next_[b];
  top_label_.push_back(0);
  bucket_first_.push_back(kNone);
  bucket_count_.push_back(0);
  bucket_next_.push_back(after);
  bucket_prev_.push_back(b);
  bucket_next_[b] = nb;
  if (after != kNone) bucket_prev_[after] = nb;

  std::uint64_t lo = top_label_[b];
  std::uint64_t hi = after != kNone ? top_label_[after] : kTopUniverse;
  if (hi - lo >= 2) {
    top_label_[nb] = lo + (hi - lo) / 2;
    return nb;
  }
  // Smallest aligned range around b that is sparse enough, then spread its
  // buckets evenly over it.
  constexpr double kT = 1.5;
  for (unsigned i = 1; i <= 62; ++i) {
    std::uint64_t size = std::uint64_t{1} << i;
    std::uint64_t base = lo & ~(size - 1);
    std::uint64_t end = base + size;
    std::uint32_t first = b;
    while (bucket_prev_[first] != kNone && top_label_[bucket_prev_[first]] >= base) first = bucket_prev_[first];
    std::uint64_t count = 0;
    std::uint32_t c = first;
    for (; c != kNone && (c == nb || top_label_[c] < end); c = bucket_next_[c]) ++count;
    if (static_cast<double>(count) < std::pow(kT, static_cast<double>(i)) && count < size) {
      std::uint64_t step = size / count;
      std::uint64_t l = base;
      for (std::uint32_t u = first; u != c; u = bucket_next_[u]) {
        top_label_[u] = l;
        l += step;
      }
      return nb;
    }
  }
  throw std::length_error("order list label space exhausted");
}

std::size_t OrderList::memory_bytes() const {
  return label_.capacity() * 8 + (bucket_.capacity() + next_.capacity() + prev_.capacity()) * 4 +
         top_label_.capacity() * 8 +
         (bucket_first_.capacity() + bucket_count_.capacity() + bucket_next_.capacity() + bucket_prev_.capacity()) * 4;
}

}  // namespace lzscan
