#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "lzscan/aux_alloc.hpp"

namespace lzscan {

// Open-addressing map from 64-bit keys to 32-bit values with linear probing.
// No erase; grows at half load.
class FlatMap {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  static constexpr std::uint32_t kMissing = ~std::uint32_t{0};

  explicit FlatMap(std::size_t expected = 0) { rehash(std::bit_ceil(std::max<std::size_t>(16, expected * 2))); }

  std::uint32_t find(std::uint64_t key) const {
    std::size_t i = slot(key);
    for (;;) {
      std::uint64_t k = keys_[i];
      if (k == key) return values_[i];
      if (k == kEmpty) return kMissing;
      i = (i + 1) & mask_;
    }
  }

  // Inserts or overwrites.
  void put(std::uint64_t key, std::uint32_t value) {
    if ((size_ + 1) * 2 > keys_.size()) rehash(keys_.size() * 2);
    std::size_t i = slot(key);
    while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
    if (keys_[i] == kEmpty) ++size_;
    keys_[i] = key;
    values_[i] = value;
  }

  std::size_t size() const { return size_; }
  std::size_t memory_bytes() const { return keys_.capacity() * 8 + values_.capacity() * 4; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] != kEmpty) f(keys_[i], values_[i]);
  }

 private:
  std::size_t slot(std::uint64_t key) const { return (key * 0x9E3779B97F4A7C15ull) >> shift_; }

  void rehash(std::size_t cap) {
    aux_vector<std::uint64_t> old_keys(cap, kEmpty);
    aux_vector<std::uint32_t> old_values(cap);
    old_keys.swap(keys_);
    old_values.swap(values_);
    mask_ = cap - 1;
    shift_ = 64 - static_cast<unsigned>(std::countr_zero(cap));
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i] != kEmpty) put(old_keys[i], old_values[i]);
  }

  aux_vector<std::uint64_t> keys_;
  aux_vector<std::uint32_t> values_;
  std::size_t mask_ = 0;
  unsigned shift_ = 64;
  std::size_t size_ = 0;
};

}  // namespace lzscan
