#pragma once

#include <cstdint>
#include <vector>

namespace lzscan {

// D within [0, k) such that every residue mod k is a difference of two
// members; |D| <= 4 sqrt(k).
class DifferenceCover {
 public:
  static DifferenceCover build(std::uint32_t k);
  // Validates an explicit member set.
  static DifferenceCover from_members(std::uint32_t k, std::vector<std::uint32_t> members);

  std::uint32_t modulus() const { return k_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  bool contains(std::uint32_t r) const { return member_[r % k_]; }
  // Rank of r among the members; r must be a member.
  std::uint32_t rank(std::uint32_t r) const { return rank_[r % k_]; }

  // Some d in [0, k) with both (i - d) mod k and (j - d) mod k in D.
  std::uint32_t shift_for(std::uint64_t i, std::uint64_t j) const;

  // Exhaustive check of the covering property.
  static bool covers(std::uint32_t k, const std::vector<std::uint32_t>& d);

 private:
  std::uint32_t k_ = 1;
  std::vector<std::uint32_t> members_;
  std::vector<bool> member_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> witness_;  // witness_[delta] = y in D with y - delta (mod k) in D
};

// Sample positions M = { i : i mod k in D } with O(1) successor queries.
class SampleSet {
 public:
  explicit SampleSet(const DifferenceCover& dc);

  bool contains(std::uint64_t i) const { return dc_->contains(static_cast<std::uint32_t>(i % k_)); }
  // Smallest member >= i.
  std::uint64_t next_sample(std::uint64_t i) const { return i + gap_[i % k_]; }
  // Dense index of a member.
  std::uint64_t index(std::uint64_t i) const { return (i / k_) * size_ + dc_->rank(static_cast<std::uint32_t>(i % k_)); }
  std::uint32_t period() const { return k_; }

 private:
  const DifferenceCover* dc_;
  std::uint32_t k_;
  std::uint32_t size_;
  std::vector<std::uint32_t> gap_;
};

}  // namespace lzscan
