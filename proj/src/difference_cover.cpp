#include "lzscan/difference_cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lzscan {

namespace {

// Difference sequence of the Colbourn-Ling construction for parameter r.
std::vector<std::uint32_t> colbourn_ling(std::uint32_t k) {
  double disc = 1296.0 - 96.0 * (13.0 - static_cast<double>(k));
  std::uint32_t r = disc <= 0 ? 0 : static_cast<std::uint32_t>(std::ceil((-36.0 + std::sqrt(disc)) / 48.0));
  auto step = [r](std::uint32_t i) -> std::uint32_t {
    if (i < r) return 1;
    if (i < r + 1) return r + 1;
    if (i < 2 * r + 1) return 2 * r + 1;
    if (i < 4 * r + 2) return 4 * r + 3;
    if (i < 5 * r + 3) return 2 * r + 2;
    return 1;
  };
  std::vector<std::uint32_t> d{0};
  std::uint64_t v = 0;
  for (std::uint32_t i = 0; i < 6 * r + 3; ++i) {
    v += step(i);
    d.push_back(static_cast<std::uint32_t>(v % k));
  }
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

// {0..m-1} together with the multiples of m.
std::vector<std::uint32_t> square_root_cover(std::uint32_t k) {
  std::uint32_t m = 1;
  while (static_cast<std::uint64_t>(m) * m < k) ++m;
  std::vector<std::uint32_t> d;
  for (std::uint32_t i = 0; i < m && i < k; ++i) d.push_back(i);
  for (std::uint64_t j = m; j < k; j += m) d.push_back(static_cast<std::uint32_t>(j));
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

}  // namespace

bool DifferenceCover::covers(std::uint32_t k, const std::vector<std::uint32_t>& d) {
  std::vector<bool> hit(k, false);
  for (std::uint32_t a : d)
    for (std::uint32_t b : d) hit[(a + k - b) % k] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
}

DifferenceCover DifferenceCover::build(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("difference cover modulus must be positive");
  std::vector<std::uint32_t> best = square_root_cover(k);
  std::vector<std::uint32_t> cl = colbourn_ling(k);
  if (cl.size() < best.size() && covers(k, cl)) best = std::move(cl);
  return from_members(k, std::move(best));
}

DifferenceCover DifferenceCover::from_members(std::uint32_t k, std::vector<std::uint32_t> members) {
  if (k == 0 || members.empty()) throw std::invalid_argument("difference cover needs k >= 1 and members");
  for (std::uint32_t& m : members) m %= k;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  DifferenceCover dc;
  dc.k_ = k;
  dc.members_ = std::move(members);
  dc.member_.assign(k, false);
  dc.rank_.assign(k, 0);
  for (std::uint32_t i = 0; i < dc.members_.size(); ++i) {
    dc.member_[dc.members_[i]] = true;
    dc.rank_[dc.members_[i]] = i;
  }
  dc.witness_.assign(k, k);
  for (std::uint32_t y : dc.members_)
    for (std::uint32_t z : dc.members_) {
      std::uint32_t delta = (y + k - z) % k;
      if (dc.witness_[delta] == k) dc.witness_[delta] = y;
    }
  if (std::find(dc.witness_.begin(), dc.witness_.end(), k) != dc.witness_.end())
    throw std::invalid_argument("set is not a difference cover");
  return dc;
}

std::uint32_t DifferenceCover::shift_for(std::uint64_t i, std::uint64_t j) const {
  // With y - z = i - j (mod k) for y, z in D, d = i - y gives i - d = y and
  // j - d = z.
  std::uint32_t ii = static_cast<std::uint32_t>(i % k_), jj = static_cast<std::uint32_t>(j % k_);
  std::uint32_t y = witness_[(ii + k_ - jj) % k_];
  return (ii + k_ - y) % k_;
}

SampleSet::SampleSet(const DifferenceCover& dc)
    : dc_(&dc), k_(dc.modulus()), size_(static_cast<std::uint32_t>(dc.members().size())), gap_(dc.modulus()) {
  // gap_[r] = distance from residue r to the next member, cyclically.
  std::uint32_t next = dc.members().front() + k_;
  for (std::uint32_t r = k_; r-- > 0;) {
    if (dc.contains(r)) next = r;
    gap_[r] = next - r;
  }
}

}  // namespace lzscan
