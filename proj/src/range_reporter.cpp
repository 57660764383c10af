#include "lzscan/range_reporter.hpp"

#include <algorithm>

namespace lzscan {

void RangeReporter::insert(Point p) {
  aux_vector<Point> carry{p};
  std::size_t k = 0;
  auto by_x = [&](const Point& a, const Point& b) { return xs_->precedes(a.x, b.x); };
  for (;; ++k) {
    if (k == blocks_.size()) blocks_.emplace_back();
    Block& blk = blocks_[k];
    if (blk.by_x.empty()) break;
    aux_vector<Point> merged;
    merged.reserve(carry.size() + blk.by_x.size());
    std::merge(blk.by_x.begin(), blk.by_x.end(), carry.begin(), carry.end(), std::back_inserter(merged), by_x);
    carry.swap(merged);
    blk = Block{};
  }
  blocks_[k].by_x = std::move(carry);
  build(blocks_[k]);
  ++size_;
}

void RangeReporter::build(Block& blk) const {
  const std::size_t m = blk.by_x.size();
  auto y_less = [&](std::uint32_t a, std::uint32_t b) { return ys_->precedes(blk.by_x[a].y, blk.by_x[b].y); };
  aux_vector<std::uint32_t> cur(m);
  for (std::uint32_t i = 0; i < m; ++i) cur[i] = i;
  blk.levels.push_back(cur);
  for (std::size_t run = 1; run < m; run <<= 1) {
    aux_vector<std::uint32_t> next(m);
    for (std::size_t lo = 0; lo < m; lo += 2 * run) {
      std::size_t mid = std::min(m, lo + run), hi = std::min(m, lo + 2 * run);
      std::merge(cur.begin() + lo, cur.begin() + mid, cur.begin() + mid, cur.begin() + hi, next.begin() + lo, y_less);
    }
    cur.swap(next);
    blk.levels.push_back(cur);
  }
}

std::optional<RangeReporter::Point> RangeReporter::query_block(const Block& blk, OrderList::Elem x_lo,
                                                               OrderList::Elem x_hi, OrderList::Elem y_lo,
                                                               OrderList::Elem y_hi) const {
  const auto& pts = blk.by_x;
  std::size_t l = std::partition_point(pts.begin(), pts.end(), [&](const Point& p) { return xs_->precedes(p.x, x_lo); }) -
                  pts.begin();
  std::size_t r = std::partition_point(pts.begin() + l, pts.end(), [&](const Point& p) { return !xs_->precedes(x_hi, p.x); }) -
                  pts.begin();
  // Canonical runs of [l, r), bottom-up.
  auto check = [&](std::size_t level, std::size_t run) -> std::optional<Point> {
    const auto& idx = blk.levels[level];
    std::size_t lo = run << level, hi = std::min(idx.size(), (run + 1) << level);
    auto it = std::partition_point(idx.begin() + lo, idx.begin() + hi,
                                   [&](std::uint32_t i) { return ys_->precedes(pts[i].y, y_lo); });
    if (it == idx.begin() + hi) return std::nullopt;
    const Point& p = pts[*it];
    if (ys_->precedes(y_hi, p.y)) return std::nullopt;
    return p;
  };
  for (std::size_t level = 0; l < r; ++level, l >>= 1, r >>= 1) {
    if (l & 1) {
      if (auto p = check(level, l)) return p;
      ++l;
    }
    if (r & 1) {
      --r;
      if (auto p = check(level, r)) return p;
    }
  }
  return std::nullopt;
}

std::optional<RangeReporter::Point> RangeReporter::query(OrderList::Elem x_lo, OrderList::Elem x_hi,
                                                         OrderList::Elem y_lo, OrderList::Elem y_hi) const {
  for (const Block& blk : blocks_) {
    if (blk.by_x.empty()) continue;
    if (auto p = query_block(blk, x_lo, x_hi, y_lo, y_hi)) return p;
  }
  return std::nullopt;
}

std::size_t RangeReporter::memory_bytes() const {
  std::size_t b = 0;
  for (const Block& blk : blocks_) {
    b += blk.by_x.capacity() * sizeof(Point);
    for (const auto& l : blk.levels) b += l.capacity() * 4;
  }
  return b;
}

}  // namespace lzscan
