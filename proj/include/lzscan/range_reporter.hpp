#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/order_list.hpp"

namespace lzscan {

// Insert-only 2D range emptiness with witness, where both coordinates are
// elements of order-maintenance lists. Points live in static merge-sort trees
// of sizes 2^k that are merged binary-counter style.
class RangeReporter {
 public:
  struct Point {
    OrderList::Elem x, y;
    std::uint32_t payload;
  };

  RangeReporter(const OrderList& xs, const OrderList& ys) : xs_(&xs), ys_(&ys) {}

  void insert(Point p);
  // Some point with x in [x_lo, x_hi] and y in [y_lo, y_hi], or none.
  std::optional<Point> query(OrderList::Elem x_lo, OrderList::Elem x_hi, OrderList::Elem y_lo,
                             OrderList::Elem y_hi) const;

  std::size_t size() const { return size_; }
  std::size_t memory_bytes() const;

 private:
  struct Block {
    aux_vector<Point> by_x;
    // levels[l] lists indices into by_x; each aligned run of 2^l is sorted by y.
    aux_vector<aux_vector<std::uint32_t>> levels;
  };

  void build(Block& blk) const;
  std::optional<Point> query_block(const Block& blk, OrderList::Elem x_lo, OrderList::Elem x_hi,
                                   OrderList::Elem y_lo, OrderList::Elem y_hi) const;

  const OrderList* xs_;
  const OrderList* ys_;
  aux_vector<Block> blocks_;  // blocks_[k] holds 0 or 2^k points
  std::size_t size_ = 0;
};

}  // namespace lzscan
