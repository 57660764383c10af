#include <doctest.h>

#include "structure_oracles.hpp"

using namespace lzscan;

TEST_CASE("order list basics") {
  OrderList om;
  auto a = om.push_front();
  auto b = om.insert_after(a);
  auto c = om.insert_before(b);
  auto d = om.push_front();
  // d a c b
  CHECK(om.precedes(d, a));
  CHECK(om.precedes(a, c));
  CHECK(om.precedes(c, b));
  CHECK_FALSE(om.precedes(b, d));
  CHECK_FALSE(om.precedes(a, a));
  CHECK(om.precedes(om.head(), d));
  CHECK(om.size() == 4);
}

TEST_CASE("order list survives many insertions at one point") {
  OrderList om;
  auto first = om.push_front();
  auto last = om.insert_after(first);
  std::vector<OrderList::Elem> between;
  auto cur = first;
  for (int k = 0; k < 20000; ++k) {
    cur = om.insert_after(first);  // each new element goes right after first
    between.push_back(cur);
  }
  CHECK(om.precedes(first, between.back()));
  CHECK(om.precedes(between.back(), between.front()));
  CHECK(om.precedes(between.front(), last));
  for (std::size_t k = 1; k < between.size(); k += 97) CHECK(om.precedes(between[k], between[k - 1]));
}

TEST_CASE("order list matches a vector") {
  oracle::Tally t = oracle::order_list(201, 20000);
  CHECK(t.ops >= 20000);
  CHECK(t.mismatches == 0);
}

TEST_CASE("tour tree matches a scan") {
  oracle::Tally t = oracle::tour_tree(202, 20000);
  CHECK(t.ops >= 20000);
  CHECK(t.mismatches == 0);
}

TEST_CASE("range reporter basics") {
  OrderList xs, ys;
  auto x1 = xs.push_front(), x2 = xs.insert_after(x1), x3 = xs.insert_after(x2);
  auto y1 = ys.push_front(), y2 = ys.insert_after(y1), y3 = ys.insert_after(y2);
  RangeReporter rr(xs, ys);
  CHECK_FALSE(rr.query(x1, x3, y1, y3));
  rr.insert({x2, y2, 7});
  auto hit = rr.query(x1, x3, y1, y3);
  REQUIRE(hit);
  CHECK(hit->payload == 7);
  CHECK_FALSE(rr.query(x3, x3, y1, y3));
  CHECK_FALSE(rr.query(x1, x3, y3, y3));
  // A new x element between x1 and x2 does not disturb stored points.
  auto x15 = xs.insert_after(x1);
  rr.insert({x15, y3, 9});
  CHECK(rr.query(x15, x15, y1, y3)->payload == 9);
  CHECK(rr.query(x2, x2, y2, y2)->payload == 7);
  CHECK(rr.size() == 2);
}

TEST_CASE("range reporter matches a scan") {
  oracle::Tally t = oracle::range_reporting(203, 20000);
  CHECK(t.ops >= 20000);
  CHECK(t.mismatches == 0);
}
