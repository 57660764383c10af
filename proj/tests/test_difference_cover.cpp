#include <doctest.h>

#include <cmath>

#include "lzscan/difference_cover.hpp"

using namespace lzscan;

namespace {

bool qualifies(const DifferenceCover& dc, std::uint64_t i, std::uint64_t j, std::uint32_t d) {
  const std::uint64_t k = dc.modulus();
  return dc.contains(static_cast<std::uint32_t>((i + k - d % k) % k)) &&
         dc.contains(static_cast<std::uint32_t>((j + k - d % k) % k));
}

}  // namespace

TEST_CASE("worked covers are recognised") {
  CHECK(DifferenceCover::covers(5, {1, 2, 4}));
  CHECK(DifferenceCover::covers(9, {0, 1, 3, 6}));
  CHECK_FALSE(DifferenceCover::covers(9, {0, 1, 3}));
  CHECK(DifferenceCover::covers(1, {0}));
  CHECK_THROWS(DifferenceCover::from_members(9, {0, 1, 3}));
  DifferenceCover five = DifferenceCover::from_members(5, {1, 2, 4});
  CHECK(qualifies(five, 0, 3, 4));
  CHECK(qualifies(five, 0, 3, five.shift_for(0, 3)));
}

TEST_CASE("built covers are valid and small") {
  for (std::uint32_t k : {1u, 2u, 3u, 4u, 5u, 9u, 16u, 64u, 100u, 1024u, 2025u, 4096u}) {
    CAPTURE(k);
    DifferenceCover dc = DifferenceCover::build(k);
    CHECK(dc.modulus() == k);
    CHECK(DifferenceCover::covers(k, dc.members()));
    CHECK(static_cast<double>(dc.members().size()) <= 4 * std::sqrt(static_cast<double>(k)));
    for (std::uint32_t r = 0; r < k; ++r)
      if (dc.contains(r)) CHECK(dc.members()[dc.rank(r)] == r);
  }
  CHECK(DifferenceCover::build(1).members() == std::vector<std::uint32_t>{0});
}

TEST_CASE("shift property for every pair") {
  for (std::uint32_t k = 1; k <= 64; ++k) {
    DifferenceCover dc = DifferenceCover::build(k);
    for (std::uint64_t i = 0; i < 2 * k; ++i)
      for (std::uint64_t j = 0; j < 2 * k; ++j) {
        std::uint32_t d = dc.shift_for(i, j);
        REQUIRE(d < k);
        REQUIRE(qualifies(dc, i, j, d));
      }
  }
}

TEST_CASE("sample successor") {
  DifferenceCover dc = DifferenceCover::from_members(9, {0, 1, 3, 6});
  SampleSet m(dc);
  std::uint64_t expect_index = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::uint64_t next = i;
    while (!dc.contains(static_cast<std::uint32_t>(next % 9))) ++next;
    CHECK(m.next_sample(i) == next);
    CHECK(m.contains(i) == dc.contains(static_cast<std::uint32_t>(i % 9)));
    if (m.contains(i)) CHECK(m.index(i) == expect_index++);
    // i in M and i >= k implies i - k in M
    if (m.contains(i) && i >= 9) CHECK(m.contains(i - 9));
  }
}
