#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "plain.hpp"
#include "lzscan/suffix_sort.hpp"

using namespace lzscan;

namespace {

std::vector<Pos> naive_sa(const std::vector<Code>& s) {
  std::vector<Pos> sa(s.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](Pos a, Pos b) {
    return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
  });
  return sa;
}

Pos common(const std::vector<Code>& s, Pos a, Pos b) {
  Pos k = 0;
  while (a + k < s.size() && b + k < s.size() && s[a + k] == s[b + k]) ++k;
  return k;
}

std::vector<Code> random_codes(std::mt19937_64& rng, std::size_t n, unsigned span) {
  std::vector<Code> s(n);
  for (Code& c : s) c = static_cast<Code>(rng() % span);
  return s;
}

}  // namespace

TEST_CASE("suffix array of banana") {
  // b=2 a=1 n=3
  std::vector<Code> s{2, 1, 3, 1, 3, 1};
  CHECK(plain(suffix_array(s)) == std::vector<Pos>{5, 3, 1, 0, 4, 2});
  CHECK(plain(lcp_array(s, suffix_array(s))) == std::vector<Pos>{0, 1, 3, 0, 0, 2});
}

TEST_CASE("suffix and lcp arrays match sorting") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    unsigned span = trial % 3 == 0 ? 1 : trial % 3 == 1 ? 2 : 40;
    auto s = random_codes(rng, 1 + rng() % 200, span);
    auto sa = suffix_array(s);
    REQUIRE(plain(sa) == naive_sa(s));
    auto lcp = lcp_array(s, sa);
    CHECK(lcp[0] == 0);
    for (std::size_t k = 1; k < s.size(); ++k) REQUIRE(lcp[k] == common(s, sa[k - 1], sa[k]));
  }
}

TEST_CASE("longest previous factor matches a direct scan") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_codes(rng, 1 + rng() % 150, 1 + trial % 4);
    auto lpf = longest_previous_factor(s);
    for (Pos i = 0; i < s.size(); ++i) {
      Pos best = 0;
      for (Pos j = 0; j < i; ++j) best = std::max(best, common(s, i, j));
      REQUIRE(lpf[i] == best);
    }
  }
}
