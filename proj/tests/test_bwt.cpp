#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "plain.hpp"
#include "lzscan/bwt_index.hpp"

using namespace lzscan;

namespace {

// $ < a < b < c < d
std::vector<Code> window(const std::string& s) {
  std::vector<Code> x;
  for (char ch : s) x.push_back(ch == '$' ? 0 : static_cast<Code>(ch - 'a' + 1));
  return x;
}

// Sorts the reversed prefixes directly.
std::vector<Pos> naive_rows(const std::vector<Code>& x) {
  std::vector<Pos> sa(x.size());
  std::iota(sa.begin(), sa.end(), 0);
  auto rev = [&](Pos i) { return std::vector<Code>(x.rend() - 1 - i, x.rend()); };
  std::sort(sa.begin(), sa.end(), [&](Pos a, Pos b) { return rev(a) < rev(b); });
  return sa;
}

}  // namespace

TEST_CASE("the worked example table") {
  BwtPsi idx = build_bwt_psi(window("$aabadcaababadcaaba"));
  const std::vector<Pos> sa{0, 1, 2, 8, 16, 4, 10, 18, 12, 7, 15, 3, 9, 17, 11, 6, 14, 5, 13};
  const std::string bwt = "aabbbdb$daaaaaaaacc";
  const std::vector<Pos> psi{1, 2, 11, 12, 13, 17, 14, 0, 18, 3, 4, 5, 6, 7, 8, 9, 10, 15, 16};
  REQUIRE(idx.d == 18);
  CHECK(plain(idx.sa) == sa);
  CHECK(plain(idx.bwt) == window(bwt));
  CHECK(plain(idx.psi) == psi);
}

TEST_CASE("tiny windows") {
  BwtPsi ab = build_bwt_psi(window("$ab"));
  CHECK(plain(ab.sa) == std::vector<Pos>{0, 1, 2});
  CHECK(plain(ab.psi) == std::vector<Pos>{1, 2, 0});
  CHECK(plain(rlcp_of(ab, window("$ab"), 10).values) == std::vector<Pos>{0, 0});

  BwtPsi aa = build_bwt_psi(window("$aa"));
  CHECK(plain(rlcp_of(aa, window("$aa"), 10).values) == std::vector<Pos>{0, 1});

  BwtPsi a = build_bwt_psi(window("$a"));
  CHECK(plain(a.bwt) == window("a$"));
  CHECK(plain(a.psi) == std::vector<Pos>{1, 0});
}

TEST_CASE("rejects a sentinel that is not the smallest symbol") {
  CHECK_THROWS(build_bwt_psi(std::vector<Code>{2, 1}));
  CHECK_NOTHROW(build_bwt_psi(std::vector<Code>{1, 2}));
  CHECK_THROWS(build_bwt_psi(std::vector<Code>{0, 1, 0}));
  CHECK_THROWS(build_bwt_psi(std::vector<Code>{}));
}

TEST_CASE("random windows agree with direct sorting") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Code> x(1 + rng() % 80);
    x[0] = 0;
    const unsigned span = 1 + trial % 4;
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = static_cast<Code>(1 + rng() % span);
    BwtPsi idx = build_bwt_psi(x);
    const Pos d = idx.d;
    REQUIRE(plain(idx.sa) == naive_rows(x));
    for (Pos k = 0; k <= d; ++k) {
      Pos i = idx.sa[k];
      REQUIRE(idx.sa_rank[i] == k);
      REQUIRE(idx.bwt[k] == (i == d ? x[0] : x[i + 1]));
      REQUIRE(idx.psi[k] == (i == d ? 0 : idx.sa_rank[i + 1]));
    }
    const Pos cap = 1 + static_cast<Pos>(rng() % 6);
    RlcpArray rl = rlcp_of(idx, x, cap);
    for (Pos k = 0; k + 1 <= d; ++k) {
      Pos a = idx.sa[k], b = idx.sa[k + 1], l = 0;
      while (l < cap && l <= std::min(a, b) && x[a - l] == x[b - l]) ++l;
      REQUIRE(rl.values[k] == l);
    }
    if (d >= 2) {
      Pos i = static_cast<Pos>(rng() % d), j = i + 1 + static_cast<Pos>(rng() % (d - i));
      Pos want = *std::min_element(rl.values.begin() + i, rl.values.begin() + j);
      CHECK(rlcp_range(rl, i, j) == want);
    }
  }
}
