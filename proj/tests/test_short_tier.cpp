#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "lzscan/short_tier.hpp"

using namespace lzscan;

namespace {

Pos common(const PackedText& t, Pos a, Pos b) {
  Pos k = 0;
  while (b + k < t.size() && t[a + k] == t[b + k]) ++k;
  return k;
}

}  // namespace

TEST_CASE("depth is half the radix, rounded up") {
  // Two distinct bytes need sigma 4, so 4096 symbols give r = 6 and h = 3.
  std::mt19937_64 rng(1);
  IngestedText t = ingest(gen::uniform(rng, 4095, 2));
  REQUIRE(t.text.sigma() == 4);
  REQUIRE(t.text.radix() == 6);
  CHECK(ShortTables(t.text).depth() == 3);
  // The budget caps the table sizes: 4 + 16 + 64 = 84 entries at depth 3.
  CHECK(ShortTables(t.text, 84).depth() == 3);
  CHECK(ShortTables(t.text, 83).depth() == 2);
  // A one-symbol text keeps sigma 2: r = 12, h = 6.
  IngestedText u = ingest(std::string(4095, 'z'));
  CHECK(ShortTables(u.text).depth() == 6);
}

TEST_CASE("classification agrees with a direct search") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned sigma = trial % 3 == 0 ? 2 : trial % 3 == 1 ? 4 : 16;
    std::string s = trial % 2 ? gen::uniform(rng, 300 + rng() % 3000, sigma) : gen::run_rich(rng, 300 + rng() % 3000, sigma);
    IngestedText t = ingest(s);
    ShortTables tables(t.text);
    const unsigned h = tables.depth();
    for (Pos p = 1; p < t.text.size(); ++p) {
      tables.advance(p);
      Pos best = 0, where = kNoPos;
      for (Pos j = 1; j < p; ++j) {
        Pos l = std::min<Pos>(common(t.text, p, j), h);
        if (l > best) {
          best = l;
          where = j;
        }
      }
      ShortOutcome o = tables.classify(p);
      if (best == 0) {
        REQUIRE(o.kind == ShortOutcome::Kind::LiteralNew);
      } else if (best >= h) {
        REQUIRE(o.kind == ShortOutcome::Kind::AtLeastHalfR);
      } else {
        REQUIRE(o.kind == ShortOutcome::Kind::Short);
        REQUIRE(o.length == best);
        REQUIRE(o.source == where);  // earliest occurrence
      }
    }
  }
}

TEST_CASE("lookup returns the earliest occurrence before the cursor") {
  IngestedText t = ingest("abababba");
  ShortTables tables(t.text, 1 << 10);
  REQUIRE(tables.depth() >= 1);
  tables.advance(5);
  CHECK(tables.lookup(1, 1) == 1);
  CHECK(tables.lookup(1, 2) == 2);
  tables.advance(8);
  CHECK(tables.lookup(1, 8) == 1);
}

TEST_CASE("classify insists on a matching cursor") {
  IngestedText t = ingest("abc");
  ShortTables tables(t.text);
  tables.advance(1);
  CHECK_THROWS(tables.classify(2));
}
