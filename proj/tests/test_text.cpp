#include <doctest.h>

#include <random>

#include "lzscan/text.hpp"

using namespace lzscan;


TEST_CASE("codes follow first occurrence") {
  IngestedText t = ingest("banana");
  CHECK(t.alphabet.distinct() == 3);
  CHECK(t.alphabet.code_of['b'] == 1);
  CHECK(t.alphabet.code_of['a'] == 2);
  CHECK(t.alphabet.code_of['n'] == 3);
  CHECK(t.alphabet.sigma == 4);
  REQUIRE(t.text.size() == 7);
  CHECK(t.text[0] == 0);
  CHECK(t.text[1] == 1);
  CHECK(t.text[2] == 2);
  CHECK(t.text[6] == 2);
}

TEST_CASE("sigma is a power of two above the distinct count") {
  CHECK(sigma_for(0) == 2);
  CHECK(sigma_for(1) == 2);
  CHECK(sigma_for(3) == 4);
  CHECK(sigma_for(4) == 8);
  CHECK(sigma_for(255) == 256);
  CHECK(sigma_for(256) == 512);
}

TEST_CASE("reads outside the text are the sentinel") {
  IngestedText t = ingest("abc");
  CHECK(t.text.at(-1) == 0);
  CHECK(t.text.at(-100) == 0);
  CHECK(t.text.at(4) == 0);
  CHECK(t.text.at(1000) == 0);
}

TEST_CASE("pack reads base sigma digits") {
  std::vector<Code> codes{0, 1, 2, 3, 1};
  PackedText t = text_from_codes(codes);
  REQUIRE(t.sigma() == 4);
  REQUIRE(t.radix() == 1);  // log 5 / log 4
  CHECK(t.pack(3, 1) == 3);
  CHECK_THROWS(t.pack(1, 2));
  CHECK(t.pack_word(1, 2) == 6);
  CHECK(t.pack_word(2, 3) == 2 * 16 + 3 * 4 + 1);
  CHECK(t.pack_word(4, 2) == 4);  // the digit past the end is 0
  CHECK(t.pack_word(-1, 3) == 1);
}

TEST_CASE("radix is floor(log n / log sigma)") {
  std::vector<Code> codes(1 << 12, 1);
  codes[0] = 0;
  PackedText t = text_from_codes(codes);
  CHECK(t.sigma() == 2);
  CHECK(t.radix() == 12);
  codes.assign(16, 3);
  codes[0] = 0;
  CHECK(text_from_codes(codes).radix() == 2);
  codes.assign(3, 1);
  codes[0] = 0;
  CHECK(text_from_codes(codes).radix() == 1);
}

TEST_CASE("word comparisons agree with symbol comparisons") {
  std::mt19937_64 rng(11);
  // Two-symbol texts give long common prefixes; wide ones exercise every digit.
  for (unsigned span : {1u, 2u, 3u, 31u, 500u}) {
    std::vector<Code> codes(700);
    codes[0] = 0;
    for (std::size_t i = 1; i < codes.size(); ++i) codes[i] = static_cast<Code>(1 + rng() % span);
    PackedText t = text_from_codes(codes);
    auto at = [&](std::int64_t i) -> Code { return i < 0 || i >= static_cast<std::int64_t>(codes.size()) ? 0 : codes[i]; };
    for (int trial = 0; trial < 3000; ++trial) {
      std::int64_t i = static_cast<std::int64_t>(rng() % 760) - 30, j = static_cast<std::int64_t>(rng() % 760) - 30;
      std::size_t cap = rng() % 300;
      std::size_t f = 0;
      while (f < cap && at(i + f) == at(j + f)) ++f;
      LcpResult r = t.lcp_compare(i, j, cap);
      REQUIRE(r.length == f);
      if (f < cap) CHECK(r.order == (at(i + f) < at(j + f) ? -1 : 1));
      std::size_t g = 0;
      while (g < cap && at(i - g) == at(j - g)) ++g;
      LcpResult q = t.lcp_compare_reverse(i, j, cap);
      REQUIRE(q.length == g);
      if (g < cap) CHECK(q.order == (at(i - g) < at(j - g) ? -1 : 1));
    }
  }
}

TEST_CASE("reconstruct decodes references that overlap their source") {
  IngestedText t = ingest("aaaa");
  Parse p{Factor::literal(1), Factor::reference(3, 1)};
  auto bytes = reconstruct(p, t.alphabet);
  CHECK(std::string(bytes.begin(), bytes.end()) == "aaaa");
}
