#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "lzscan/oracle.hpp"

using namespace lzscan;

namespace {

std::vector<Pos> lengths(const Parse& p) {
  std::vector<Pos> out;
  for (const Factor& f : p) out.push_back(f.length);
  return out;
}

}  // namespace

TEST_CASE("reference parse of the worked example") {
  IngestedText t = ingest("abbabbabbcabab");
  Parse p = naive_parse(t.text);
  CHECK(lengths(p) == std::vector<Pos>{1, 1, 1, 6, 1, 2, 2});
  CHECK(p[0].is_literal());
  CHECK(p[2].source == 2);
  CHECK(p[3].source == 1);  // leftmost: the external offset 0
  CHECK(verify_parse(t.text, p));
  auto bytes = reconstruct(p, t.alphabet);
  CHECK(std::string(bytes.begin(), bytes.end()) == "abbabbabbcabab");
}

TEST_CASE("verify rejects each kind of damage") {
  IngestedText t = ingest("abbabbabbcabab");
  const Parse good = naive_parse(t.text);

  SUBCASE("wrong source") {
    Parse p = good;
    p[3].source = 2;  // s[2..7] = "bbabba" differs from "abbabb"
    Verdict v = verify_parse(t.text, p);
    CHECK_FALSE(v);
    CHECK(v.clause == Clause::Occurrence);
    CHECK(v.factor == 3);
  }
  SUBCASE("lengths past the end") {
    Parse p = good;
    p.back().length = 3;
    Verdict v = verify_parse(t.text, p);
    CHECK_FALSE(v);
    CHECK(v.clause == Clause::Reconstruct);
  }
  SUBCASE("text not covered") {
    Parse p = good;
    p.pop_back();
    CHECK(verify_parse(t.text, p).clause == Clause::Reconstruct);
  }
  SUBCASE("wrong literal") {
    Parse p = good;
    p[4].symbol = 1;
    CHECK(verify_parse(t.text, p).clause == Clause::Reconstruct);
  }
  SUBCASE("shorter than possible") {
    // Splitting abbabb into abb + abb keeps every occurrence valid.
    Parse p(good.begin(), good.begin() + 3);
    p.push_back(Factor::reference(3, 1));
    p.push_back(Factor::reference(3, 1));
    p.insert(p.end(), good.begin() + 4, good.end());
    Verdict v = verify_parse(t.text, p);
    CHECK_FALSE(v);
    CHECK(v.clause == Clause::Maximality);
    CHECK(v.factor == 3);
  }
  SUBCASE("literal for a symbol seen before") {
    Parse p(good.begin(), good.begin() + 2);
    p.push_back(Factor::literal(2));
    p.insert(p.end(), good.begin() + 3, good.end());
    CHECK(verify_parse(t.text, p).clause == Clause::Maximality);
  }
  SUBCASE("source not earlier") {
    Parse p = good;
    p[2].source = 3;
    CHECK(verify_parse(t.text, p).clause == Clause::Occurrence);
  }
}

TEST_CASE("both maximality checks agree with the reference parse") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    unsigned sigma = trial % 2 ? 2 : 4;
    std::string s = trial % 3 ? gen::uniform(rng, 1 + rng() % 120, sigma) : gen::periodic(rng, 1 + rng() % 120, sigma);
    IngestedText t = ingest(s);
    Parse p = naive_parse(t.text);
    REQUIRE(verify_parse_bruteforce(t.text, p));
    REQUIRE(verify_parse_lpf(t.text, p));
    // Any change to one length must be caught by both.
    std::size_t k = rng() % p.size();
    if (p[k].is_literal()) continue;
    Parse q = p;
    q[k].length -= 1;
    if (q[k].length == 0) continue;
    Verdict a = verify_parse_bruteforce(t.text, q), b = verify_parse_lpf(t.text, q);
    CHECK_FALSE(a);
    CHECK_FALSE(b);
    CHECK(a.clause == b.clause);
    CHECK(a.factor == b.factor);
  }
}

TEST_CASE("empty and single-symbol texts") {
  IngestedText e = ingest("");
  CHECK(naive_parse(e.text).empty());
  CHECK(verify_parse(e.text, {}));
  IngestedText one = ingest("x");
  Parse p = naive_parse(one.text);
  REQUIRE(p.size() == 1);
  CHECK(p[0].is_literal());
}
