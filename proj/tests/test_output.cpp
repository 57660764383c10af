#include <doctest.h>

#include <random>
#include <sstream>

#include "generators.hpp"
#include "lzscan/driver.hpp"
#include "lzscan/output.hpp"

using namespace lzscan;

namespace {

std::vector<OutputFactor> external(const IngestedText& t) {
  std::vector<OutputFactor> out;
  for (const Factor& f : parse_all(t.text)) out.push_back(to_output(f, t.alphabet));
  return out;
}

std::string render(const std::vector<OutputFactor>& fs, Format fmt) {
  std::ostringstream os;
  FactorWriter w(os, fmt);
  for (const auto& f : fs) w.write(f);
  w.finish();
  return os.str();
}

std::vector<std::uint8_t> as_bytes(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("format names") {
  CHECK(format_from_name("text") == Format::Text);
  CHECK(format_from_name("jsonl") == Format::Jsonl);
  CHECK(format_from_name("binary") == Format::Binary);
  CHECK_FALSE(format_from_name("xml"));
}

TEST_CASE("external offsets are zero-based") {
  IngestedText t = ingest("abbabbabbcabab");
  auto fs = external(t);
  REQUIRE(fs.size() == 7);
  CHECK(fs[0] == OutputFactor{1, std::nullopt, 'a'});
  CHECK(fs[3] == OutputFactor{6, 0, 0});
}

TEST_CASE("text and jsonl lines") {
  IngestedText t = ingest("abbabbabbcabab");
  auto fs = external(t);
  CHECK(render(fs, Format::Text) == "lit 'a'\nlit 'b'\n1 @1\n6 @0\nlit 'c'\n2 @0\n2 @0\n");
  std::string j = render(fs, Format::Jsonl);
  CHECK(j.substr(0, j.find('\n')) == "{\"len\":1,\"lit\":97}");
  CHECK(j.find("{\"len\":6,\"pos\":0}") != std::string::npos);
}

TEST_CASE("odd bytes are escaped in text") {
  std::vector<OutputFactor> fs{{1, std::nullopt, 0x00}, {1, std::nullopt, '\''}, {1, std::nullopt, 0xff}};
  CHECK(render(fs, Format::Text) == "lit '\\x00'\nlit '\\x27'\nlit '\\xff'\n");
}

TEST_CASE("binary round trip") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    std::string s = i % 2 ? gen::run_rich(rng, 1 + rng() % 3000, 256) : gen::periodic(rng, 1 + rng() % 3000, 16);
    IngestedText t = ingest(s);
    auto fs = external(t);
    std::string bin = render(fs, Format::Binary);
    auto back = decode_binary(as_bytes(bin));
    CHECK(back == fs);
    auto bytes = expand(back);
    CHECK(std::string(bytes.begin(), bytes.end()) == s);
  }
}

TEST_CASE("binary header and large values") {
  std::vector<OutputFactor> fs{{1, std::nullopt, 7}, {300, 0, 0}, {1ull << 40, 1ull << 35, 0}};
  std::string bin = render(fs, Format::Binary);
  CHECK(bin.substr(0, 8) == "LZSCAN1\n");
  CHECK(decode_binary(as_bytes(bin)) == fs);
}

TEST_CASE("malformed binary") {
  CHECK_THROWS(decode_binary(as_bytes("")));
  CHECK_THROWS(decode_binary(as_bytes("LZSCAN2\n")));
  CHECK_THROWS(decode_binary(as_bytes(std::string("LZSCAN1\n\x81", 9))));
  CHECK_THROWS(decode_binary(as_bytes(std::string("LZSCAN1\n\x01\x02", 10))));
  CHECK_THROWS(decode_binary(as_bytes(std::string("LZSCAN1\n\x01\x00", 10))));
  CHECK(decode_binary(as_bytes("LZSCAN1\n")).empty());
}

TEST_CASE("expand rejects forward references") {
  CHECK_THROWS(expand({{2, 0, 0}}));
  CHECK(expand({{1, std::nullopt, 'x'}, {3, 0, 0}}) == std::vector<std::uint8_t>{'x', 'x', 'x', 'x'});
  CHECK(expand({}).empty());
}
