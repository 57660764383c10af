#include "lzscan/selftest.hpp"

#include <chrono>
#include <sstream>

#include "lzscan/oracle.hpp"

namespace lzscan {

std::optional<std::string> check_against_oracle(std::string_view input, const ParseConfig& cfg) {
  IngestedText in = ingest(input);
  Parse got;
  try {
    got = parse_all(in.text, cfg);
  } catch (const std::exception& e) {
    return "parse threw: " + std::string(e.what()) + " on \"" + std::string(input) + "\"";
  }
  Parse want = naive_parse(in.text);
  bool same = got.size() == want.size();
  for (std::size_t i = 0; same && i < got.size(); ++i)
    same = got[i].length == want[i].length && got[i].is_literal() == want[i].is_literal();
  if (!same) {
    std::ostringstream msg;
    msg << "lengths differ from the oracle on \"" << input << "\": got";
    for (const Factor& f : got) msg << ' ' << f.length;
    msg << ", want";
    for (const Factor& f : want) msg << ' ' << f.length;
    return msg.str();
  }
  Verdict v = verify_parse(in.text, got);
  if (!v) {
    std::ostringstream msg;
    msg << "verify_parse rejects clause (" << static_cast<char>(v.clause) << ") at factor " << v.factor << " on \""
        << input << "\": " << v.message;
    return msg.str();
  }
  return std::nullopt;
}

SelftestReport exhaustive_check(unsigned max_binary, unsigned max_ternary, const ParseConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SelftestReport rep;
  auto run = [&](unsigned radix, unsigned max_len) {
    std::string s;
    for (unsigned len = 1; len <= max_len; ++len) {
      s.assign(len, 'a');
      for (;;) {
        ++rep.strings;
        if (auto err = check_against_oracle(s, cfg)) {
          if (rep.failures++ == 0) rep.first_failure = *err;
        }
        // Next string in lexicographic order.
        unsigned k = len;
        while (k > 0 && s[k - 1] == static_cast<char>('a' + radix - 1)) s[--k] = 'a';
        if (k == 0) break;
        ++s[k - 1];
      }
    }
  };
  run(2, max_binary);
  run(3, max_ternary);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace lzscan
