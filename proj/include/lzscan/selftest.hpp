#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lzscan/driver.hpp"

namespace lzscan {

// Parses the input, compares lengths and literals with naive_parse and runs
// verify_parse. Returns a description of the first problem, if any.
std::optional<std::string> check_against_oracle(std::string_view input, const ParseConfig& cfg = {});

struct SelftestReport {
  std::size_t strings = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;
};

// Every string over {a,b} of length 1..max_binary and over {a,b,c} of length
// 1..max_ternary.
SelftestReport exhaustive_check(unsigned max_binary = 12, unsigned max_ternary = 9, const ParseConfig& cfg = {});

}  // namespace lzscan
