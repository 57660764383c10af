#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "lzscan/text.hpp"

namespace lzscan {

struct ParseConfig {
  double epsilon = 0.5;
  // Test hooks; rejected when the library is built in release mode.
  std::optional<Pos> tau_override;
  std::optional<Pos> block_override;
  bool tier_stats = false;  // collect phase timings
  bool verify = false;      // run verify_parse on the finished parse
  std::size_t short_table_budget = std::size_t{1} << 22;

  void validate() const;
};

// Parses "0.25", "1/4" and similar.
double parse_epsilon(const std::string& s);

struct TierParams {
  unsigned r = 1;
  unsigned short_depth = 1;
  Pos tau = 2;
  Pos tau2 = 4;
  Pos block = 1;

  static TierParams derive(const PackedText& text, const ParseConfig& cfg);
};

enum class Tier : std::uint8_t { Short = 0, Medium = 1, Long = 2 };

struct TierStats {
  struct Count {
    std::size_t factors = 0;
    std::uint64_t symbols = 0;
  };
  std::array<Count, 3> tiers{};
  std::size_t literals = 0;
  std::size_t blocks = 0;
  std::size_t peak_aux_bytes = 0;
  double seconds_short = 0, seconds_medium = 0, seconds_long = 0, seconds_total = 0;
  TierParams params;
  bool verified = false;
};

// Receives each factor with its start position (sentinel-inclusive) and the
// tier that produced it. Exceptions thrown by the sink abort the parse.
using FactorSink = std::function<void(Pos start, const Factor& f, Tier tier)>;

class ParseError : public std::runtime_error {
 public:
  ParseError(Pos position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " + what), position_(position) {}
  Pos position() const { return position_; }

 private:
  Pos position_;
};

TierStats parse(const PackedText& text, const ParseConfig& cfg, const FactorSink& sink);
// Collects the whole parse.
Parse parse_all(const PackedText& text, const ParseConfig& cfg = {}, TierStats* stats = nullptr);

}  // namespace lzscan
