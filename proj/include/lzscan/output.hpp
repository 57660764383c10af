#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lzscan/text.hpp"

namespace lzscan {

enum class Format { Text, Jsonl, Binary };

std::optional<Format> format_from_name(const std::string& name);

// Factor as seen by users: 0-based offsets into the input bytes.
struct OutputFactor {
  std::uint64_t length = 0;
  std::optional<std::uint64_t> pos;  // earlier occurrence
  std::uint8_t literal = 0;          // byte value when pos is empty

  friend bool operator==(const OutputFactor&, const OutputFactor&) = default;
};

OutputFactor to_output(const Factor& f, const Alphabet& alphabet);

class FactorWriter {
 public:
  FactorWriter(std::ostream& out, Format fmt);
  void write(const OutputFactor& f);
  void finish() { out_.flush(); }

 private:
  std::ostream& out_;
  Format fmt_;
};

inline constexpr char kBinaryMagic[] = "LZSCAN1\n";

// Reads the binary format back; throws std::runtime_error on malformed input.
std::vector<OutputFactor> decode_binary(std::span<const std::uint8_t> bytes);
// Rebuilds the input bytes from external factors.
std::vector<std::uint8_t> expand(const std::vector<OutputFactor>& factors);

}  // namespace lzscan
