#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lzscan/aux_alloc.hpp"

namespace lzscan {

// Symbol codes. Code 0 is reserved for the sentinel.
using Code = std::uint16_t;
// Positions in the sentinel-inclusive text.
using Pos = std::uint32_t;
inline constexpr Pos kNoPos = ~Pos{0};

struct Alphabet {
  std::array<Code, 256> code_of{};        // 0 when the byte does not occur
  std::vector<std::uint8_t> byte_of{0};   // byte_of[c] for c >= 1
  std::uint32_t sigma = 2;                // power of two >= distinct + 1

  std::uint32_t distinct() const { return static_cast<std::uint32_t>(byte_of.size() - 1); }
};

struct LcpResult {
  std::size_t length = 0;
  int order = 0;  // sign of (first symbol of a) - (first symbol of b) after the common prefix
};

// Bit-packed text over codes 0..sigma-1, most significant digit first.
// Reads outside [0, n) return the sentinel code 0.
class PackedText {
 public:
  PackedText() = default;
  PackedText(std::span<const Code> codes, std::uint32_t sigma);

  Pos size() const { return n_; }
  std::uint32_t sigma() const { return sigma_; }
  unsigned bits() const { return bits_; }
  // floor(log n / log sigma), at least 1.
  unsigned radix() const { return r_; }
  // Symbols that fit in one 64-bit word.
  unsigned word_symbols() const { return 64 / bits_; }

  Code at(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(n_)) return 0;
    std::uint64_t bit = static_cast<std::uint64_t>(i) * bits_;
    std::uint64_t w = words_[bit >> 6];
    unsigned off = bit & 63;
    std::uint64_t v = (w << off) >> (64 - bits_);
    if (off + bits_ > 64) v |= words_[(bit >> 6) + 1] >> (128 - off - bits_);
    return static_cast<Code>(v);
  }
  Code operator[](std::int64_t i) const { return at(i); }

  // Base-sigma value of s[i..i+len), earliest symbol most significant.
  // Requires len <= radix().
  std::uint64_t pack(std::int64_t i, unsigned len) const;
  // Same as pack with the looser bound len <= word_symbols().
  std::uint64_t pack_word(std::int64_t i, unsigned len) const;

  // Longest common prefix of s[i..] and s[j..], capped at maxlen.
  LcpResult lcp_compare(std::int64_t i, std::int64_t j, std::size_t maxlen) const;
  // Same for s[i], s[i-1], ... against s[j], s[j-1], ...
  LcpResult lcp_compare_reverse(std::int64_t i, std::int64_t j, std::size_t maxlen) const;

  std::vector<Code> codes() const;
  std::size_t memory_bytes() const { return words_.capacity() * sizeof(std::uint64_t); }

 private:
  aux_vector<std::uint64_t> words_;
  Pos n_ = 0;
  std::uint32_t sigma_ = 2;
  unsigned bits_ = 1;
  unsigned r_ = 1;
};

struct IngestedText {
  Alphabet alphabet;
  PackedText text;  // text[0] is the sentinel, text[i] encodes byte i-1
};

// Assigns codes 1..k to distinct bytes in order of first occurrence.
IngestedText ingest(std::span<const std::uint8_t> bytes);
IngestedText ingest(std::string_view bytes);

// Builds a text from codes that already start with the sentinel.
// Used by tests that work directly on code strings.
PackedText text_from_codes(std::span<const Code> codes_with_sentinel);

struct Factor {
  Pos length = 0;
  Pos source = kNoPos;  // earlier start, sentinel-inclusive; kNoPos for literals
  Code symbol = 0;      // literal code

  bool is_literal() const { return source == kNoPos; }
  static Factor literal(Code c) { return Factor{1, kNoPos, c}; }
  static Factor reference(Pos len, Pos src) { return Factor{len, src, 0}; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

using Parse = std::vector<Factor>;

// LZ77-style decoding of a parse back to bytes.
std::vector<std::uint8_t> reconstruct(const Parse& parse, const Alphabet& alphabet);

std::uint32_t sigma_for(std::uint32_t distinct);

}  // namespace lzscan
