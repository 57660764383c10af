#include "lzscan/text.hpp"

#include <bit>
#include <stdexcept>

namespace lzscan {

std::uint32_t sigma_for(std::uint32_t distinct) {
  return std::bit_ceil(std::max<std::uint32_t>(2, distinct + 1));
}

PackedText::PackedText(std::span<const Code> codes, std::uint32_t sigma)
    : n_(static_cast<Pos>(codes.size())), sigma_(sigma) {
  if (sigma < 2 || !std::has_single_bit(sigma)) throw std::invalid_argument("sigma must be a power of two >= 2");
  if (codes.size() >= kNoPos) throw std::length_error("text too long");
  bits_ = static_cast<unsigned>(std::countr_zero(sigma));
  // floor(log2 n / log2 sigma) computed on integers to avoid rounding.
  unsigned logn = n_ > 1 ? static_cast<unsigned>(std::bit_width(n_) - 1) : 0;
  r_ = std::max(1u, logn / bits_);
  r_ = std::min(r_, word_symbols());

  std::size_t total_bits = (static_cast<std::size_t>(n_) + 64) * bits_;
  words_.assign(total_bits / 64 + 2, 0);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    Code c = codes[i];
    if (c >= sigma) throw std::invalid_argument("code out of range");
    std::size_t bit = i * bits_;
    unsigned off = bit & 63;
    std::size_t w = bit >> 6;
    if (off + bits_ <= 64) {
      words_[w] |= static_cast<std::uint64_t>(c) << (64 - off - bits_);
    } else {
      unsigned rem = off + bits_ - 64;
      words_[w] |= static_cast<std::uint64_t>(c) >> rem;
      words_[w + 1] |= static_cast<std::uint64_t>(c) << (64 - rem);
    }
  }
}

std::uint64_t PackedText::pack(std::int64_t i, unsigned len) const {
  if (len > r_) throw std::invalid_argument("pack length exceeds radix");
  return pack_word(i, len);
}

std::uint64_t PackedText::pack_word(std::int64_t i, unsigned len) const {
  if (len == 0) return 0;
  if (i >= static_cast<std::int64_t>(n_)) return 0;
  unsigned total = len * bits_;
  if (i >= 0 && i + len <= static_cast<std::int64_t>(n_) + 64) {
    std::uint64_t bit = static_cast<std::uint64_t>(i) * bits_;
    std::size_t w = bit >> 6;
    unsigned off = bit & 63;
    std::uint64_t hi = words_[w] << off;
    if (off != 0) hi |= words_[w + 1] >> (64 - off);
    return total == 64 ? hi : hi >> (64 - total);
  }
  std::uint64_t v = 0;
  for (unsigned k = 0; k < len; ++k) v = (v << bits_) | at(i + k);
  return v;
}

LcpResult PackedText::lcp_compare(std::int64_t i, std::int64_t j, std::size_t maxlen) const {
  const unsigned w = word_symbols();
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  std::size_t k = 0;
  while (k < maxlen) {
    unsigned m = static_cast<unsigned>(std::min<std::size_t>(w, maxlen - k));
    std::uint64_t a = pack_word(i + static_cast<std::int64_t>(k), m);
    std::uint64_t b = pack_word(j + static_cast<std::int64_t>(k), m);
    if (a != b) {
      unsigned top = 63 - static_cast<unsigned>(std::countl_zero(a ^ b));
      unsigned digit = top / bits_;  // counted from the least significant digit
      std::uint64_t ca = (a >> (digit * bits_)) & mask;
      std::uint64_t cb = (b >> (digit * bits_)) & mask;
      return {k + (m - 1 - digit), ca < cb ? -1 : 1};
    }
    k += m;
  }
  return {maxlen, 0};
}

LcpResult PackedText::lcp_compare_reverse(std::int64_t i, std::int64_t j, std::size_t maxlen) const {
  const unsigned w = word_symbols();
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  std::size_t k = 0;
  while (k < maxlen) {
    unsigned m = static_cast<unsigned>(std::min<std::size_t>(w, maxlen - k));
    std::int64_t off = static_cast<std::int64_t>(k) + m - 1;
    std::uint64_t a = pack_word(i - off, m);
    std::uint64_t b = pack_word(j - off, m);
    if (a != b) {
      unsigned digit = static_cast<unsigned>(std::countr_zero(a ^ b)) / bits_;
      std::uint64_t ca = (a >> (digit * bits_)) & mask;
      std::uint64_t cb = (b >> (digit * bits_)) & mask;
      return {k + digit, ca < cb ? -1 : 1};
    }
    k += m;
  }
  return {maxlen, 0};
}

std::vector<Code> PackedText::codes() const {
  std::vector<Code> out(n_);
  for (Pos i = 0; i < n_; ++i) out[i] = at(i);
  return out;
}

IngestedText ingest(std::span<const std::uint8_t> bytes) {
  IngestedText r;
  std::vector<Code> codes;
  codes.reserve(bytes.size() + 1);
  codes.push_back(0);
  for (std::uint8_t b : bytes) {
    Code& c = r.alphabet.code_of[b];
    if (c == 0) {
      r.alphabet.byte_of.push_back(b);
      c = static_cast<Code>(r.alphabet.byte_of.size() - 1);
    }
    codes.push_back(c);
  }
  r.alphabet.sigma = sigma_for(r.alphabet.distinct());
  r.text = PackedText(codes, r.alphabet.sigma);
  return r;
}

IngestedText ingest(std::string_view bytes) {
  return ingest(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

PackedText text_from_codes(std::span<const Code> codes) {
  if (codes.empty() || codes[0] != 0) throw std::invalid_argument("code string must start with the sentinel");
  Code hi = 0;
  for (std::size_t i = 1; i < codes.size(); ++i) {
    if (codes[i] == 0) throw std::invalid_argument("sentinel code inside text");
    hi = std::max(hi, codes[i]);
  }
  return PackedText(codes, sigma_for(hi));
}

std::vector<std::uint8_t> reconstruct(const Parse& parse, const Alphabet& alphabet) {
  // out[k] holds text position k+1.
  std::vector<std::uint8_t> out;
  for (const Factor& f : parse) {
    if (f.is_literal()) {
      if (f.symbol == 0 || f.symbol >= alphabet.byte_of.size()) throw std::invalid_argument("literal code out of range");
      out.push_back(alphabet.byte_of[f.symbol]);
      continue;
    }
    std::size_t start = out.size() + 1;
    if (f.source == 0 || f.source >= start) throw std::invalid_argument("reference does not point backwards");
    for (Pos k = 0; k < f.length; ++k) out.push_back(out[f.source - 1 + k]);
  }
  return out;
}

}  // namespace lzscan
