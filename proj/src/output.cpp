#include "lzscan/output.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace lzscan {

std::optional<Format> format_from_name(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "jsonl") return Format::Jsonl;
  if (name == "binary") return Format::Binary;
  return std::nullopt;
}

OutputFactor to_output(const Factor& f, const Alphabet& alphabet) {
  OutputFactor o;
  o.length = f.length;
  if (f.is_literal()) o.literal = alphabet.byte_of.at(f.symbol);
  else o.pos = static_cast<std::uint64_t>(f.source) - 1;
  return o;
}

FactorWriter::FactorWriter(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {
  if (fmt_ == Format::Binary) out_.write(kBinaryMagic, sizeof(kBinaryMagic) - 1);
}

namespace {

void put_leb128(std::ostream& out, std::uint64_t v) {
  do {
    std::uint8_t byte = v & 0x7F;
    v >>= 7;
    if (v) byte |= 0x80;
    out.put(static_cast<char>(byte));
  } while (v);
}

std::string quoted_byte(std::uint8_t b) {
  if (b >= 0x20 && b < 0x7F && b != '\'' && b != '\\') return std::string("'") + static_cast<char>(b) + "'";
  char buf[8];
  std::snprintf(buf, sizeof buf, "'\\x%02x'", b);
  return buf;
}

}  // namespace

void FactorWriter::write(const OutputFactor& f) {
  switch (fmt_) {
    case Format::Text:
      if (f.pos) out_ << f.length << " @" << *f.pos << '\n';
      else out_ << "lit " << quoted_byte(f.literal) << '\n';
      break;
    case Format::Jsonl:
      if (f.pos) out_ << "{\"len\":" << f.length << ",\"pos\":" << *f.pos << "}\n";
      else out_ << "{\"len\":" << f.length << ",\"lit\":" << unsigned{f.literal} << "}\n";
      break;
    case Format::Binary:
      put_leb128(out_, f.length);
      if (f.pos) {
        out_.put(0x01);
        put_leb128(out_, *f.pos);
      } else {
        out_.put(0x00);
        out_.put(static_cast<char>(f.literal));
      }
      break;
  }
}

std::vector<OutputFactor> decode_binary(std::span<const std::uint8_t> bytes) {
  const std::size_t magic = sizeof(kBinaryMagic) - 1;
  if (bytes.size() < magic || !std::equal(bytes.begin(), bytes.begin() + magic, kBinaryMagic))
    throw std::runtime_error("missing binary header");
  std::size_t i = magic;
  auto leb = [&]() {
    std::uint64_t v = 0;
    for (unsigned shift = 0;; shift += 7) {
      if (i >= bytes.size() || shift > 63) throw std::runtime_error("truncated LEB128 value");
      std::uint8_t b = bytes[i++];
      v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
    }
  };
  std::vector<OutputFactor> out;
  while (i < bytes.size()) {
    OutputFactor f;
    f.length = leb();
    if (i >= bytes.size()) throw std::runtime_error("missing factor tag");
    std::uint8_t tag = bytes[i++];
    if (tag == 0x00) {
      if (i >= bytes.size()) throw std::runtime_error("missing literal byte");
      f.literal = bytes[i++];
    } else if (tag == 0x01) {
      f.pos = leb();
    } else {
      throw std::runtime_error("unknown factor tag");
    }
    out.push_back(f);
  }
  return out;
}

std::vector<std::uint8_t> expand(const std::vector<OutputFactor>& factors) {
  std::vector<std::uint8_t> out;
  for (const OutputFactor& f : factors) {
    if (!f.pos) {
      out.push_back(f.literal);
      continue;
    }
    if (*f.pos >= out.size()) throw std::runtime_error("reference points past decoded data");
    for (std::uint64_t k = 0; k < f.length; ++k) out.push_back(out[*f.pos + k]);
  }
  return out;
}

}  // namespace lzscan
