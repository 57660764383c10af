#include "lzscan/short_tier.hpp"

#include <stdexcept>

namespace lzscan {

namespace {

std::size_t table_entries(std::uint32_t sigma, unsigned h) {
  std::size_t total = 0, size = 1;
  for (unsigned i = 1; i <= h; ++i) {
    size *= sigma;
    total += size;
  }
  return total;
}

}  // namespace

ShortTables::ShortTables(const PackedText& text, std::size_t entry_budget) : text_(&text) {
  depth_ = (text.radix() + 1) / 2;
  while (depth_ > 1 && table_entries(text.sigma(), depth_) > entry_budget) --depth_;
  std::size_t size = 1;
  tables_.resize(depth_);
  for (unsigned i = 0; i < depth_; ++i) {
    size *= text.sigma();
    tables_[i].assign(size, kNoPos);
  }
}

void ShortTables::advance(Pos upto) {
  if (upto > text_->size()) throw std::out_of_range("advance past end of text");
  const unsigned h = depth_, bits = text_->bits();
  aux_vector<Pos>& top = tables_[h - 1];
  for (; cursor_ < upto; ++cursor_) {
    std::uint64_t x = text_->pack_word(cursor_, h);
    if (top[x] != kNoPos) continue;
    // Absent at depth h means every shorter prefix is either absent or
    // already recorded earlier; only fill the absent ones.
    for (unsigned i = 1; i <= h; ++i) {
      Pos& slot = tables_[i - 1][x >> (bits * (h - i))];
      if (slot == kNoPos) slot = cursor_;
    }
  }
}

ShortOutcome ShortTables::classify(Pos p) const {
  if (p != cursor_) throw std::logic_error("classify requires advance(p) first");
  const unsigned h = depth_, bits = text_->bits();
  std::uint64_t x = text_->pack_word(p, h);
  auto entry = [&](unsigned i) { return tables_[i - 1][x >> (bits * (h - i))]; };
  if (entry(1) == kNoPos) return {ShortOutcome::Kind::LiteralNew, 1, kNoPos};
  if (entry(h) != kNoPos) return {ShortOutcome::Kind::AtLeastHalfR, 0, kNoPos};
  unsigned q = 2;
  while (entry(q) != kNoPos) ++q;
  return {ShortOutcome::Kind::Short, q - 1, entry(q - 1)};
}

Pos ShortTables::lookup(unsigned len, Pos at) const {
  if (len == 0 || len > depth_) throw std::invalid_argument("lookup length out of range");
  return tables_[len - 1][text_->pack_word(at, len)];
}

std::size_t ShortTables::memory_bytes() const {
  std::size_t b = 0;
  for (const auto& t : tables_) b += t.capacity() * sizeof(Pos);
  return b;
}

}  // namespace lzscan
