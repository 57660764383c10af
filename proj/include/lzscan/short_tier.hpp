#pragma once

#include <cstddef>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/text.hpp"

namespace lzscan {

struct ShortOutcome {
  enum class Kind { LiteralNew, Short, AtLeastHalfR };
  Kind kind = Kind::LiteralNew;
  Pos length = 0;
  Pos source = kNoPos;
};

// Direct-address tables H_1..H_h over packed strings of length <= h, where
// h = ceil(r/2) unless the tables would exceed the entry budget.
class ShortTables {
 public:
  static constexpr std::size_t kDefaultBudget = std::size_t{1} << 22;

  explicit ShortTables(const PackedText& text, std::size_t entry_budget = kDefaultBudget);

  unsigned depth() const { return depth_; }
  Pos cursor() const { return cursor_; }

  // Records first occurrences of every string starting below upto.
  void advance(Pos upto);
  // Valid once advance(p) has run.
  ShortOutcome classify(Pos p) const;
  // Earliest j < cursor() with s[j..j+len) == s[at..at+len), or kNoPos. len <= depth().
  Pos lookup(unsigned len, Pos at) const;

  std::size_t memory_bytes() const;

 private:
  const PackedText* text_;
  unsigned depth_ = 1;
  aux_vector<aux_vector<Pos>> tables_;  // tables_[i-1] is H_i
  Pos cursor_ = 0;
};

}  // namespace lzscan
