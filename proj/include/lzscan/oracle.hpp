#pragma once

#include <cstddef>
#include <string>

#include "lzscan/text.hpp"

namespace lzscan {

// Quadratic reference parse: longest earlier match, leftmost on ties.
Parse naive_parse(const PackedText& text);

enum class Clause : char {
  None = 0,
  Reconstruct = 'a',  // lengths cover the text, literals match
  Occurrence = 'b',   // references point to an equal earlier substring
  Maximality = 'c',   // no reference could be one symbol longer, literals are new
};

struct Verdict {
  bool ok = true;
  Clause clause = Clause::None;
  std::size_t factor = 0;  // index of the offending factor
  Pos offset = 0;          // text position (sentinel-inclusive) where the check failed
  std::string message;

  explicit operator bool() const { return ok; }
};

// Checks the three clauses in factor order. Maximality uses a direct scan on
// short texts and a longest-previous-factor array otherwise.
Verdict verify_parse(const PackedText& text, const Parse& parse);

// Exposed so tests can cross-check the two maximality paths.
Verdict verify_parse_bruteforce(const PackedText& text, const Parse& parse);
Verdict verify_parse_lpf(const PackedText& text, const Parse& parse);

}  // namespace lzscan
