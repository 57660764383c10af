#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/text.hpp"

namespace lzscan {

// Suffix array by prefix doubling with radix passes, O(n log n) worst case.
// A suffix that is a proper prefix of another sorts first.
aux_vector<Pos> suffix_array(std::span<const Code> s);

// lcp[k] = lcp(suffix sa[k-1], suffix sa[k]) for k >= 1, lcp[0] = 0.
aux_vector<Pos> lcp_array(std::span<const Code> s, std::span<const Pos> sa);

// lpf[i] = length of the longest prefix of s[i..] that also starts at some j < i.
aux_vector<Pos> longest_previous_factor(std::span<const Code> s);

}  // namespace lzscan
