#pragma once

#include <span>
#include <vector>

#include "lzscan/aux_alloc.hpp"
#include "lzscan/text.hpp"

namespace lzscan {

// Index over the reversed prefixes of a window string x, where x[0] is a
// sentinel strictly smaller than every other symbol and d = |x| - 1.
// Rows are the prefixes x[0..i] read right to left, in lexicographic order.
struct BwtPsi {
  Pos d = 0;
  aux_vector<Pos> sa;       // sa[k] = i such that row k is the reversal of x[0..i]
  aux_vector<Pos> sa_rank;  // inverse of sa
  aux_vector<Code> bwt;     // x[sa[k]+1], or x[0] when sa[k] = d
  aux_vector<Pos> psi;      // sa_rank[sa[k]+1], or 0 when sa[k] = d

  std::size_t memory_bytes() const;
  // Frees sa and sa_rank once later stages no longer need them.
  void release_sa();
};

BwtPsi build_bwt_psi(std::span<const Code> x);

// rlcp[k] = min(cap, lcp of rows k and k+1), k in [0, d).
struct RlcpArray {
  aux_vector<Pos> values;
  Pos cap = 0;
};

RlcpArray rlcp_of(const BwtPsi& idx, std::span<const Code> x, Pos cap);
// min over rlcp[i..j-1] for i < j: the capped lcp of rows i and j.
Pos rlcp_range(const RlcpArray& a, Pos i, Pos j);

}  // namespace lzscan
