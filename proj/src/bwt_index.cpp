#include "lzscan/bwt_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "lzscan/suffix_sort.hpp"

namespace lzscan {

namespace {

aux_vector<Code> reversed(std::span<const Code> x) { return aux_vector<Code>(x.rbegin(), x.rend()); }

}  // namespace

BwtPsi build_bwt_psi(std::span<const Code> x) {
  if (x.empty()) throw std::invalid_argument("empty window");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] <= x[0]) throw std::invalid_argument("window sentinel must be strictly smallest");

  BwtPsi r;
  r.d = static_cast<Pos>(x.size() - 1);
  const Pos d = r.d;
  // The reversal of x[0..i] is the suffix of reverse(x) starting at d - i.
  aux_vector<Code> y = reversed(x);
  r.sa = suffix_array(y);
  for (Pos& v : r.sa) v = d - v;
  r.sa_rank.resize(d + 1);
  for (Pos k = 0; k <= d; ++k) r.sa_rank[r.sa[k]] = k;
  r.bwt.resize(d + 1);
  r.psi.resize(d + 1);
  for (Pos k = 0; k <= d; ++k) {
    Pos i = r.sa[k];
    r.bwt[k] = i == d ? x[0] : x[i + 1];
    r.psi[k] = i == d ? 0 : r.sa_rank[i + 1];
  }
  return r;
}

std::size_t BwtPsi::memory_bytes() const {
  return (sa.capacity() + sa_rank.capacity() + psi.capacity()) * sizeof(Pos) + bwt.capacity() * sizeof(Code);
}

void BwtPsi::release_sa() {
  aux_vector<Pos>().swap(sa);
  aux_vector<Pos>().swap(sa_rank);
}

RlcpArray rlcp_of(const BwtPsi& idx, std::span<const Code> x, Pos cap) {
  if (idx.sa.size() != x.size()) throw std::invalid_argument("index does not match window");
  const Pos d = idx.d;
  aux_vector<Code> y = reversed(x);
  aux_vector<Pos> sa_y(d + 1);
  for (Pos k = 0; k <= d; ++k) sa_y[k] = d - idx.sa[k];
  aux_vector<Pos> lcp = lcp_array(y, sa_y);
  RlcpArray r;
  r.cap = cap;
  r.values.resize(d);
  for (Pos k = 0; k < d; ++k) r.values[k] = std::min(cap, lcp[k + 1]);
  return r;
}

Pos rlcp_range(const RlcpArray& a, Pos i, Pos j) {
  if (i >= j || j > a.values.size()) throw std::out_of_range("rlcp_range needs i < j <= d");
  return *std::min_element(a.values.begin() + i, a.values.begin() + j);
}

}  // namespace lzscan
