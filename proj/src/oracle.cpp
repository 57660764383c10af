#include "lzscan/oracle.hpp"

#include <functional>

#include "lzscan/suffix_sort.hpp"

namespace lzscan {

Parse naive_parse(const PackedText& text) {
  const std::vector<Code> s = text.codes();
  const Pos n = static_cast<Pos>(s.size());
  Parse out;
  Pos q = 1;
  while (q < n) {
    Pos best = 0, best_pos = 0;
    for (Pos p = 1; p < q; ++p) {
      Pos l = 0;
      while (q + l < n && s[p + l] == s[q + l]) ++l;
      if (l > best) {
        best = l;
        best_pos = p;
      }
    }
    if (best == 0) {
      out.push_back(Factor::literal(s[q]));
      q += 1;
    } else {
      out.push_back(Factor::reference(best, best_pos));
      q += best;
    }
  }
  return out;
}

namespace {

Verdict fail(Clause c, std::size_t idx, Pos off, std::string msg) {
  return Verdict{false, c, idx, off, std::move(msg)};
}

Verdict verify_with(const PackedText& text, const Parse& parse, const std::function<Pos(Pos)>& lpf_at) {
  const Pos n = text.size();
  Pos q = 1;
  for (std::size_t idx = 0; idx < parse.size(); ++idx) {
    const Factor& f = parse[idx];
    if (f.length == 0) return fail(Clause::Reconstruct, idx, q, "empty factor");
    if (q >= n || f.length > n - q) return fail(Clause::Reconstruct, idx, q, "factor runs past the end of the text");
    if (f.is_literal()) {
      if (f.length != 1) return fail(Clause::Reconstruct, idx, q, "literal with length != 1");
      if (f.symbol != text[q]) return fail(Clause::Reconstruct, idx, q, "literal symbol differs from the text");
      if (lpf_at(q) != 0) return fail(Clause::Maximality, idx, q, "literal symbol occurs earlier");
    } else {
      if (f.source == 0 || f.source >= q) return fail(Clause::Occurrence, idx, q, "source does not precede the factor");
      LcpResult l = text.lcp_compare(f.source, q, f.length);
      if (l.length < f.length)
        return fail(Clause::Occurrence, idx, q + static_cast<Pos>(l.length), "source substring differs");
      if (lpf_at(q) > f.length) return fail(Clause::Maximality, idx, q, "a longer earlier match exists");
    }
    q += f.length;
  }
  if (q != n) return fail(Clause::Reconstruct, parse.size(), q, "parse ends before the text");
  return {};
}

}  // namespace

Verdict verify_parse_bruteforce(const PackedText& text, const Parse& parse) {
  const Pos n = text.size();
  return verify_with(text, parse, [&](Pos q) {
    Pos best = 0;
    for (Pos p = 1; p < q; ++p) best = std::max<Pos>(best, static_cast<Pos>(text.lcp_compare(p, q, n - q).length));
    return best;
  });
}

Verdict verify_parse_lpf(const PackedText& text, const Parse& parse) {
  const std::vector<Code> s = text.codes();
  const auto lpf = longest_previous_factor(s);
  return verify_with(text, parse, [&](Pos q) { return lpf[q]; });
}

Verdict verify_parse(const PackedText& text, const Parse& parse) {
  if (text.size() <= 4096) return verify_parse_bruteforce(text, parse);
  return verify_parse_lpf(text, parse);
}

}  // namespace lzscan
