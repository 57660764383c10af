#include "lzscan/driver.hpp"

#include <chrono>
#include <cmath>
#include <memory>

#include "lzscan/long_tier.hpp"
#include "lzscan/medium_tier.hpp"
#include "lzscan/oracle.hpp"
#include "lzscan/short_tier.hpp"

namespace lzscan {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

void ParseConfig::validate() const {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
#ifdef LZSCAN_RELEASE_MODE
  if (tau_override || block_override) throw std::invalid_argument("tier overrides are disabled in release mode");
#endif
  if (tau_override && *tau_override < 2) throw std::invalid_argument("tau override must be at least 2");
  if (block_override && *block_override < 1) throw std::invalid_argument("block override must be at least 1");
}

double parse_epsilon(const std::string& s) {
  std::size_t used = 0;
  auto slash = s.find('/');
  double v;
  try {
    if (slash == std::string::npos) {
      v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      double num = std::stod(a, &used);
      if (used != a.size()) throw std::invalid_argument(s);
      double den = std::stod(b, &used);
      if (used != b.size() || den == 0) throw std::invalid_argument(s);
      v = num / den;
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational number: " + s);
  }
  if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("epsilon must be positive: " + s);
  return v;
}

TierParams TierParams::derive(const PackedText& text, const ParseConfig& cfg) {
  TierParams t;
  t.r = text.radix();
  t.short_depth = (t.r + 1) / 2;
  const double n = std::max<double>(2, text.size());
  const double log_n = std::max(1.0, std::log2(n));
  const double loglog_n = std::max(1.0, std::log2(log_n));
  const double log_sigma = std::log2(static_cast<double>(text.sigma()));

  double tau = std::ceil(log_n / cfg.epsilon);
  tau = std::clamp(tau, 2.0, 65535.0);
  t.tau = cfg.tau_override ? *cfg.tau_override : static_cast<Pos>(tau);
  t.tau2 = t.tau * t.tau;

  double b = std::ceil(cfg.epsilon * n / (log_sigma + loglog_n));
  b = std::clamp(b, 1.0, n);
  t.block = cfg.block_override ? *cfg.block_override : static_cast<Pos>(b);
  return t;
}

TierStats parse(const PackedText& text, const ParseConfig& cfg, const FactorSink& sink) {
  cfg.validate();
  const auto t_start = Clock::now();
  // Working memory is whatever AuxAllocator holds above this point.
  AuxUsage& usage = aux_usage();
  const std::size_t base = usage.live, outer_peak = usage.peak;
  usage.peak = base;
  TierStats st;
  st.params = TierParams::derive(text, cfg);
  const Pos n = text.size();

  ShortTables shorts(text, cfg.short_table_budget);
  st.params.short_depth = shorts.depth();
  const unsigned h = shorts.depth();
  const Pos tau = st.params.tau, tau2 = st.params.tau2;

  std::unique_ptr<SampleIndex> long_index;
  Parse kept;
  std::size_t factors = 0;

  auto emit = [&](Pos start, const Factor& f, Tier tier) {
    auto& c = st.tiers[static_cast<int>(tier)];
    ++c.factors;
    c.symbols += f.length;
    if (f.is_literal()) ++st.literals;
    ++factors;
    if (cfg.verify) kept.push_back(f);
    try {
      if (sink) sink(start, f, tier);
    } catch (const std::exception& e) {
      throw ParseError(start, std::string("factor sink failed: ") + e.what());
    }
  };

  double long_seconds = 0;
  const LongTierFn long_tier = [&](Pos start) -> LongMatch {
    const auto t0 = Clock::now();
    if (!long_index) long_index = std::make_unique<SampleIndex>(text, tau2);
    SampleIndex::Result r = long_index->extend_long(start);
    long_seconds += seconds_since(t0);
    return {r.length, r.source};
  };

  Pos p = 1;
  while (p < n) {
    auto t0 = Clock::now();
    shorts.advance(p);
    ShortOutcome o = shorts.classify(p);
    if (o.kind == ShortOutcome::Kind::LiteralNew) {
      st.seconds_short += seconds_since(t0);
      emit(p, Factor::literal(text[p]), Tier::Short);
      p += 1;
      continue;
    }
    if (o.kind == ShortOutcome::Kind::Short) {
      st.seconds_short += seconds_since(t0);
      emit(p, Factor::reference(o.length, o.source), Tier::Short);
      p += o.length;
      continue;
    }
    st.seconds_short += seconds_since(t0);

    t0 = Clock::now();
    const double long_before = long_seconds;
    ++st.blocks;
    aux_vector<BlockFactor> block;
    {
      MediumWindow win(text, p, st.params.block, tau);
      BlockParse bp = win.fill_lz(long_tier);
      block = std::move(bp.factors);
      report_occurrences(text, win.params(), block, h, tau2);
    }
    for (BlockFactor& f : block) {
      if (f.origin == BlockFactor::Origin::Medium && f.length < h) {
        shorts.advance(f.start);
        f.source = shorts.lookup(f.length, f.start);
        if (f.source == kNoPos || f.source >= f.start) throw std::logic_error("short lookup inside a block failed");
      }
    }
    st.seconds_medium += seconds_since(t0) - (long_seconds - long_before);
    for (const BlockFactor& f : block) {
      if (f.origin == BlockFactor::Origin::Literal) emit(f.start, Factor::literal(text[f.start]), Tier::Medium);
      else emit(f.start, Factor::reference(f.length, f.source),
                f.origin == BlockFactor::Origin::Long ? Tier::Long : Tier::Medium);
    }
    p = block.back().start + block.back().length;
  }
  st.seconds_long = long_seconds;
  st.peak_aux_bytes = usage.peak - base;
  usage.peak = std::max(outer_peak, usage.peak);

  if (cfg.verify) {
    Verdict v = verify_parse(text, kept);
    if (!v) throw ParseError(v.offset, "verification failed, clause (" + std::string(1, static_cast<char>(v.clause)) +
                                           "): " + v.message);
    st.verified = true;
  }
  st.seconds_total = seconds_since(t_start);
  return st;
}

Parse parse_all(const PackedText& text, const ParseConfig& cfg, TierStats* stats) {
  Parse out;
  TierStats st = parse(text, cfg, [&](Pos, const Factor& f, Tier) { out.push_back(f); });
  if (stats) *stats = st;
  return out;
}

}  // namespace lzscan
