#include "lzscan/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "lzscan/driver.hpp"
#include "lzscan/oracle.hpp"
#include "lzscan/output.hpp"
#include "lzscan/selftest.hpp"

namespace lzscan {

namespace {

struct ParseOptions {
  std::vector<std::string> files;
  std::string epsilon = "1/2";
  std::string format = "text";
  std::string output;
  bool verify = false;
  bool oracle = false;
  bool stats = false;
  bool inject_fault = false;
  Pos tau = 0;
  Pos block = 0;
};

struct FileResult {
  int code = 0;
  std::string out;  // buffered output when writing to the console
  std::string err;
};

nlohmann::json stats_json(const std::string& file, Pos n, const TierStats& st) {
  const char* names[] = {"short", "medium", "long"};
  nlohmann::json tiers;
  std::size_t total = 0;
  for (int i = 0; i < 3; ++i) {
    tiers[names[i]] = {{"factors", st.tiers[i].factors}, {"symbols", st.tiers[i].symbols}};
    total += st.tiers[i].factors;
  }
  const double symbols = std::max<double>(1, n > 0 ? n - 1 : 0);
  return {{"file", file},
          {"symbols", n > 0 ? n - 1 : 0},
          {"factors", total},
          {"literals", st.literals},
          {"blocks", st.blocks},
          {"tiers", tiers},
          {"peak_aux_bytes", st.peak_aux_bytes},
          {"aux_bytes_per_symbol", static_cast<double>(st.peak_aux_bytes) / symbols},
          {"params",
           {{"r", st.params.r},
            {"short_depth", st.params.short_depth},
            {"tau", st.params.tau},
            {"tau2", st.params.tau2},
            {"block", st.params.block}}},
          {"seconds",
           {{"short", st.seconds_short},
            {"medium", st.seconds_medium},
            {"long", st.seconds_long},
            {"total", st.seconds_total}}}};
}

// Corrupts one factor so verification has something to reject.
void inject_fault(Parse& parse) {
  for (Factor& f : parse) {
    if (!f.is_literal()) {
      f.length += 1;
      return;
    }
  }
  if (!parse.empty()) parse.front().symbol ^= 1;
  else parse.push_back(Factor::literal(1));
}

std::string extension(Format f) {
  switch (f) {
    case Format::Text: return ".txt";
    case Format::Jsonl: return ".jsonl";
    case Format::Binary: return ".bin";
  }
  return "";
}

FileResult run_file(const std::string& path, const ParseOptions& opt, const ParseConfig& cfg, Format fmt,
                    const std::string& out_path) {
  FileResult res;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    res.code = 2;
    res.err = "error: cannot read " + path + "\n";
    return res;
  }
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    res.code = 2;
    res.err = "error: cannot read " + path + "\n";
    return res;
  }

  IngestedText txt = ingest(bytes);
  std::ostringstream buffer;
  std::ofstream file_out;
  std::ostream* sink_stream = &buffer;
  if (!out_path.empty()) {
    file_out.open(out_path, std::ios::binary);
    if (!file_out) {
      res.code = 2;
      res.err = "error: cannot write " + out_path + "\n";
      return res;
    }
    sink_stream = &file_out;
  }

  FactorWriter writer(*sink_stream, fmt);
  Parse kept;
  TierStats st;
  try {
    st = parse(txt.text, cfg, [&](Pos, const Factor& f, Tier) {
      writer.write(to_output(f, txt.alphabet));
      if (opt.verify) kept.push_back(f);
    });
  } catch (const std::exception& e) {
    res.code = 1;
    res.err = "error: " + path + ": " + e.what() + "\n";
    return res;
  }
  writer.finish();
  res.out = buffer.str();

  std::ostringstream err;
  if (opt.verify) {
    if (opt.inject_fault) inject_fault(kept);
    Verdict v = verify_parse(txt.text, kept);
    if (!v) {
      err << "verify: " << path << ": clause (" << static_cast<char>(v.clause) << ") violated at factor " << v.factor
          << ", offset " << (v.offset > 0 ? v.offset - 1 : 0) << ": " << v.message << "\n";
      res.code = 1;
    }
    if (res.code == 0 && opt.oracle && txt.text.size() - 1 <= 100000) {
      Parse want = naive_parse(txt.text);
      bool same = want.size() == kept.size();
      for (std::size_t i = 0; same && i < want.size(); ++i) same = want[i].length == kept[i].length;
      if (!same) {
        err << "verify: " << path << ": factor lengths differ from the reference parse\n";
        res.code = 1;
      }
    }
  }
  if (opt.stats) err << stats_json(path, txt.text.size(), st).dump() << "\n";
  res.err = err.str();
  return res;
}

unsigned thread_cap(std::size_t jobs) {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LZSCAN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) cap = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::min<std::size_t>(cap, std::max<std::size_t>(1, jobs)));
}

int run_parse(const ParseOptions& opt, std::ostream& out, std::ostream& err) {
  ParseConfig cfg;
  try {
    cfg.epsilon = parse_epsilon(opt.epsilon);
    if (opt.tau) cfg.tau_override = opt.tau;
    if (opt.block) cfg.block_override = opt.block;
    cfg.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto fmt = format_from_name(opt.format);
  if (!fmt) {
    err << "error: unknown format " << opt.format << "\n";
    return 2;
  }

  std::vector<std::string> out_paths(opt.files.size());
  if (opt.files.size() > 1) {
    if (opt.output.empty() || !std::filesystem::is_directory(opt.output)) {
      err << "error: several input files need --output pointing to a directory\n";
      return 2;
    }
    for (std::size_t i = 0; i < opt.files.size(); ++i)
      out_paths[i] = (std::filesystem::path(opt.output) / std::filesystem::path(opt.files[i]).filename()).string() +
                     extension(*fmt);
  } else if (!opt.output.empty()) {
    out_paths[0] = opt.output;
  }

  std::vector<FileResult> results(opt.files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < opt.files.size();)
      results[i] = run_file(opt.files[i], opt, cfg, *fmt, out_paths[i]);
  };
  unsigned nthreads = thread_cap(opt.files.size());
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < nthreads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  for (const FileResult& r : results) {
    out << r.out;
    err << r.err;
    code = std::max(code, r.code);
  }
  out.flush();
  return code;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LZ77 factorization in small extra space", "lzscan"};
  app.require_subcommand(1);
  ParseOptions opt;
  CLI::App* parse_cmd = app.add_subcommand("parse", "Factorize one or more files");
  parse_cmd->add_option("files", opt.files, "Input files")->required();
  parse_cmd->add_option("--epsilon", opt.epsilon, "Space parameter, e.g. 1/2 or 0.25");
  parse_cmd->add_option("--format", opt.format, "text, jsonl or binary");
  parse_cmd->add_option("-o,--output", opt.output, "Output file, or directory for several inputs");
  parse_cmd->add_flag("--verify", opt.verify, "Check the parse after producing it");
  parse_cmd->add_flag("--oracle", opt.oracle, "With --verify, compare against the quadratic parser (n <= 1e5)");
  parse_cmd->add_flag("--stats", opt.stats, "Print tier statistics as JSON on stderr");
  parse_cmd->add_option("--tau", opt.tau, "Force tau (testing)")->group("");
  parse_cmd->add_option("--block", opt.block, "Force the block length (testing)")->group("");
  parse_cmd->add_flag("--inject-fault", opt.inject_fault, "Corrupt one factor before verification (testing)")->group("");

  unsigned max_binary = 12, max_ternary = 9;
  CLI::App* self_cmd = app.add_subcommand("selftest", "Compare against the reference parser on all short strings");
  self_cmd->add_option("--binary", max_binary, "Longest binary string");
  self_cmd->add_option("--ternary", max_ternary, "Longest ternary string");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  if (*parse_cmd) return run_parse(opt, out, err);

  SelftestReport rep = exhaustive_check(max_binary, max_ternary);
  out << "selftest: " << rep.strings << " strings, " << rep.failures << " failures, " << rep.seconds << " s\n";
  if (rep.failures) {
    err << "first failure: " << rep.first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lzscan
